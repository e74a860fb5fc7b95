#include <lipcap/geometry.hpp>

#include <doctest.h>

#include <cmath>
#include <random>

#include "fixtures.hpp"

using namespace lipcap;

TEST_CASE("point arithmetic and norms") {
    Point a{3.0, 4.0};
    Point b{0.0, 0.0};
    CHECK(dist(a, b) == 5.0);
    CHECK(dist_sq(a, b) == 25.0);
    CHECK(norm(a) == 5.0);
    CHECK(dot(a, Point{1.0, 0.0}) == 3.0);
    CHECK((a + b) == a);
    CHECK((a - a) == zero_point(2));
    CHECK((a * 2.0) == Point{6.0, 8.0});
}

TEST_CASE("point rejects bad data") {
    CHECK_THROWS_AS(Point({1.0, std::nan("")}), InvalidInput);
    CHECK_THROWS_AS(Point({std::numeric_limits<double>::infinity()}), InvalidInput);
    CHECK_THROWS_AS(dist(Point{1.0}, Point{1.0, 2.0}), InvalidInput);
    CHECK_THROWS_AS(dot(Point{1.0}, Point{1.0, 2.0}), InvalidInput);
}

TEST_CASE("discrete set validation") {
    std::vector<Point> pts = {Point{0.0, 0.0}, Point{1.0, 0.0}};
    CHECK_THROWS_AS(DiscreteSet(0, 0.1, pts), InvalidInput);
    CHECK_THROWS_AS(DiscreteSet(2, 0.0, pts), InvalidInput);
    CHECK_THROWS_AS(DiscreteSet(2, -1.0, pts), InvalidInput);
    CHECK_THROWS_AS(DiscreteSet(2, 0.1, {}), InvalidInput);
    CHECK_THROWS_AS(DiscreteSet(3, 0.1, pts), InvalidInput);
}

TEST_CASE("dedup collapses points below a hundredth of the resolution") {
    std::vector<Point> pts = {Point{0.0, 0.0}, Point{0.0, 0.0}, Point{1e-5, 0.0},
                              Point{1.0, 0.0}};
    DiscreteSet K(2, 1e-2, pts);
    // tol = 1e-4, so the 1e-5 neighbor merges into the first point
    CHECK(K.size() == 2);
    CHECK(K[0] == Point{0.0, 0.0});
    CHECK(K[1] == Point{1.0, 0.0});

    // at a coarser spacing nothing merges
    DiscreteSet L(2, 1e-2, {Point{0.0, 0.0}, Point{5e-4, 0.0}});
    CHECK(L.size() == 2);
}

TEST_CASE("dedup keeps the first occurrence regardless of order") {
    DiscreteSet K(2, 1.0, {Point{0.5, 0.5}, Point{0.5 + 1e-3, 0.5}, Point{2.0, 2.0}});
    CHECK(K.size() == 2);
    CHECK(K[0] == Point{0.5, 0.5});
}

TEST_CASE("dedup agrees with the quadratic scan on random clouds") {
    std::mt19937_64 rng(7101);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int trial = 0; trial < 20; ++trial) {
        std::vector<Point> pts;
        for (int i = 0; i < 60; ++i) pts.push_back(Point{u(rng), u(rng)});
        // clone some points with tiny jitter to force merges
        for (int i = 0; i < 10; ++i) pts.push_back(Point{pts[static_cast<size_t>(i)][0] + 1e-6,
                                                          pts[static_cast<size_t>(i)][1]});
        DiscreteSet K(2, 0.01, pts);
        double tol_sq = 1e-4 * 1e-4;
        std::vector<Point> ref;
        for (const Point& p : pts) {
            bool dup = false;
            for (const Point& q : ref)
                if (dist_sq(p, q) < tol_sq) { dup = true; break; }
            if (!dup) ref.push_back(p);
        }
        REQUIRE(K.size() == ref.size());
        for (size_t i = 0; i < ref.size(); ++i) CHECK(K[i] == ref[i]);
    }
}

TEST_CASE("diameter of squares and segments") {
    DiscreteSet sq(2, 1e-9, {Point{0.0, 0.0}, Point{1.0, 0.0}, Point{0.0, 1.0}, Point{1.0, 1.0}});
    CHECK(sq.diameter() == std::sqrt(2.0));
    DiscreteSet seg = fixtures::segment_net(Point{0.0, 0.0}, Point{1.0, 0.0}, 0.01, 1e-3);
    CHECK(seg.diameter() == 1.0);
}
