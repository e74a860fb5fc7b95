#include <lipcap/metric.hpp>

#include <doctest.h>

#include <cmath>
#include <random>

#include "fixtures.hpp"

using namespace lipcap;
using fixtures::segment_net;

namespace {

DiscreteSet unit_segment_net() {
    return segment_net(Point{0.0, 0.0}, Point{1.0, 0.0}, 0.01, 1e-3);
}

DiscreteSet origin_only() { return DiscreteSet(2, 1e-3, {Point{0.0, 0.0}}); }

double oracle_truncated(const DiscreteSet& A, const DiscreteSet& B, double r) {
    double worst = 0.0;
    bool any = false;
    for (const Point& a : A.points()) {
        if (norm_sq(a) > r * r) continue;
        any = true;
        double best = std::numeric_limits<double>::infinity();
        for (const Point& b : B.points()) best = std::min(best, fixtures::oracle_dist_sq(a, b));
        worst = std::max(worst, best);
    }
    return any ? std::sqrt(worst) : 0.0;
}

}  // namespace

TEST_CASE("excess is asymmetric on a segment against its endpoint") {
    DiscreteSet A = unit_segment_net();
    DiscreteSet B = origin_only();
    CHECK(excess(A, B) == 1.0);
    CHECK(excess(B, A) == 0.0);
    CHECK(excess(A, B) != excess(B, A));
}

TEST_CASE("excess of a set against itself is zero") {
    DiscreteSet A = unit_segment_net();
    CHECK(excess(A, A) == 0.0);
    DiscreteSet C = fixtures::graded_circle_net();
    CHECK(excess(C, C) == 0.0);
}

TEST_CASE("excess rejects dimension mismatch") {
    DiscreteSet A = unit_segment_net();
    DiscreteSet B(3, 1e-3, {Point{0.0, 0.0, 0.0}});
    CHECK_THROWS_AS(excess(A, B), InvalidInput);
}

TEST_CASE("truncated excess clips the first argument only") {
    // ray built as the unit segment net extended to 10, so the clipped part
    // shares its points with the short net verbatim
    std::vector<Point> ray_pts = unit_segment_net().points();
    DiscreteSet tail = segment_net(Point{1.0, 0.0}, Point{10.0, 0.0}, 0.01, 1e-3);
    for (const Point& p : tail.points()) ray_pts.push_back(p);
    DiscreteSet ray(2, 1e-3, ray_pts);
    DiscreteSet seg = unit_segment_net();
    CHECK(truncated_excess(ray, seg, 1.0) == 0.0);
    CHECK(truncated_excess(seg, ray, 1.0) == 0.0);

    DiscreteSet B = origin_only();
    double got = truncated_excess(seg, B, 0.5);
    CHECK(got == 0.5);
    CHECK(got == oracle_truncated(seg, B, 0.5));
}

TEST_CASE("empty clip contributes zero") {
    DiscreteSet A(2, 1e-3, {Point{5.0, 0.0}});
    DiscreteSet B = unit_segment_net();
    CHECK(truncated_excess(A, B, 1.0) == 0.0);
}

TEST_CASE("truncated excess grows with the radius") {
    std::mt19937_64 rng(4441);
    for (int trial = 0; trial < 10; ++trial) {
        DiscreteSet A(2, 1e-6, fixtures::random_points(rng, 30, 2));
        DiscreteSet B(2, 1e-6, fixtures::random_points(rng, 30, 2));
        double prev = 0.0;
        for (double r : {0.2, 0.5, 1.0, 2.0, 4.0}) {
            double cur = truncated_excess(A, B, r);
            CHECK(cur >= prev);
            prev = cur;
        }
    }
}

TEST_CASE("aw discrepancy of offset parallel lines equals the offset") {
    std::vector<Point> low, high;
    for (int i = 0; i <= 800; ++i) {
        double x = -2.0 + 4.0 * (static_cast<double>(i) / 800.0);
        low.push_back(Point{x, 0.0});
        high.push_back(Point{x, 0.1});
    }
    DiscreteSet A(2, 1e-3, low);
    DiscreteSet B(2, 1e-3, high);
    double got = aw_discrepancy(A, B, 1.0);
    CHECK(got == doctest::Approx(0.1).epsilon(1e-14));
    CHECK(aw_discrepancy(A, A, 1.0) == 0.0);
}

TEST_CASE("aw discrepancy cross versus line is driven by the vertical arm") {
    std::vector<Point> cross_pts = segment_net(Point{-2.0, 0.0}, Point{2.0, 0.0}, 0.005, 1e-3).points();
    DiscreteSet arm = segment_net(Point{0.0, -2.0}, Point{0.0, 2.0}, 0.005, 1e-3);
    for (const Point& p : arm.points()) cross_pts.push_back(p);
    DiscreteSet cross(2, 1e-3, cross_pts);
    DiscreteSet line = segment_net(Point{-2.0, 0.0}, Point{2.0, 0.0}, 0.005, 1e-3);
    double got = aw_discrepancy(cross, line, 1.0);
    CHECK(got == 1.0);
    // the farthest clipped point is the top of the vertical arm
    CHECK(got == std::max(oracle_truncated(cross, line, 1.0), oracle_truncated(line, cross, 1.0)));
}

TEST_CASE("translate scale maps the center to the origin") {
    DiscreteSet A(2, 1e-3, {Point{1.0, 1.0}});
    DiscreteSet out = translate_scale(A, Point{1.0, 1.0}, 0.5);
    CHECK(out.size() == 1);
    CHECK(out[0] == Point{0.0, 0.0});
    CHECK(out.resolution() == 1e-3 / 0.5);
}

TEST_CASE("translate scale dilates exactly for power-of-two ratios") {
    DiscreteSet A = unit_segment_net();
    DiscreteSet out = translate_scale(A, Point{0.0, 0.0}, 0.5);
    REQUIRE(out.size() == A.size());
    for (size_t i = 0; i < A.size(); ++i) {
        CHECK(out[i][0] == A[i][0] * 2.0);
        CHECK(out[i][1] == 0.0);
    }
}

TEST_CASE("translate scale round trip restores the set") {
    DiscreteSet A(2, 1e-6,
                  {Point{0.25, -1.0}, Point{1.5, 2.0}, Point{-0.75, 0.5}, Point{3.0, -2.25}});
    Point x{0.25, -1.0};
    double r = 0.5;
    DiscreteSet fwd = translate_scale(A, x, r);
    DiscreteSet back = translate_scale(fwd, (x * -1.0) * (1.0 / r), 1.0 / r);
    REQUIRE(back.size() == A.size());
    for (size_t i = 0; i < A.size(); ++i) CHECK(back[i] == A[i]);
    CHECK(back.resolution() == doctest::Approx(A.resolution()).epsilon(1e-15));
}

TEST_CASE("translate scale preserves distance ratios") {
    // dyadic data: every intermediate value is representable, so equality is exact
    DiscreteSet A(2, 1e-6, {Point{0.0, 0.0}, Point{1.0, 0.0}, Point{0.5, 0.25}, Point{-2.0, 1.5}});
    DiscreteSet out = translate_scale(A, Point{1.0, 2.0}, 0.25);
    for (size_t i = 0; i < A.size(); ++i)
        for (size_t j = i + 1; j < A.size(); ++j)
            CHECK(dist(out[i], out[j]) == dist(A[i], A[j]) / 0.25);

    std::mt19937_64 rng(909);
    DiscreteSet R(3, 1e-6, fixtures::random_points(rng, 20, 3));
    DiscreteSet S = translate_scale(R, Point{0.3, -0.7, 0.1}, 0.037);
    for (size_t i = 0; i < R.size(); ++i)
        for (size_t j = i + 1; j < R.size(); ++j) {
            double want = dist(R[i], R[j]) / 0.037;
            CHECK(dist(S[i], S[j]) == doctest::Approx(want).epsilon(1e-12));
        }
}

TEST_CASE("translate scale rejects nonpositive ratio") {
    DiscreteSet A = unit_segment_net();
    CHECK_THROWS_AS(translate_scale(A, Point{0.0, 0.0}, 0.0), InvalidInput);
    CHECK_THROWS_AS(translate_scale(A, Point{0.0, 0.0}, -1.0), InvalidInput);
}

TEST_CASE("excess triangle bound over random sets") {
    std::mt19937_64 rng(22021);
    for (int trial = 0; trial < 25; ++trial) {
        DiscreteSet A(2, 1e-6, fixtures::random_points(rng, 15, 2));
        DiscreteSet B(2, 1e-6, fixtures::random_points(rng, 15, 2));
        DiscreteSet C(2, 1e-6, fixtures::random_points(rng, 15, 2));
        CHECK(excess(A, C) <= excess(A, B) + excess(B, C) + 1e-12);
    }
}

TEST_CASE("excess vanishes exactly on subsets and not otherwise") {
    std::mt19937_64 rng(5150);
    std::vector<Point> pts = fixtures::random_points(rng, 25, 2);
    DiscreteSet B(2, 1e-6, pts);
    DiscreteSet A(2, 1e-6, {pts[3], pts[10], pts[17]});
    CHECK(excess(A, B) == 0.0);
    DiscreteSet A2(2, 1e-6, {pts[3], Point{pts[10][0] + 1e-5, pts[10][1]}});
    CHECK(excess(A2, B) > 0.0);
}

TEST_CASE("tree-accelerated excess matches the quadratic reference bitwise") {
    std::mt19937_64 rng(80486);
    std::uniform_int_distribution<size_t> sz(1, 120);
    for (int trial = 0; trial < 20; ++trial) {
        DiscreteSet A(3, 1e-9, fixtures::random_points(rng, sz(rng), 3));
        DiscreteSet B(3, 1e-9, fixtures::random_points(rng, sz(rng), 3));
        double fast = excess(A, B);
        double slow = excess_reference(A, B);
        CHECK(fast == slow);
        CHECK(slow == fixtures::oracle_excess(A, B));
    }
}

TEST_CASE("hausdorff is the larger one-sided excess") {
    std::mt19937_64 rng(31337);
    DiscreteSet A(2, 1e-6, fixtures::random_points(rng, 40, 2));
    DiscreteSet B(2, 1e-6, fixtures::random_points(rng, 35, 2));
    CHECK(hausdorff(A, B) == std::max(excess(A, B), excess(B, A)));
    CHECK(hausdorff(A, B) == hausdorff(B, A));
}
