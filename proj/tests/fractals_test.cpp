#include <lipcap/fractals.hpp>

#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <map>
#include <vector>

using namespace lipcap;

TEST_CASE("middle-thirds abscissas are exact rationals") {
    CHECK(cantor_abscissas(2, 1) ==
          std::vector<double>{0.0, 1.0 / 3.0, 2.0 / 3.0, 1.0});
    CHECK(cantor_abscissas(2, 2) ==
          std::vector<double>{0.0, 1.0 / 9.0, 2.0 / 9.0, 3.0 / 9.0, 6.0 / 9.0, 7.0 / 9.0,
                              8.0 / 9.0, 1.0});
    // three pieces of relative length 1/4 separated by 1/8 gaps
    CHECK(cantor_abscissas(3, 1) ==
          std::vector<double>{0.0, 2.0 / 8.0, 3.0 / 8.0, 5.0 / 8.0, 6.0 / 8.0, 1.0});
}

TEST_CASE("abscissa bounds") {
    CHECK_THROWS_AS(cantor_abscissas(1, 3), InvalidInput);
    CHECK_THROWS_AS(cantor_abscissas(10, 3), InvalidInput);
    CHECK_THROWS_AS(cantor_abscissas(2, 0), InvalidInput);
    CHECK_THROWS_AS(cantor_abscissas(2, 19), InvalidInput);
    CHECK_THROWS_AS(cantor_abscissas(2, 17), InvalidInput);  // 2^18 points
}

TEST_CASE("net structure on the line") {
    for (int depth : {1, 2, 3, 4}) {
        DiscreteSet net = middle_thirds_net(depth);
        CHECK(net.size() == (size_t{2} << depth));
        CHECK(net.dimension() == 2);
        bool zero = false, one = false;
        double min_gap = 1.0;
        auto xs = [&net](size_t i) { return net[i][0]; };
        for (size_t i = 0; i < net.size(); ++i) {
            CHECK(net[i][1] == 0.0);
            if (net[i] == Point{0.0, 0.0}) zero = true;
            if (net[i] == Point{1.0, 0.0}) one = true;
            for (size_t j = i + 1; j < net.size(); ++j)
                min_gap = std::min(min_gap, std::abs(xs(i) - xs(j)));
        }
        CHECK(zero);
        CHECK(one);
        CHECK(min_gap == doctest::Approx(std::pow(3.0, -depth)).epsilon(1e-12));
    }
}

TEST_CASE("stacked cantor layers") {
    CantorStack stack = example_cantor_stack(2, 3, 2);
    CHECK(stack.set.size() == 27);
    CHECK(stack.set.dimension() == 2);

    std::map<double, std::vector<double>> layers;
    bool saw_origin = false;
    for (const Point& p : stack.set.points()) {
        if (p == Point{0.0, 0.0}) {
            saw_origin = true;
            continue;
        }
        layers[p[0]].push_back(p[1]);
    }
    CHECK(saw_origin);
    REQUIRE(layers.size() == 2);
    REQUIRE(layers.count(0.5) == 1);
    REQUIRE(layers.count(1.0 / 3.0) == 1);

    auto& two = layers[0.5];
    std::sort(two.begin(), two.end());
    CHECK(two == std::vector<double>{0.0 / 36.0, 1.0 / 36.0, 2.0 / 36.0, 3.0 / 36.0,
                                     6.0 / 36.0, 7.0 / 36.0, 8.0 / 36.0, 9.0 / 36.0});
    CHECK(layers[1.0 / 3.0].size() == 18);
    for (double y : layers[1.0 / 3.0]) {
        CHECK(y >= 0.0);
        CHECK(y <= 32.0 / 288.0);
    }

    REQUIRE(stack.dims.size() == 2);
    CHECK(stack.dims[0] == std::log(2.0) / std::log(3.0));
    CHECK(stack.dims[1] == std::log(3.0) / std::log(4.0));
}

TEST_CASE("covering constants decay by two thirds per level") {
    CantorStack stack = example_cantor_stack(2, 2, 6);
    REQUIRE(stack.covering_c2.size() == 7);
    CHECK(stack.covering_c2[0] == 0.25);
    for (size_t i = 0; i + 1 < stack.covering_c2.size(); ++i)
        CHECK(stack.covering_c2[i + 1] == stack.covering_c2[i] * (2.0 / 3.0));
    CHECK(stack.covering_c2[6] ==
          doctest::Approx(0.25 * std::pow(2.0 / 3.0, 6)).epsilon(1e-12));
}

TEST_CASE("stack embeds with leading zeros in higher dimension") {
    CantorStack stack = example_cantor_stack(4, 2, 1);
    CHECK(stack.set.dimension() == 4);
    for (const Point& p : stack.set.points()) {
        CHECK(p[0] == 0.0);
        CHECK(p[1] == 0.0);
    }
}

TEST_CASE("stack bounds") {
    CHECK_THROWS_AS(example_cantor_stack(1, 3, 2), InvalidInput);
    CHECK_THROWS_AS(example_cantor_stack(2, 1, 2), InvalidInput);
    CHECK_THROWS_AS(example_cantor_stack(2, 10, 2), InvalidInput);
    CHECK_THROWS_AS(example_cantor_stack(2, 3, 0), InvalidInput);
    CHECK_THROWS_AS(example_cantor_stack(2, 3, 19), InvalidInput);
    CHECK_THROWS_AS(example_cantor_stack(2, 9, 6), InvalidInput);  // 9^6 teeth of points
}

TEST_CASE("first comb tooth stands on the left endpoint") {
    CombExample comb = example_comb(1, 1);
    REQUIRE(comb.info.teeth.size() == 1);
    const CombTooth& t = comb.info.teeth[0];
    CHECK(t.foot == Point{0.0, 0.0});
    CHECK(t.tip == Point{0.0, 0.25});
    CHECK(t.length == 0.25);
    CHECK(t.stage == 1);
    CHECK(comb.info.set_length == 1.25);
    CHECK(comb.info.traversal_length == doctest::Approx(1.5).epsilon(1e-15));
}

TEST_CASE("first-stage feet enumerate reduced fractions") {
    CombExample comb = example_comb(1, 8);
    std::vector<double> feet;
    for (const CombTooth& t : comb.info.teeth) feet.push_back(t.foot[0]);
    CHECK(feet == std::vector<double>{0.0, 1.0, 1.0 / 2.0, 1.0 / 3.0, 2.0 / 3.0,
                                      1.0 / 4.0, 3.0 / 4.0, 1.0 / 5.0});
    for (const CombTooth& t : comb.info.teeth) {
        CHECK(t.foot[1] == 0.0);
        CHECK(t.tip[0] == t.foot[0]);
        CHECK(t.tip[1] == t.length);
    }
}

TEST_CASE("four-tooth single stage pins the advertised length") {
    CombExample comb = example_comb(1, 4);
    CHECK(comb.info.set_length == 1.0 + 0.25 + 0.0625 + 1.0 / 36.0 + 1.0 / 64.0);
    CHECK(comb.info.strokes.size() == 5);
    CHECK(comb.info.strokes[0] == 1.0);
}

TEST_CASE("three stages of four teeth") {
    CombExample comb = example_comb(3, 4);
    CHECK(comb.info.teeth.size() == 84);
    size_t by_stage[4] = {0, 0, 0, 0};
    double stage_sum[4] = {0.0, 0.0, 0.0, 0.0};
    for (const CombTooth& t : comb.info.teeth) {
        REQUIRE(t.stage >= 1);
        REQUIRE(t.stage <= 3);
        by_stage[t.stage] += 1;
        stage_sum[t.stage] += t.length;
        CHECK(t.length > 0.0);
    }
    CHECK(by_stage[1] == 4);
    CHECK(by_stage[2] == 16);
    CHECK(by_stage[3] == 64);
    // every parent sprouts the same length menu
    for (int n = 1; n <= 3; ++n) {
        double menu = 0.0;
        for (int j = 0; j < 4; ++j)
            menu += 1.0 / static_cast<double>((j + 1) * (j + 1) * (n + 1) * (n + 1));
        double parents = (n == 1) ? 1.0 : ((n == 2) ? 4.0 : 16.0);
        CHECK(stage_sum[n] == doctest::Approx(parents * menu).epsilon(1e-12));
    }

    // the walk covers the base once and every tooth twice
    CHECK(comb.info.traversal_length == comb.curve.total_length());
    CHECK(comb.info.traversal_length ==
          doctest::Approx(2.0 * comb.info.set_length - 1.0).epsilon(1e-9));
    CHECK(comb.curve.vertices().size() == 252);
    CHECK(comb.curve.vertices().front() == Point{0.0, 0.0});
    CHECK(comb.curve.vertices().back() == Point{1.0, 0.0});
}

TEST_CASE("deeper stages alternate direction") {
    CombExample comb = example_comb(2, 2);
    for (const CombTooth& t : comb.info.teeth) {
        if (t.stage == 1) {
            CHECK(t.tip[0] == t.foot[0]);
        } else {
            CHECK(t.tip[1] == t.foot[1]);
            CHECK(t.tip[0] == doctest::Approx(t.foot[0] + t.length).epsilon(1e-15));
        }
    }
}

TEST_CASE("comb bounds") {
    CHECK_THROWS_AS(example_comb(0, 3), InvalidInput);
    CHECK_THROWS_AS(example_comb(2, 0), InvalidInput);
    CHECK_THROWS_AS(example_comb(4, 30), InvalidInput);
}
