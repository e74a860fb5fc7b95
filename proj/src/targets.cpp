#include <lipcap/targets.hpp>

#include <cmath>
#include <set>
#include <utility>

namespace lipcap {

namespace {

Point planar(int d, double x, double y) {
    Point p = zero_point(d);
    p[0] = x;
    p[1] = y;
    return p;
}

std::vector<std::pair<Point, Point>> star(int d, int rays) {
    std::vector<std::pair<Point, Point>> segs;
    for (int j = 0; j < rays; ++j) {
        double theta = 2.0 * M_PI * j / rays;
        segs.emplace_back(zero_point(d), planar(d, std::cos(theta), std::sin(theta)));
    }
    return segs;
}

}  // namespace

std::vector<std::pair<Point, Point>> catalog_segments(int d, int index) {
    double h = std::sqrt(3.0) / 2.0;
    switch (index) {
        case 0:
            return {{planar(d, -1.0, 0.0), planar(d, 1.0, 0.0)}};
        case 1:
            return {{planar(d, -1.0, 0.0), planar(d, 1.0, 0.0)},
                    {planar(d, 0.0, -1.0), planar(d, 0.0, 1.0)}};
        case 2:
            return star(d, 3);
        case 3:
            return {{planar(d, -1.0, 0.0), planar(d, 1.0, 0.0)},
                    {planar(d, -h, 0.5), planar(d, h, 0.5)}};
        case 4:
            return star(d, 5);
        case 5:
            return {{planar(d, -1.0, 0.0), planar(d, 1.0, 0.0)},
                    {planar(d, 0.0, 0.0), planar(d, 0.0, 1.0)},
                    {planar(d, 0.5, 0.0), planar(d, 0.5, h)},
                    {planar(d, -0.5, 0.0), planar(d, -0.5, h)}};
        case 6: {
            double c = std::sqrt(0.5);
            return {{planar(d, -c, -c), planar(d, c, c)}};
        }
        case 7:
            return {{planar(d, 0.0, -1.0), planar(d, 0.0, 1.0)}};
        default: {
            double theta = M_PI / 3.0 + M_PI / (index + 1);
            double c = std::cos(theta);
            double s = std::sin(theta);
            return {{planar(d, -c, -s), planar(d, c, s)}};
        }
    }
}

std::string catalog_name(int index) {
    switch (index) {
        case 0: return "axis-line-x";
        case 1: return "cross";
        case 2: return "star-3";
        case 3: return "parallel-pair";
        case 4: return "star-5";
        case 5: return "half-comb";
        case 6: return "diag-line";
        case 7: return "axis-line-y";
        default: return "line-" + std::to_string(index);
    }
}

TargetLibrary::TargetLibrary(int dimension, double truncation_radius,
                             std::vector<NamedTarget> targets)
    : dimension_(dimension), radius_(truncation_radius), targets_(std::move(targets)) {
    if (dimension_ < 2) {
        throw InvalidInput("target library needs dimension >= 2");
    }
    if (!std::isfinite(radius_) || radius_ <= 0.0) {
        throw InvalidInput("target library needs a positive truncation radius");
    }
    if (targets_.empty()) {
        throw InvalidInput("target library must hold at least one target");
    }
    std::set<std::string> names;
    for (const NamedTarget& t : targets_) {
        if (!names.insert(t.name).second) {
            throw InvalidInput("duplicate target name: " + t.name);
        }
        if (t.set.base().dimension() != dimension_) {
            throw InvalidInput("target dimension mismatch: " + t.name);
        }
        if (t.set.truncation_radius() != radius_) {
            throw InvalidInput("target truncation radius mismatch: " + t.name);
        }
        if (!t.set.contains_origin()) {
            throw InvalidInput("target does not contain the origin: " + t.name);
        }
        if (!unbounded_components_check(t.set)) {
            throw InvalidInput("target has a component not reaching the sphere: " + t.name);
        }
    }
}

TargetLibrary target_library(int d, double R, int m) {
    if (m < 1) {
        throw InvalidInput("target library needs m >= 1");
    }
    if (d < 2) {
        throw InvalidInput("target library needs dimension >= 2");
    }
    if (!std::isfinite(R) || R <= 0.0) {
        throw InvalidInput("target library needs a positive truncation radius");
    }
    double step = 0.005 * R;
    std::vector<NamedTarget> members;
    members.reserve(static_cast<size_t>(m));
    for (int index = 0; index < m; ++index) {
        std::vector<Point> pts;
        for (const auto& [a, b] : catalog_segments(d, index)) {
            double len = dist(a, b) * R;
            int n = std::max(1, static_cast<int>(std::ceil(len / step)));
            for (int i = 0; i <= n; ++i) {
                double u = static_cast<double>(i) / n;
                Point p = zero_point(d);
                for (int c = 0; c < d; ++c) {
                    p[c] = R * (a[c] + u * (b[c] - a[c]));
                }
                pts.push_back(std::move(p));
            }
        }
        DiscreteSet net(d, step, std::move(pts));
        members.push_back({catalog_name(index), TruncatedClosedSet(std::move(net), R, true)});
    }
    return TargetLibrary(d, R, std::move(members));
}

}  // namespace lipcap
