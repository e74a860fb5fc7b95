#include <lipcap/tangent.hpp>

#include <lipcap/metric.hpp>

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <utility>

namespace lipcap {

namespace {

double dist_sq_to_set(const DiscreteSet& K, const Point& x) {
    double best = std::numeric_limits<double>::infinity();
    for (const Point& p : K.points()) {
        best = std::min(best, dist_sq(p, x));
    }
    return best;
}

void require_on_set(const DiscreteSet& K, const Point& x, const char* what) {
    if (x.dimension() != K.dimension()) {
        throw InvalidInput(std::string(what) + ": dimension mismatch");
    }
    double tol = K.resolution() * (1.0 + 1e-9);
    if (dist_sq_to_set(K, x) > tol * tol) {
        throw InvalidInput(std::string(what) + ": point lies farther than the set resolution");
    }
}

}  // namespace

TruncatedClosedSet::TruncatedClosedSet(DiscreteSet base, double truncation_radius,
                                       bool contains_origin)
    : base_(std::move(base)), radius_(truncation_radius), contains_origin_(contains_origin) {
    if (!std::isfinite(radius_) || radius_ <= 0.0) {
        throw InvalidInput("truncation radius must be positive and finite");
    }
    double limit = radius_ * (1.0 + 1e-12);
    for (const Point& p : base_.points()) {
        if (std::sqrt(norm_sq(p)) > limit) {
            throw InvalidInput("truncated set has a point outside the truncation ball");
        }
    }
    if (contains_origin_) {
        double tol = base_.resolution() * (1.0 + 1e-9);
        if (dist_sq_to_set(base_, zero_point(base_.dimension())) > tol * tol) {
            throw InvalidInput("set marked as containing the origin has no point near 0");
        }
    }
}

ScaleSchedule::ScaleSchedule(std::vector<double> scales, std::string law)
    : scales_(std::move(scales)), law_(std::move(law)) {
    if (scales_.empty()) {
        throw InvalidInput("scale schedule must be nonempty");
    }
    for (size_t i = 0; i < scales_.size(); ++i) {
        if (!std::isfinite(scales_[i]) || scales_[i] <= 0.0) {
            throw InvalidInput("scales must be positive and finite");
        }
        if (i > 0 && !(scales_[i] < scales_[i - 1])) {
            throw InvalidInput("scales must be strictly decreasing");
        }
    }
}

ScaleSchedule geometric_schedule(double base, double ratio, int count) {
    if (!(base > 0.0) || !(ratio > 0.0) || !(ratio < 1.0) || count < 1) {
        throw InvalidInput("geometric schedule needs base > 0, 0 < ratio < 1, count >= 1");
    }
    std::vector<double> scales(static_cast<size_t>(count));
    double value = base;
    for (int i = 0; i < count; ++i) {
        scales[static_cast<size_t>(i)] = value;
        value *= ratio;
    }
    return ScaleSchedule(std::move(scales), "geometric");
}

TruncatedClosedSet blowup(const DiscreteSet& K, const Point& x, double r, double R) {
    if (!std::isfinite(r) || r <= 0.0 || !std::isfinite(R) || R <= 0.0) {
        throw InvalidInput("blowup needs positive finite scale and radius");
    }
    require_on_set(K, x, "blowup basepoint");
    if (r * R < K.resolution()) {
        throw InvalidInput("blowup scale magnifies below the set resolution");
    }
    DiscreteSet view = translate_scale(K, x, r);
    double limit = R * (1.0 + 1e-12);
    std::vector<Point> kept;
    for (const Point& p : view.points()) {
        if (std::sqrt(norm_sq(p)) <= limit) {
            kept.push_back(p);
        }
    }
    return TruncatedClosedSet(DiscreteSet(view.dimension(), view.resolution(), std::move(kept)),
                              R, true);
}

namespace {

ConvergenceProfile run_profile(const DiscreteSet& K, const std::vector<Point>& basepoints,
                               const ScaleSchedule& s, const TruncatedClosedSet& T, double tol) {
    if (!std::isfinite(tol) || tol <= 0.0) {
        throw InvalidInput("tolerance must be positive");
    }
    if (!T.contains_origin()) {
        throw InvalidInput("tangent target must contain the origin");
    }
    if (T.base().dimension() != K.dimension()) {
        throw InvalidInput("target dimension does not match the set");
    }
    double R = T.truncation_radius();
    if (s.finest() * R < K.resolution()) {
        throw InvalidInput("finest scale magnifies below the set resolution");
    }
    ConvergenceProfile profile;
    profile.radius = R;
    profile.tolerance = tol;
    profile.rows.reserve(s.scales().size());
    for (size_t i = 0; i < s.scales().size(); ++i) {
        TruncatedClosedSet view = blowup(K, basepoints[i], s.scales()[i], R);
        ProfileRow row;
        row.scale = s.scales()[i];
        row.basepoint = basepoints[i];
        row.discrepancy = aw_discrepancy(view.base(), T.base(), R);
        profile.rows.push_back(std::move(row));
    }
    profile.verdict = profile.rows.back().discrepancy <= tol;
    return profile;
}

}  // namespace

ConvergenceProfile approximates_tangent(const DiscreteSet& K, const Point& x,
                                        const ScaleSchedule& s, const TruncatedClosedSet& T,
                                        double tol) {
    require_on_set(K, x, "tangent basepoint");
    std::vector<Point> basepoints(s.scales().size(), x);
    return run_profile(K, basepoints, s, T, tol);
}

ConvergenceProfile pseudotangent_witness(const DiscreteSet& K, const Point& x,
                                         const std::vector<Point>& basepoints,
                                         const ScaleSchedule& s, const TruncatedClosedSet& T,
                                         double tol) {
    if (basepoints.size() != s.scales().size()) {
        throw InvalidInput("need one basepoint per scale");
    }
    if (x.dimension() != K.dimension()) {
        throw InvalidInput("pseudotangent anchor: dimension mismatch");
    }
    double slack = 2.0 * K.resolution();
    double previous = std::numeric_limits<double>::infinity();
    for (const Point& b : basepoints) {
        require_on_set(K, b, "pseudotangent basepoint");
        double d = dist(b, x);
        if (d > previous + slack) {
            throw InvalidInput("basepoints must drift toward the anchor");
        }
        previous = d;
    }
    return run_profile(K, basepoints, s, T, tol);
}

bool unbounded_components_check(const TruncatedClosedSet& T) {
    const std::vector<Point>& pts = T.base().points();
    size_t n = pts.size();
    double link = 3.0 * T.base().resolution();
    double link_sq = link * link;

    std::vector<size_t> parent(n);
    std::iota(parent.begin(), parent.end(), size_t{0});
    auto find = [&parent](size_t v) {
        while (parent[v] != v) {
            parent[v] = parent[parent[v]];
            v = parent[v];
        }
        return v;
    };
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = i + 1; j < n; ++j) {
            if (dist_sq(pts[i], pts[j]) <= link_sq) {
                parent[find(i)] = find(j);
            }
        }
    }

    double reach = T.truncation_radius() - link;
    std::vector<char> reaches(n, 0);
    for (size_t i = 0; i < n; ++i) {
        if (std::sqrt(norm_sq(pts[i])) >= reach) {
            reaches[find(i)] = 1;
        }
    }
    for (size_t i = 0; i < n; ++i) {
        if (find(i) == i && !reaches[i]) {
            return false;
        }
    }
    return true;
}

}  // namespace lipcap
