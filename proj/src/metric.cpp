#include "lipcap/metric.hpp"

#include <algorithm>
#include <cmath>

#include "lipcap/kdtree.hpp"
#include "lipcap/parallel.hpp"

namespace lipcap {

namespace {

double excess_sq_over(const std::vector<Point>& from, const DiscreteSet& B) {
    if (from.empty()) return 0.0;
    KdTree tree(B.points());
    std::vector<double> nearest(from.size());
    parallel_for(from.size(), [&](size_t lo, size_t hi) {
        for (size_t i = lo; i < hi; ++i) nearest[i] = tree.nearest_sq(from[i]);
    });
    double worst = 0.0;
    for (double v : nearest) worst = std::max(worst, v);
    return worst;
}

void check_dims(const DiscreteSet& A, const DiscreteSet& B) {
    if (A.dimension() != B.dimension())
        throw InvalidInput("sets have different dimensions");
}

}  // namespace

double excess(const DiscreteSet& A, const DiscreteSet& B) {
    check_dims(A, B);
    return std::sqrt(excess_sq_over(A.points(), B));
}

double excess_reference(const DiscreteSet& A, const DiscreteSet& B) {
    check_dims(A, B);
    double worst = 0.0;
    for (const Point& a : A.points()) {
        double best = dist_sq(a, B[0]);
        for (size_t j = 1; j < B.size(); ++j)
            best = std::min(best, dist_sq(a, B[j]));
        worst = std::max(worst, best);
    }
    return std::sqrt(worst);
}

double truncated_excess(const DiscreteSet& A, const DiscreteSet& B, double radius) {
    check_dims(A, B);
    if (!(radius > 0.0) || !std::isfinite(radius))
        throw InvalidInput("truncation radius must be positive");
    double r_sq = radius * radius;
    std::vector<Point> clipped;
    for (const Point& a : A.points())
        if (norm_sq(a) <= r_sq) clipped.push_back(a);
    return std::sqrt(excess_sq_over(clipped, B));
}

double aw_discrepancy(const DiscreteSet& A, const DiscreteSet& B, double radius) {
    return std::max(truncated_excess(A, B, radius), truncated_excess(B, A, radius));
}

double hausdorff(const DiscreteSet& A, const DiscreteSet& B) {
    return std::max(excess(A, B), excess(B, A));
}

DiscreteSet translate_scale(const DiscreteSet& K, const Point& x, double r) {
    if (x.dimension() != K.dimension()) throw InvalidInput("dimension mismatch");
    if (!(r > 0.0) || !std::isfinite(r)) throw InvalidInput("scale must be positive");
    std::vector<Point> moved;
    moved.reserve(K.size());
    for (const Point& p : K.points()) {
        std::vector<double> c(static_cast<size_t>(K.dimension()));
        for (int i = 0; i < K.dimension(); ++i) c[static_cast<size_t>(i)] = (p[i] - x[i]) / r;
        moved.emplace_back(std::move(c));
    }
    return DiscreteSet(K.dimension(), K.resolution() / r, std::move(moved));
}

}  // namespace lipcap
