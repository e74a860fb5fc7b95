#pragma once

#include <vector>

#include "lipcap/geometry.hpp"

namespace lipcap {

struct DisconnectionReport {
    double lambda = 0.0;
    Point witness_a, witness_b;
    size_t pair_count = 0;
};

// minimum spanning tree over the set; the largest edge on the tree path
// between two points is the smallest chain step that joins them
class MinimaxIndex {
public:
    explicit MinimaxIndex(DiscreteSet K);

    const DiscreteSet& set() const { return K_; }

    // squared bottleneck from root to every point, tree path maxima
    std::vector<double> bottleneck_sq_from(size_t root) const;
    double bottleneck(size_t i, size_t j) const;

    // index of the point matching x within the set resolution
    size_t locate(const Point& x) const;

    double mst_total_weight() const;

    // tree adjacency, entries (neighbor index, squared edge weight)
    const std::vector<std::vector<std::pair<size_t, double>>>& adjacency() const { return adj_; }

private:
    DiscreteSet K_;
    std::vector<std::vector<std::pair<size_t, double>>> adj_;  // (neighbor, w_sq)
};

double bottleneck_gap(const DiscreteSet& K, const Point& x, const Point& y);

// smallest ratio of chain bottleneck to pair distance over all pairs
DisconnectionReport estimate_lambda(const DiscreteSet& K);

}  // namespace lipcap
