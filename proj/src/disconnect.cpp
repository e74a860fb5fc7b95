#include "lipcap/disconnect.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace lipcap {

MinimaxIndex::MinimaxIndex(DiscreteSet K) : K_(std::move(K)) {
    size_t n = K_.size();
    adj_.assign(n, {});
    if (n < 2) return;
    // Prim, dense graph
    std::vector<double> key(n, std::numeric_limits<double>::infinity());
    std::vector<size_t> parent(n, 0);
    std::vector<bool> done(n, false);
    key[0] = 0.0;
    for (size_t step = 0; step < n; ++step) {
        size_t u = n;
        double best = std::numeric_limits<double>::infinity();
        for (size_t i = 0; i < n; ++i)
            if (!done[i] && key[i] < best) { best = key[i]; u = i; }
        done[u] = true;
        if (u != 0) {
            adj_[u].emplace_back(parent[u], key[u]);
            adj_[parent[u]].emplace_back(u, key[u]);
        }
        for (size_t v = 0; v < n; ++v) {
            if (done[v]) continue;
            double w = dist_sq(K_[u], K_[v]);
            if (w < key[v]) { key[v] = w; parent[v] = u; }
        }
    }
}

std::vector<double> MinimaxIndex::bottleneck_sq_from(size_t root) const {
    size_t n = K_.size();
    std::vector<double> bn(n, std::numeric_limits<double>::infinity());
    std::vector<size_t> stack = {root};
    bn[root] = 0.0;
    while (!stack.empty()) {
        size_t u = stack.back();
        stack.pop_back();
        for (auto [v, w] : adj_[u]) {
            if (bn[v] != std::numeric_limits<double>::infinity()) continue;
            bn[v] = std::max(bn[u], w);
            stack.push_back(v);
        }
    }
    return bn;
}

double MinimaxIndex::bottleneck(size_t i, size_t j) const {
    if (i >= K_.size() || j >= K_.size()) throw InvalidInput("index out of range");
    return std::sqrt(bottleneck_sq_from(i)[j]);
}

size_t MinimaxIndex::locate(const Point& x) const {
    size_t best = 0;
    double best_sq = dist_sq(x, K_[0]);
    for (size_t i = 1; i < K_.size(); ++i) {
        double d = dist_sq(x, K_[i]);
        if (d < best_sq) { best_sq = d; best = i; }
    }
    double tol = K_.resolution();
    if (best_sq > tol * tol) throw InvalidInput("point is not on the set at its resolution");
    return best;
}

double MinimaxIndex::mst_total_weight() const {
    double total = 0.0;
    for (size_t u = 0; u < adj_.size(); ++u)
        for (auto [v, w] : adj_[u])
            if (v > u) total += std::sqrt(w);
    return total;
}

double bottleneck_gap(const DiscreteSet& K, const Point& x, const Point& y) {
    MinimaxIndex index(K);
    size_t i = index.locate(x);
    size_t j = index.locate(y);
    if (i == j) throw InvalidInput("query points coincide on the set");
    return index.bottleneck(i, j);
}

DisconnectionReport estimate_lambda(const DiscreteSet& K) {
    if (K.size() < 2) throw InvalidInput("need at least two points");
    MinimaxIndex index(K);
    size_t n = K.size();

    double best_ratio_sq = std::numeric_limits<double>::infinity();
    for (size_t i = 0; i < n; ++i) {
        auto bn = index.bottleneck_sq_from(i);
        for (size_t j = i + 1; j < n; ++j)
            best_ratio_sq = std::min(best_ratio_sq, bn[j] / dist_sq(K[i], K[j]));
    }

    // near-ties happen in exact-ratio families; prefer the widest pair, then
    // lexicographic order, so the witness is stable
    double window = best_ratio_sq * (1.0 + 5e-12);
    size_t wa = 0, wb = 1;
    double w_d_sq = -1.0;
    bool have = false;
    for (size_t i = 0; i < n; ++i) {
        auto bn = index.bottleneck_sq_from(i);
        for (size_t j = i + 1; j < n; ++j) {
            double d_sq = dist_sq(K[i], K[j]);
            if (bn[j] / d_sq > window) continue;
            bool take = false;
            if (!have || d_sq > w_d_sq * (1.0 + 1e-12)) {
                take = true;
            } else if (d_sq > w_d_sq * (1.0 - 1e-12)) {
                auto cur = std::minmax(K[wa], K[wb]);
                auto cand = std::minmax(K[i], K[j]);
                take = std::make_pair(cand.first, cand.second) <
                       std::make_pair(cur.first, cur.second);
            }
            if (take) { wa = i; wb = j; w_d_sq = d_sq; have = true; }
        }
    }

    DisconnectionReport rep;
    rep.witness_a = K[wa];
    rep.witness_b = K[wb];
    rep.pair_count = n * (n - 1) / 2;
    rep.lambda = index.bottleneck(wa, wb) / dist(K[wa], K[wb]);
    return rep;
}

}  // namespace lipcap
