#pragma once

#include <algorithm>
#include <limits>
#include <numeric>
#include <vector>

#include "lipcap/geometry.hpp"

namespace lipcap {

// exact nearest neighbor: pruning compares squared plane offsets, so the
// returned squared distance matches a brute-force scan bit for bit
class KdTree {
public:
    explicit KdTree(const std::vector<Point>& pts) : pts_(pts) {
        idx_.resize(pts.size());
        std::iota(idx_.begin(), idx_.end(), size_t{0});
        if (!pts_.empty()) root_ = build(0, pts_.size());
    }

    double nearest_sq(const Point& q) const {
        double best = std::numeric_limits<double>::infinity();
        if (root_ >= 0) search(static_cast<size_t>(root_), q, best);
        return best;
    }

private:
    static constexpr size_t kLeaf = 8;

    struct Node {
        int axis = -1;
        double split = 0.0;
        int left = -1, right = -1;
        size_t begin = 0, end = 0;
    };

    int build(size_t begin, size_t end) {
        Node n;
        n.begin = begin;
        n.end = end;
        if (end - begin <= kLeaf) {
            nodes_.push_back(n);
            return static_cast<int>(nodes_.size() - 1);
        }
        int dim = pts_[idx_[begin]].dimension();
        int axis = 0;
        double widest = -1.0;
        for (int a = 0; a < dim; ++a) {
            double lo = pts_[idx_[begin]][a], hi = lo;
            for (size_t i = begin + 1; i < end; ++i) {
                double v = pts_[idx_[i]][a];
                lo = std::min(lo, v);
                hi = std::max(hi, v);
            }
            if (hi - lo > widest) {
                widest = hi - lo;
                axis = a;
            }
        }
        size_t mid = begin + (end - begin) / 2;
        std::nth_element(idx_.begin() + static_cast<long>(begin),
                         idx_.begin() + static_cast<long>(mid),
                         idx_.begin() + static_cast<long>(end),
                         [&](size_t a, size_t b) { return pts_[a][axis] < pts_[b][axis]; });
        n.axis = axis;
        n.split = pts_[idx_[mid]][axis];
        nodes_.push_back(n);
        int self = static_cast<int>(nodes_.size() - 1);
        int l = build(begin, mid);
        int r = build(mid, end);
        nodes_[static_cast<size_t>(self)].left = l;
        nodes_[static_cast<size_t>(self)].right = r;
        return self;
    }

    void search(size_t ni, const Point& q, double& best) const {
        const Node& n = nodes_[ni];
        if (n.axis < 0) {
            for (size_t i = n.begin; i < n.end; ++i)
                best = std::min(best, dist_sq(q, pts_[idx_[i]]));
            return;
        }
        double diff = q[n.axis] - n.split;
        size_t near = diff < 0.0 ? static_cast<size_t>(n.left) : static_cast<size_t>(n.right);
        size_t far = diff < 0.0 ? static_cast<size_t>(n.right) : static_cast<size_t>(n.left);
        search(near, q, best);
        if (!(diff * diff > best)) search(far, q, best);
    }

    const std::vector<Point>& pts_;
    std::vector<size_t> idx_;
    std::vector<Node> nodes_;
    int root_ = -1;
};

}  // namespace lipcap
