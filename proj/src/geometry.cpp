#include "lipcap/geometry.hpp"

#include <algorithm>
#include <cstdint>
#include <unordered_map>

namespace lipcap {

namespace {

void check_finite(const std::vector<double>& c) {
    for (double v : c) {
        if (!std::isfinite(v)) throw InvalidInput("non-finite coordinate");
    }
}

}  // namespace

Point::Point(std::vector<double> coords) : c_(std::move(coords)) {
    check_finite(c_);
}

Point::Point(std::initializer_list<double> coords) : c_(coords) {
    check_finite(c_);
}

Point Point::operator+(const Point& o) const {
    if (c_.size() != o.c_.size()) throw InvalidInput("dimension mismatch");
    Point r = *this;
    for (size_t i = 0; i < c_.size(); ++i) r.c_[i] += o.c_[i];
    return r;
}

Point Point::operator-(const Point& o) const {
    if (c_.size() != o.c_.size()) throw InvalidInput("dimension mismatch");
    Point r = *this;
    for (size_t i = 0; i < c_.size(); ++i) r.c_[i] -= o.c_[i];
    return r;
}

Point Point::operator*(double s) const {
    Point r = *this;
    for (double& v : r.c_) v *= s;
    return r;
}

double dist_sq(const Point& a, const Point& b) {
    if (a.dimension() != b.dimension()) throw InvalidInput("dimension mismatch");
    double s = 0.0;
    for (int i = 0; i < a.dimension(); ++i) {
        double d = a[i] - b[i];
        s += d * d;
    }
    return s;
}

double dist(const Point& a, const Point& b) { return std::sqrt(dist_sq(a, b)); }

double norm_sq(const Point& a) {
    double s = 0.0;
    for (int i = 0; i < a.dimension(); ++i) s += a[i] * a[i];
    return s;
}

double norm(const Point& a) { return std::sqrt(norm_sq(a)); }

double dot(const Point& a, const Point& b) {
    if (a.dimension() != b.dimension()) throw InvalidInput("dimension mismatch");
    double s = 0.0;
    for (int i = 0; i < a.dimension(); ++i) s += a[i] * b[i];
    return s;
}

Point zero_point(int dimension) {
    return Point(std::vector<double>(static_cast<size_t>(dimension), 0.0));
}

namespace {

// duplicates closer than tol are collapsed, keeping the first occurrence
std::vector<Point> dedup(const std::vector<Point>& pts, int dim, double tol) {
    double tol_sq = tol * tol;
    std::vector<Point> out;
    out.reserve(pts.size());
    if (dim > 8) {
        // grid hashing scans 3^d neighbor cells, too many here
        for (const Point& p : pts) {
            bool dup = false;
            for (const Point& q : out) {
                if (dist_sq(p, q) < tol_sq) { dup = true; break; }
            }
            if (!dup) out.push_back(p);
        }
        return out;
    }
    std::unordered_map<uint64_t, std::vector<size_t>> grid;
    auto cell_of = [&](const Point& p) {
        std::vector<int64_t> cell(static_cast<size_t>(dim));
        for (int i = 0; i < dim; ++i)
            cell[static_cast<size_t>(i)] = static_cast<int64_t>(std::floor(p[i] / tol));
        return cell;
    };
    auto hash_cell = [&](const std::vector<int64_t>& cell) {
        uint64_t h = 1469598103934665603ull;
        for (int64_t v : cell) {
            h ^= static_cast<uint64_t>(v);
            h *= 1099511628211ull;
        }
        return h;
    };
    std::vector<int64_t> nb(static_cast<size_t>(dim));
    for (const Point& p : pts) {
        auto cell = cell_of(p);
        bool dup = false;
        int combos = 1;
        for (int i = 0; i < dim; ++i) combos *= 3;
        for (int m = 0; m < combos && !dup; ++m) {
            int t = m;
            for (int i = 0; i < dim; ++i) {
                nb[static_cast<size_t>(i)] = cell[static_cast<size_t>(i)] + (t % 3) - 1;
                t /= 3;
            }
            auto it = grid.find(hash_cell(nb));
            if (it == grid.end()) continue;
            for (size_t idx : it->second) {
                if (dist_sq(p, out[idx]) < tol_sq) { dup = true; break; }
            }
        }
        if (!dup) {
            grid[hash_cell(cell)].push_back(out.size());
            out.push_back(p);
        }
    }
    return out;
}

}  // namespace

DiscreteSet::DiscreteSet(int dimension, double resolution, std::vector<Point> points)
    : dim_(dimension), res_(resolution), pts_(std::move(points)) {
    if (dim_ < 1) throw InvalidInput("dimension must be at least 1");
    if (!(res_ > 0.0) || !std::isfinite(res_)) throw InvalidInput("resolution must be positive");
    if (pts_.empty()) throw InvalidInput("point set is empty");
    for (const Point& p : pts_) {
        if (p.dimension() != dim_)
            throw InvalidInput("point dimension " + std::to_string(p.dimension()) +
                               " does not match set dimension " + std::to_string(dim_));
    }
    pts_ = dedup(pts_, dim_, res_ / 100.0);
}

double DiscreteSet::diameter() const {
    double best = 0.0;
    for (size_t i = 0; i < pts_.size(); ++i)
        for (size_t j = i + 1; j < pts_.size(); ++j)
            best = std::max(best, dist_sq(pts_[i], pts_[j]));
    return std::sqrt(best);
}

}  // namespace lipcap
