#include "lipcap/curve.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "lipcap/disconnect.hpp"
#include "lipcap/kdtree.hpp"
#include "lipcap/metric.hpp"

namespace lipcap {

PolylineCurve::PolylineCurve(int dimension, std::vector<Point> vertices)
    : dim_(dimension), verts_(std::move(vertices)) {
    if (dim_ < 1) throw InvalidInput("dimension must be at least 1");
    if (verts_.size() < 2) throw InvalidInput("curve needs at least two vertices");
    cum_.resize(verts_.size());
    cum_[0] = 0.0;
    for (size_t i = 0; i < verts_.size(); ++i) {
        if (verts_[i].dimension() != dim_) throw InvalidInput("vertex dimension mismatch");
        if (i == 0) continue;
        if (verts_[i] == verts_[i - 1]) throw InvalidInput("consecutive duplicate vertices");
        cum_[i] = cum_[i - 1] + dist(verts_[i - 1], verts_[i]);
    }
    if (!(cum_.back() > 0.0)) throw InvalidInput("curve has zero length");
}

Point PolylineCurve::evaluate(double t) const {
    if (t < -1e-12 || t > 1.0 + 1e-12) throw InvalidInput("parameter out of [0,1]");
    if (t <= 0.0) return verts_.front();
    if (t >= 1.0) return verts_.back();
    double target = t * cum_.back();
    // largest i with cum_[i] <= target, so exact vertex hits return the vertex
    auto it = std::upper_bound(cum_.begin(), cum_.end(), target);
    size_t i = static_cast<size_t>(it - cum_.begin()) - 1;
    if (i >= verts_.size() - 1) return verts_.back();
    double seg = cum_[i + 1] - cum_[i];
    double u = (target - cum_[i]) / seg;
    if (u <= 0.0) return verts_[i];
    Point p = verts_[i];
    for (int c = 0; c < dim_; ++c) p[c] += u * (verts_[i + 1][c] - verts_[i][c]);
    return p;
}

double PolylineCurve::parameter_at_vertex(size_t i) const {
    if (i >= verts_.size()) throw InvalidInput("vertex index out of range");
    return cum_[i] / cum_.back();
}

double arc_length(const PolylineCurve& curve) { return curve.total_length(); }

namespace {

double dist_sq_to_segment(const Point& A, const Point& B, const Point& p) {
    double seg_sq = dist_sq(A, B);
    double u = 0.0;
    if (seg_sq > 0.0) {
        double proj = 0.0;
        for (int c = 0; c < p.dimension(); ++c) proj += (p[c] - A[c]) * (B[c] - A[c]);
        u = std::clamp(proj / seg_sq, 0.0, 1.0);
    }
    double s = 0.0;
    for (int c = 0; c < p.dimension(); ++c) {
        double d = A[c] + u * (B[c] - A[c]) - p[c];
        s += d * d;
    }
    return s;
}

}  // namespace

double dist_to_curve(const PolylineCurve& curve, const Point& p) {
    const auto& v = curve.vertices();
    double best = std::numeric_limits<double>::infinity();
    for (size_t i = 0; i + 1 < v.size(); ++i)
        best = std::min(best, dist_sq_to_segment(v[i], v[i + 1], p));
    return std::sqrt(best);
}

std::optional<std::pair<double, double>> segment_ball_overlap(const Point& A, const Point& B,
                                                              const Point& c, double r) {
    // |A - c + u (B - A)|^2 <= r^2 as a quadratic in u
    double c2 = dist_sq(A, B);
    double c1 = 0.0, c0 = -r * r;
    for (int i = 0; i < A.dimension(); ++i) {
        double w = A[i] - c[i];
        c1 += 2.0 * w * (B[i] - A[i]);
        c0 += w * w;
    }
    if (c2 == 0.0) {
        if (c0 <= 0.0) return std::make_pair(0.0, 1.0);
        return std::nullopt;
    }
    double disc = c1 * c1 - 4.0 * c2 * c0;
    if (disc < 0.0) return std::nullopt;
    double sq = std::sqrt(disc);
    double lo = (-c1 - sq) / (2.0 * c2);
    double hi = (-c1 + sq) / (2.0 * c2);
    lo = std::max(lo, 0.0);
    hi = std::min(hi, 1.0);
    if (lo > hi) return std::nullopt;
    return std::make_pair(lo, hi);
}

CaptureCertificate base_capture(const DiscreteSet& K) {
    if (K.size() < 2) throw InvalidInput("need at least two points");
    MinimaxIndex index(K);
    const auto& adj = index.adjacency();
    size_t n = K.size();

    size_t root = 0;
    for (size_t i = 1; i < n; ++i)
        if (K[i] < K[root]) root = i;

    // preorder walk of the tree, consecutive visits joined by segments
    std::vector<size_t> order;
    order.reserve(n);
    std::vector<bool> seen(n, false);
    std::vector<size_t> stack = {root};
    while (!stack.empty()) {
        size_t u = stack.back();
        stack.pop_back();
        if (seen[u]) continue;
        seen[u] = true;
        order.push_back(u);
        std::vector<size_t> kids;
        for (auto [v, w] : adj[u])
            if (!seen[v]) kids.push_back(v);
        std::sort(kids.begin(), kids.end(), [&](size_t a, size_t b) { return K[b] < K[a]; });
        for (size_t v : kids) stack.push_back(v);
    }

    std::vector<Point> verts;
    verts.reserve(order.size());
    for (size_t idx : order) {
        if (!verts.empty() && verts.back() == K[idx]) continue;
        verts.push_back(K[idx]);
    }
    PolylineCurve curve(K.dimension(), std::move(verts));

    std::vector<size_t> vertex_of(n, 0);
    {
        size_t vi = 0;
        std::vector<bool> assigned(n, false);
        for (size_t oi = 0; oi < order.size(); ++oi) {
            if (oi > 0 && !(K[order[oi]] == K[order[oi - 1]])) ++vi;
            if (!assigned[order[oi]]) {
                vertex_of[order[oi]] = vi;
                assigned[order[oi]] = true;
            }
        }
    }
    std::vector<double> params(n);
    for (size_t i = 0; i < n; ++i) params[i] = curve.parameter_at_vertex(vertex_of[i]);

    double coverage = 0.0;
    for (size_t i = 0; i < n; ++i)
        coverage = std::max(coverage, dist(curve.vertices()[vertex_of[i]], K[i]));

    return CaptureCertificate{std::move(curve), K, coverage, std::move(params)};
}

namespace {

// smallest distance from p to any segment of the curve other than segments
// touching index i; used as the isolation test for density windows
double clearance_from_rest(const PolylineCurve& curve, size_t i, const Point& p) {
    const auto& v = curve.vertices();
    double best = std::numeric_limits<double>::infinity();
    for (size_t j = 0; j + 1 < v.size(); ++j) {
        if (j + 1 >= i && j <= i + 1) continue;  // segment i and its neighbors
        best = std::min(best, dist_sq_to_segment(v[j], v[j + 1], p));
    }
    return std::sqrt(best);
}

}  // namespace

double density_one_parameter(const PolylineCurve& curve, double t) {
    if (!(t > 0.0 && t < 1.0)) throw InvalidInput("parameter must be interior");
    const auto& v = curve.vertices();
    double total = curve.total_length();
    double target = t * total;

    std::vector<size_t> segs;
    for (size_t i = 0; i + 1 < v.size(); ++i) {
        if (target >= curve.cumulative_length(i) - 1e-12 * total &&
            target <= curve.cumulative_length(i + 1) + 1e-12 * total)
            segs.push_back(i);
    }
    if (segs.empty()) segs.push_back(v.size() - 2);
    if (segs.size() > 1) {
        // at a shared vertex, try the segment whose interior is nearer first
        std::sort(segs.begin(), segs.end(), [&](size_t a, size_t b) {
            double ca = std::abs(target - 0.5 * (curve.cumulative_length(a) +
                                                 curve.cumulative_length(a + 1)));
            double cb = std::abs(target - 0.5 * (curve.cumulative_length(b) +
                                                 curve.cumulative_length(b + 1)));
            return ca < cb;
        });
    }

    for (size_t i : segs) {
        double lo = curve.cumulative_length(i), hi = curve.cumulative_length(i + 1);
        double seg = hi - lo;
        double u0 = std::clamp((target - lo) / seg, 0.1, 0.9);
        std::vector<double> cand = {u0};
        for (int k = 1; k <= 8; ++k) {
            double step = 0.05 * k;
            if (u0 + step <= 0.9) cand.push_back(u0 + step);
            if (u0 - step >= 0.1) cand.push_back(u0 - step);
        }
        for (double u : cand) {
            Point p = v[i];
            for (int c = 0; c < curve.dimension(); ++c) p[c] += u * (v[i + 1][c] - v[i][c]);
            double window = seg / 10.0;
            if (clearance_from_rest(curve, i, p) >= window)
                return (lo + u * seg) / total;
        }
    }
    throw ConstructionError("no density-one parameter near t");
}

GapInterval gap_interval(const PolylineCurve& g, const DiscreteSet& K, double a, double b,
                         double lambda) {
    if (g.dimension() != K.dimension()) throw InvalidInput("dimension mismatch");
    double lo = std::min(a, b), hi = std::max(a, b);
    if (!(lo >= 0.0 && hi <= 1.0 && lo < hi)) throw InvalidInput("bad parameter window");
    double eps = K.resolution();
    Point ga = g.evaluate(a), gb = g.evaluate(b);
    KdTree tree(K.points());
    if (std::sqrt(tree.nearest_sq(ga)) > eps * (1.0 + 1e-9) ||
        std::sqrt(tree.nearest_sq(gb)) > eps * (1.0 + 1e-9))
        throw InvalidInput("window endpoints are not on the set");
    double span = dist(ga, gb);
    if (span == 0.0) throw InvalidInput("window endpoints coincide");

    // parameter intervals where the curve sits inside the eps-neighborhood of K
    const auto& v = g.vertices();
    double total = g.total_length();
    std::vector<std::pair<double, double>> covered;
    for (size_t i = 0; i + 1 < v.size(); ++i) {
        double c0 = g.cumulative_length(i) / total;
        double c1 = g.cumulative_length(i + 1) / total;
        if (c1 < lo || c0 > hi) continue;
        for (const Point& p : K.points()) {
            if (dist_sq_to_segment(v[i], v[i + 1], p) > eps * eps) continue;
            auto ov = segment_ball_overlap(v[i], v[i + 1], p, eps);
            if (!ov) continue;
            covered.emplace_back(c0 + ov->first * (c1 - c0), c0 + ov->second * (c1 - c0));
        }
    }
    std::sort(covered.begin(), covered.end());
    std::vector<std::pair<double, double>> merged;
    for (auto& iv : covered) {
        if (!merged.empty() && iv.first <= merged.back().second + 1e-15) {
            merged.back().second = std::max(merged.back().second, iv.second);
        } else {
            merged.push_back(iv);
        }
    }

    struct Gap {
        double s, t, jump;
    };
    std::vector<Gap> gaps;
    double cursor = lo;
    for (auto& iv : merged) {
        if (iv.first > hi) break;
        if (iv.first > cursor && cursor > lo) {
            double s = cursor, t = std::min(iv.first, hi);
            if (t > s) gaps.push_back({s, t, dist(g.evaluate(s), g.evaluate(t))});
        }
        cursor = std::max(cursor, iv.second);
        if (cursor >= hi) break;
    }

    std::sort(gaps.begin(), gaps.end(), [a](const Gap& x, const Gap& y) {
        if (x.jump > y.jump * (1.0 + 1e-9)) return true;
        if (y.jump > x.jump * (1.0 + 1e-9)) return false;
        double mx = std::fabs(0.5 * (x.s + x.t) - a);
        double my = std::fabs(0.5 * (y.s + y.t) - a);
        if (mx != my) return mx > my;
        return x.s < y.s;
    });

    double need = lambda * span - std::max(4.0 * eps, 1e-9 * span);
    double floor_dist = 0.25 * lambda * span;
    for (const Gap& gap : gaps) {
        if (!(gap.jump > need)) continue;
        std::vector<std::pair<double, double>> samples;  // (dist to K, param)
        for (int k = 1; k < 40; ++k) {
            double z = gap.s + (gap.t - gap.s) * k / 40.0;
            samples.emplace_back(std::sqrt(tree.nearest_sq(g.evaluate(z))), z);
        }
        std::sort(samples.rbegin(), samples.rend());
        for (auto& [d0, z] : samples) {
            if (!(d0 > floor_dist)) break;
            double zeta;
            try {
                zeta = density_one_parameter(g, z);
            } catch (const ConstructionError&) {
                continue;
            }
            if (zeta <= gap.s || zeta >= gap.t) continue;
            if (std::sqrt(tree.nearest_sq(g.evaluate(zeta))) > floor_dist)
                return GapInterval{gap.s, gap.t, zeta};
        }
    }
    throw ConstructionError("no qualifying gap at this resolution");
}

namespace {

std::vector<Point> sample_curve(const PolylineCurve& c, double step) {
    std::vector<Point> pts;
    const auto& v = c.vertices();
    for (size_t i = 0; i + 1 < v.size(); ++i) {
        pts.push_back(v[i]);
        double len = dist(v[i], v[i + 1]);
        int n = static_cast<int>(len / step);
        for (int k = 1; k <= n; ++k) {
            double u = static_cast<double>(k) / (n + 1);
            Point p = v[i];
            for (int d = 0; d < c.dimension(); ++d) p[d] += u * (v[i + 1][d] - v[i][d]);
            pts.push_back(p);
        }
    }
    pts.push_back(v.back());
    return pts;
}

double hausdorff_points(const std::vector<Point>& A, const std::vector<Point>& B) {
    KdTree ta(A), tb(B);
    double worst = 0.0;
    for (const Point& p : A) worst = std::max(worst, tb.nearest_sq(p));
    for (const Point& p : B) worst = std::max(worst, ta.nearest_sq(p));
    return std::sqrt(worst);
}

}  // namespace

CurveLimit curve_limit(const std::vector<PolylineCurve>& curves, double tol) {
    if (curves.size() < 2) throw InvalidInput("need at least two curves");
    if (!(tol > 0.0)) throw InvalidInput("tolerance must be positive");
    int dim = curves.front().dimension();
    for (const auto& c : curves)
        if (c.dimension() != dim) throw InvalidInput("dimension mismatch");

    double step = tol / 4.0;
    std::vector<std::vector<Point>> samples;
    samples.reserve(curves.size());
    for (const auto& c : curves) samples.push_back(sample_curve(c, step));

    double final_gap = hausdorff_points(samples[samples.size() - 2], samples.back());
    if (final_gap > tol) throw ConstructionError("sequence not Cauchy at tolerance");

    const PolylineCurve& limit = curves.back();
    double diam = 0.0;
    for (const Point& p : limit.vertices())
        diam = std::max(diam, dist(p, limit.vertices().front()));
    if (diam <= tol) throw ConstructionError("degenerate limit");

    // stages geometrically indistinguishable from the limit must not be shorter
    double tail_eps = std::max(tol * 1e-3, 1e-6);
    double min_tail = arc_length(limit);
    for (size_t i = 0; i + 1 < curves.size(); ++i) {
        if (hausdorff_points(samples[i], samples.back()) <= tail_eps)
            min_tail = std::min(min_tail, arc_length(curves[i]));
    }
    double margin = arc_length(limit) - min_tail;
    if (margin > tol) throw ConstructionError("length semicontinuity check failed");
    return CurveLimit{limit, final_gap, margin};
}

}  // namespace lipcap
