#include <lipcap/hcurve.hpp>

#include <lipcap/disconnect.hpp>

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

namespace lipcap {

namespace {

constexpr double kClip = 0.01875;   // cleared core radius, 1.2 * 4^-3
constexpr double kHole = 0.0175;    // routing radius inside the core
constexpr double kHoleArcStep = 0.2;

Point unit(const Point& p) {
    double n = std::sqrt(norm_sq(p));
    Point u = p;
    for (int c = 0; c < p.dimension(); ++c) {
        u[c] = p[c] / n;
    }
    return u;
}

Point scaled(double s, const Point& p) {
    Point q = p;
    for (int c = 0; c < p.dimension(); ++c) {
        q[c] = s * p[c];
    }
    return q;
}

void append(std::vector<Point>& out, Point p) {
    if (!out.empty() && out.back() == p) {
        return;
    }
    out.push_back(std::move(p));
}

// closed doubling walk over the minimum spanning tree of one net piece
std::vector<size_t> piece_tour(const std::vector<Point>& pts, const std::vector<size_t>& piece,
                               size_t entry_local, double* weight_out) {
    size_t n = piece.size();
    std::vector<size_t> order;
    if (n == 1) {
        order.push_back(piece[0]);
        return order;
    }
    std::vector<double> best(n, std::numeric_limits<double>::infinity());
    std::vector<size_t> parent(n, n);
    std::vector<char> used(n, 0);
    best[entry_local] = 0.0;
    std::vector<std::vector<size_t>> kids(n);
    for (size_t round = 0; round < n; ++round) {
        size_t pick = n;
        double low = std::numeric_limits<double>::infinity();
        for (size_t i = 0; i < n; ++i) {
            if (!used[i] && best[i] < low) {
                low = best[i];
                pick = i;
            }
        }
        used[pick] = 1;
        if (parent[pick] != n) {
            kids[parent[pick]].push_back(pick);
            *weight_out += std::sqrt(best[pick]);
        }
        for (size_t i = 0; i < n; ++i) {
            if (!used[i]) {
                double w = dist_sq(pts[piece[pick]], pts[piece[i]]);
                if (w < best[i]) {
                    best[i] = w;
                    parent[i] = pick;
                }
            }
        }
    }
    for (auto& ks : kids) {
        std::sort(ks.begin(), ks.end(),
                  [&](size_t a, size_t b) { return pts[piece[a]] < pts[piece[b]]; });
    }
    std::vector<std::pair<size_t, size_t>> stack;  // (node, next child slot)
    stack.emplace_back(entry_local, 0);
    order.push_back(piece[entry_local]);
    while (!stack.empty()) {
        auto& [node, slot] = stack.back();
        if (slot < kids[node].size()) {
            size_t child = kids[node][slot];
            ++slot;
            stack.emplace_back(child, 0);
            order.push_back(piece[child]);
        } else {
            stack.pop_back();
            if (!stack.empty()) {
                order.push_back(piece[stack.back().first]);
            }
        }
    }
    return order;
}

struct TracedTarget {
    std::vector<Point> walk;  // ambient target coordinates, anchor to core exit
    Point anchor_dir;
    Point exit_dir;
    double tour_weight = 0.0;
    size_t piece_count = 0;
    size_t detached_count = 0;
};

TracedTarget trace_target(const TruncatedClosedSet& target) {
    const DiscreteSet& net = target.base();
    const std::vector<Point>& pts = net.points();
    double R = target.truncation_radius();
    int d = net.dimension();

    size_t anchor = pts.size();
    for (size_t i = 0; i < pts.size(); ++i) {
        if (std::sqrt(norm_sq(pts[i])) >= R * (1.0 - 0.02)) {
            if (anchor == pts.size() || pts[anchor] < pts[i]) {
                anchor = i;
            }
        }
    }
    if (anchor == pts.size()) {
        throw ConstructionError("target has no net point near the truncation sphere");
    }

    std::vector<size_t> clipped;
    for (size_t i = 0; i < pts.size(); ++i) {
        if (std::sqrt(norm_sq(pts[i])) >= kClip * R) {
            clipped.push_back(i);
        }
    }

    double link = 3.0 * net.resolution();
    std::vector<size_t> uf(clipped.size());
    std::iota(uf.begin(), uf.end(), size_t{0});
    auto find = [&uf](size_t v) {
        while (uf[v] != v) {
            uf[v] = uf[uf[v]];
            v = uf[v];
        }
        return v;
    };
    for (size_t i = 0; i < clipped.size(); ++i) {
        for (size_t j = i + 1; j < clipped.size(); ++j) {
            if (dist_sq(pts[clipped[i]], pts[clipped[j]]) <= link * link) {
                uf[find(i)] = find(j);
            }
        }
    }
    std::vector<std::vector<size_t>> pieces;
    {
        std::vector<size_t> root_slot(clipped.size(), clipped.size());
        for (size_t i = 0; i < clipped.size(); ++i) {
            size_t r = find(i);
            if (root_slot[r] == clipped.size()) {
                root_slot[r] = pieces.size();
                pieces.emplace_back();
            }
            pieces[root_slot[r]].push_back(clipped[i]);
        }
    }

    size_t anchor_piece = pieces.size();
    for (size_t p = 0; p < pieces.size(); ++p) {
        if (std::find(pieces[p].begin(), pieces[p].end(), anchor) != pieces[p].end()) {
            anchor_piece = p;
        }
    }
    std::vector<size_t> piece_order;
    piece_order.push_back(anchor_piece);
    for (size_t p = 0; p < pieces.size(); ++p) {
        if (p != anchor_piece) {
            piece_order.push_back(p);
        }
    }

    TracedTarget traced;
    traced.piece_count = pieces.size();
    traced.anchor_dir = unit(pts[anchor]);
    Point origin = zero_point(d);
    double hole_radius = kHole * R;
    auto hole_point = [&](const Point& dir) { return scaled(hole_radius, dir); };

    std::vector<Point>& walk = traced.walk;
    Point cur_dir = traced.anchor_dir;
    for (size_t oi = 0; oi < piece_order.size(); ++oi) {
        const std::vector<size_t>& piece = pieces[piece_order[oi]];
        size_t entry = 0;
        if (oi == 0) {
            entry = static_cast<size_t>(
                std::find(piece.begin(), piece.end(), anchor) - piece.begin());
        } else {
            double low = std::numeric_limits<double>::infinity();
            for (size_t i = 0; i < piece.size(); ++i) {
                double r = std::sqrt(norm_sq(pts[piece[i]]));
                if (r < low || (r == low && pts[piece[i]] < pts[piece[entry]])) {
                    low = r;
                    entry = i;
                }
            }
        }
        const Point& entry_pt = pts[piece[entry]];
        double entry_radius = std::sqrt(norm_sq(entry_pt));
        bool hole_adjacent = entry_radius <= kClip * R + 3.0 * net.resolution();
        Point entry_dir = unit(entry_pt);

        if (oi == 0) {
            append(walk, entry_pt);
        } else if (hole_adjacent) {
            for (Point& v : sphere_arc_points(origin, hole_radius, cur_dir, entry_dir,
                                              kHoleArcStep)) {
                append(walk, std::move(v));
            }
            append(walk, hole_point(entry_dir));
            append(walk, entry_pt);
        } else {
            ++traced.detached_count;
            append(walk, entry_pt);
        }

        for (size_t idx : piece_tour(pts, piece, entry, &traced.tour_weight)) {
            append(walk, pts[idx]);
        }

        if (oi == 0) {
            append(walk, hole_point(cur_dir));
        } else {
            append(walk, hole_point(entry_dir));
            cur_dir = entry_dir;
        }
    }
    traced.exit_dir = cur_dir;
    return traced;
}

}  // namespace

std::vector<Point> sphere_arc_points(const Point& center, double radius, const Point& from_dir,
                                     const Point& to_dir, double step) {
    Point u = unit(from_dir);
    Point v = unit(to_dir);
    double c = dot(u, v);
    Point w_raw = v - scaled(c, u);
    double w_norm = std::sqrt(norm_sq(w_raw));
    double phi = std::atan2(w_norm, c);
    if (phi <= step) {
        return {};
    }
    if (w_norm < 1e-9) {
        int axis = 0;
        while (axis < u.dimension() && std::abs(u[axis]) >= 0.9) {
            ++axis;
        }
        Point e = zero_point(u.dimension());
        e[axis] = 1.0;
        w_raw = e - scaled(dot(e, u), u);
        w_norm = std::sqrt(norm_sq(w_raw));
    }
    Point w = scaled(1.0 / w_norm, w_raw);
    std::vector<Point> out;
    for (double t = step; t < phi; t += step) {
        Point p = center;
        double ct = std::cos(t);
        double st = std::sin(t);
        for (int i = 0; i < p.dimension(); ++i) {
            p[i] = center[i] + radius * (ct * u[i] + st * w[i]);
        }
        out.push_back(std::move(p));
    }
    return out;
}

HCurve build_H(int d, const TargetLibrary& lib, int depth) {
    if (d != lib.dimension()) {
        throw InvalidInput("dimension does not match the target library");
    }
    double R = lib.truncation_radius();
    if (R > 1.0) {
        throw InvalidInput("truncation radius above 1 breaks the unit-box contract");
    }
    int m = static_cast<int>(lib.size());
    int need = std::max(m, 3 * (m - 1));
    if (depth < need) {
        throw InvalidInput("depth too small to cover all targets");
    }

    std::vector<TracedTarget> traced;
    traced.reserve(lib.size());
    for (const NamedTarget& t : lib.targets()) {
        traced.push_back(trace_target(t.set));
    }

    int copies = depth / 3;
    std::vector<Point> walk;
    double budget = 0.0;
    for (int c = 0; c <= copies; ++c) {
        double sigma = std::ldexp(1.0, -6 * c);
        const TracedTarget& t = traced[static_cast<size_t>(c % m)];
        if (c > 0) {
            double bridge_radius = kHole * R * std::ldexp(1.0, -6 * (c - 1));
            const TracedTarget& prev = traced[static_cast<size_t>((c - 1) % m)];
            Point origin = zero_point(d);
            for (Point& v : sphere_arc_points(origin, bridge_radius, prev.exit_dir,
                                              t.anchor_dir, kHoleArcStep)) {
                append(walk, std::move(v));
            }
            append(walk, scaled(bridge_radius, t.anchor_dir));
        }
        for (const Point& w : t.walk) {
            append(walk, scaled(sigma, w));
        }
        budget += sigma * (2.0 * t.tour_weight +
                           R * (2.0 + 0.2 * static_cast<double>(t.piece_count) +
                                4.0 * static_cast<double>(t.detached_count)));
    }
    append(walk, zero_point(d));

    std::vector<Point> closed = walk;
    for (size_t i = walk.size() - 1; i-- > 0;) {
        append(closed, walk[i]);
    }

    HCurve h{PolylineCurve(d, closed),
             DiscreteSet(d, 0.0025 * R * std::ldexp(1.0, -6 * copies), closed),
             {},
             2.0 * budget};
    for (int j = 0; j < m; ++j) {
        std::vector<double> scales;
        for (int c = j; c <= copies; c += m) {
            scales.push_back(std::ldexp(1.0, -6 * c));
        }
        h.schedules.emplace_back(std::move(scales), "powers of 4, stride 3");
    }
    if (arc_length(h.curve) > h.declared_budget) {
        throw ConstructionError("traced length exceeds the declared budget");
    }
    return h;
}

}  // namespace lipcap
