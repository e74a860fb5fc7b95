#include <lipcap/splice.hpp>

#include <lipcap/hcurve.hpp>

#include <algorithm>
#include <cmath>
#include <limits>
#include <utility>

namespace lipcap {

namespace {

double ball_radius_for(double lambda, double gap) { return (lambda * gap) / 16.0; }

size_t locate_captured(const CaptureCertificate& G, const Point& p, const char* what) {
    const std::vector<Point>& pts = G.captured.points();
    double tol = G.captured.resolution() * (1.0 + 1e-9);
    size_t best = pts.size();
    double best_sq = tol * tol;
    for (size_t i = 0; i < pts.size(); ++i) {
        double d = dist_sq(pts[i], p);
        if (d <= best_sq) {
            best_sq = d;
            best = i;
        }
    }
    if (best == pts.size()) {
        throw InvalidInput(std::string(what) + ": point is not on the captured set");
    }
    return best;
}

Point lerp(const Point& a, const Point& b, double u) {
    Point p = a;
    for (int c = 0; c < a.dimension(); ++c) {
        p[c] = a[c] + u * (b[c] - a[c]);
    }
    return p;
}

Point unit_from(const Point& center, const Point& p) {
    Point u = p;
    double n = std::sqrt(dist_sq(p, center));
    for (int c = 0; c < p.dimension(); ++c) {
        u[c] = (p[c] - center[c]) / n;
    }
    return u;
}

struct Ball {
    Point site;
    double zeta_len = 0.0;  // site location in arc-length units
    double radius = 0.0;
    double copy_scale = 0.0;
    size_t record = 0;
    bool spliced = false;
};

}  // namespace

std::vector<size_t> select_disjoint_subsequence(const Point& x, const std::vector<Point>& ys,
                                                const std::vector<Point>& sites, double lambda) {
    if (ys.size() != sites.size()) {
        throw InvalidInput("need one site per companion point");
    }
    if (!(lambda > 0.0) || !(lambda <= 1.0)) {
        throw InvalidInput("lambda must lie in (0, 1]");
    }
    std::vector<double> radii(ys.size());
    for (size_t i = 0; i < ys.size(); ++i) {
        radii[i] = ball_radius_for(lambda, dist(x, ys[i]));
    }
    std::vector<size_t> kept;
    for (size_t i = 0; i < ys.size(); ++i) {
        bool ok = true;
        for (size_t k : kept) {
            if (dist(sites[i], sites[k]) <= radii[i] + radii[k]) {
                ok = false;
                break;
            }
        }
        if (ok) {
            kept.push_back(i);
        }
    }
    if (kept.size() < 2) {
        throw InvalidInput("fewer than two disjoint insertion balls survive");
    }
    return kept;
}

SpliceResult splice(const CaptureCertificate& G, const DiscreteSet& K, const Point& x,
                    const std::vector<Point>& ys, const PolylineCurve& H, double lambda,
                    double delta) {
    int d = K.dimension();
    if (G.curve.dimension() != d || x.dimension() != d || H.dimension() != d) {
        throw InvalidInput("splice inputs disagree on dimension");
    }
    if (!(lambda > 0.0) || !(lambda <= 1.0)) {
        throw InvalidInput("lambda must lie in (0, 1]");
    }
    if (!std::isfinite(delta) || delta <= 0.0) {
        throw InvalidInput("delta must be positive");
    }
    if (ys.empty()) {
        throw InvalidInput("need at least one companion point");
    }
    const std::vector<Point>& hv = H.vertices();
    if (!(hv.front() == hv.back())) {
        throw InvalidInput("H must start and end at the same point");
    }
    {
        bool has_zero = false;
        Point zero = zero_point(d);
        for (const Point& v : hv) {
            if (v == zero) {
                has_zero = true;
                break;
            }
        }
        if (!has_zero) {
            throw InvalidInput("H must pass through the origin exactly");
        }
    }
    for (size_t i = 0; i < ys.size(); ++i) {
        if (ys[i] == x) {
            throw InvalidInput("companion points must differ from the center");
        }
        for (size_t j = i + 1; j < ys.size(); ++j) {
            if (ys[i] == ys[j]) {
                throw InvalidInput("companion points must be distinct");
            }
        }
    }

    double param_x = G.parameters[locate_captured(G, x, "splice center")];
    std::vector<Point> sites(ys.size(), zero_point(d));
    std::vector<double> zetas(ys.size(), 0.0);
    for (size_t i = 0; i < ys.size(); ++i) {
        double param_y = G.parameters[locate_captured(G, ys[i], "splice companion")];
        GapInterval gap = gap_interval(G.curve, K, param_x, param_y, lambda);
        zetas[i] = gap.zeta;
        sites[i] = G.curve.evaluate(gap.zeta);
    }

    std::vector<size_t> kept = select_disjoint_subsequence(x, ys, sites, lambda);

    double sqrt_d = std::sqrt(static_cast<double>(d));
    std::vector<Ball> balls;
    std::vector<SpliceRecord> records;
    double total = G.curve.total_length();
    for (size_t idx : kept) {
        SpliceRecord rec;
        rec.site = sites[idx];
        rec.zeta = zetas[idx];
        rec.gap_witness = dist(x, ys[idx]);
        rec.ball_radius = ball_radius_for(lambda, rec.gap_witness);
        rec.copy_scale = rec.ball_radius / (2.0 * sqrt_d);
        for (const Point& k : K.points()) {
            if (dist(k, rec.site) <= rec.ball_radius) {
                throw ConstructionError("excision ball touches the captured set");
            }
        }
        Ball ball;
        ball.site = rec.site;
        ball.zeta_len = rec.zeta * total;
        ball.radius = rec.ball_radius;
        ball.copy_scale = rec.copy_scale;
        ball.record = records.size();
        balls.push_back(std::move(ball));
        records.push_back(std::move(rec));
    }

    const std::vector<Point>& verts = G.curve.vertices();
    auto ball_of = [&balls](const Point& p) -> int {
        for (size_t b = 0; b < balls.size(); ++b) {
            if (dist_sq(p, balls[b].site) < balls[b].radius * balls[b].radius) {
                return static_cast<int>(b);
            }
        }
        return -1;
    };
    if (ball_of(verts.front()) != -1 || ball_of(verts.back()) != -1) {
        throw ConstructionError("curve endpoint falls inside an excision ball");
    }

    std::vector<Point> out;
    out.reserve(verts.size());
    auto emit = [&out](Point p) {
        if (out.empty() || !(out.back() == p)) {
            out.push_back(std::move(p));
        }
    };
    std::vector<double> added(balls.size(), 0.0);
    std::vector<double> removed(balls.size(), 0.0);

    int cur = -1;
    Point strand_in = zero_point(d);
    double strand_removed = 0.0;
    double entry_len = 0.0;

    auto reroute = [&](int b, const Point& p_in, const Point& p_out, double exit_len) {
        Ball& ball = balls[b];
        SpliceRecord& rec = records[ball.record];
        double slack = 1e-9 * std::max(total, 1.0);
        bool zeta_here = !ball.spliced && entry_len - slack <= ball.zeta_len &&
                         ball.zeta_len <= exit_len + slack;
        Point prev = p_in;
        double path = 0.0;
        auto put = [&](Point p, double* bucket) {
            double step = dist(prev, p);
            path += step;
            if (bucket != nullptr) {
                *bucket += step;
            }
            prev = p;
            emit(std::move(p));
        };
        emit(p_in);
        if (zeta_here) {
            ball.spliced = true;
            Point e1 = zero_point(d);
            e1[0] = 1.0;
            double arc_in = 0.0;
            double arc_out = 0.0;
            double approach_in = 0.0;
            double approach_out = 0.0;
            double copy_len = 0.0;
            for (Point& v :
                 sphere_arc_points(ball.site, ball.radius, unit_from(ball.site, p_in), e1, 0.05)) {
                put(std::move(v), &arc_in);
            }
            Point q1 = ball.site;
            q1[0] = ball.site[0] + ball.radius;
            put(q1, &arc_in);
            for (size_t vi = 0; vi < hv.size(); ++vi) {
                Point w = ball.site;
                for (int c = 0; c < d; ++c) {
                    w[c] = ball.copy_scale * hv[vi][c] + ball.site[c];
                }
                put(std::move(w), vi == 0 ? &approach_in : &copy_len);
            }
            put(q1, &approach_out);
            for (Point& v : sphere_arc_points(ball.site, ball.radius, e1,
                                              unit_from(ball.site, p_out), 0.05)) {
                put(std::move(v), &arc_out);
            }
            put(p_out, &arc_out);
            rec.reroutes.push_back({"ball-arc", arc_in});
            rec.reroutes.push_back({"approach", approach_in});
            rec.reroutes.push_back({"copy", copy_len});
            rec.reroutes.push_back({"approach", approach_out});
            rec.reroutes.push_back({"ball-arc", arc_out});
        } else {
            double arc = 0.0;
            for (Point& v : sphere_arc_points(ball.site, ball.radius, unit_from(ball.site, p_in),
                                              unit_from(ball.site, p_out), 0.05)) {
                put(std::move(v), &arc);
            }
            put(p_out, &arc);
            rec.reroutes.push_back({"ball-arc", arc});
        }
        added[b] += path;
        removed[b] += strand_removed;
    };

    emit(verts.front());
    double cum = 0.0;
    for (size_t i = 0; i + 1 < verts.size(); ++i) {
        const Point& A = verts[i];
        const Point& B = verts[i + 1];
        double seg = dist(A, B);
        std::vector<std::pair<double, std::pair<double, int>>> hits;
        for (size_t b = 0; b < balls.size(); ++b) {
            auto ov = segment_ball_overlap(A, B, balls[b].site, balls[b].radius);
            if (ov && ov->second - ov->first > 1e-12) {
                hits.push_back({ov->first, {ov->second, static_cast<int>(b)}});
            }
        }
        std::sort(hits.begin(), hits.end());
        for (const auto& [u1, rest] : hits) {
            double u2 = rest.first;
            int b = rest.second;
            if (cur == -1) {
                cur = b;
                strand_in = u1 <= 0.0 ? A : lerp(A, B, u1);
                entry_len = cum + std::max(u1, 0.0) * seg;
                strand_removed = 0.0;
            } else if (b != cur) {
                throw ConstructionError("excision balls overlap along the curve");
            }
            strand_removed += (std::min(u2, 1.0) - std::max(u1, 0.0)) * seg;
            if (u2 < 1.0 - 1e-12) {
                reroute(cur, strand_in, lerp(A, B, u2), cum + u2 * seg);
                cur = -1;
            }
        }
        if (cur == -1) {
            int bb = ball_of(B);
            if (bb != -1) {
                cur = bb;
                strand_in = B;
                entry_len = cum + seg;
                strand_removed = 0.0;
            } else {
                emit(B);
            }
        } else if (ball_of(B) == -1) {
            reroute(cur, strand_in, B, cum + seg);
            cur = -1;
        }
        cum += seg;
    }
    if (cur != -1) {
        throw ConstructionError("curve ends inside an excision ball");
    }

    double spent = 0.0;
    for (size_t b = 0; b < balls.size(); ++b) {
        if (!balls[b].spliced) {
            throw ConstructionError("site strand never crossed its excision ball");
        }
        SpliceRecord& rec = records[balls[b].record];
        rec.removed_length = removed[b];
        rec.length_delta = added[b] - removed[b];
        spent += rec.length_delta;
    }
    if (!(spent < delta)) {
        throw ConstructionError("splice exceeds the length budget");
    }

    PolylineCurve curve(d, std::move(out));
    const std::vector<Point>& nv = curve.vertices();
    std::vector<double> params(K.size(), 0.0);
    double coverage_sq = 0.0;
    for (size_t k = 0; k < K.size(); ++k) {
        size_t match = nv.size();
        size_t nearest = 0;
        double near_sq = std::numeric_limits<double>::infinity();
        for (size_t i = 0; i < nv.size(); ++i) {
            if (nv[i] == K[k]) {
                match = i;
                break;
            }
            double dd = dist_sq(nv[i], K[k]);
            if (dd < near_sq) {
                near_sq = dd;
                nearest = i;
            }
        }
        if (match == nv.size()) {
            match = nearest;
            coverage_sq = std::max(coverage_sq, near_sq);
        }
        params[k] = curve.parameter_at_vertex(match);
    }
    CaptureCertificate cert{std::move(curve), K, std::sqrt(coverage_sq), std::move(params)};
    return {std::move(cert), std::move(records)};
}

}  // namespace lipcap
