#include <lipcap/pipeline.hpp>

#include <lipcap/disconnect.hpp>

#include <algorithm>
#include <cmath>
#include <limits>
#include <utility>

namespace lipcap {

namespace {

bool lex_less(const Point& a, const Point& b) {
    for (int c = 0; c < a.dimension(); ++c) {
        if (a[c] != b[c]) return a[c] < b[c];
    }
    return false;
}

std::vector<Point> farthest_point_order(const DiscreteSet& K, int count) {
    size_t n = K.size();
    size_t first = 0;
    for (size_t i = 1; i < n; ++i) {
        if (lex_less(K[i], K[first])) first = i;
    }
    std::vector<Point> order{K[first]};
    std::vector<double> best(n);
    for (size_t i = 0; i < n; ++i) best[i] = dist_sq(K[i], K[first]);
    while (order.size() < static_cast<size_t>(count)) {
        size_t pick = 0;
        for (size_t i = 1; i < n; ++i) {
            if (best[i] > best[pick] ||
                (best[i] == best[pick] && lex_less(K[i], K[pick]))) {
                pick = i;
            }
        }
        if (best[pick] == 0.0) {
            throw InvalidInput("net has fewer distinct points than stages");
        }
        order.push_back(K[pick]);
        for (size_t i = 0; i < n; ++i) {
            best[i] = std::min(best[i], dist_sq(K[i], K[pick]));
        }
    }
    return order;
}

std::vector<std::vector<double>> sorted_coords(const std::vector<Point>& pts) {
    std::vector<std::vector<double>> rows;
    rows.reserve(pts.size());
    for (const Point& p : pts) {
        std::vector<double> r(static_cast<size_t>(p.dimension()));
        for (int c = 0; c < p.dimension(); ++c) r[static_cast<size_t>(c)] = p[c];
        rows.push_back(std::move(r));
    }
    std::sort(rows.begin(), rows.end());
    rows.erase(std::unique(rows.begin(), rows.end()), rows.end());
    return rows;
}

// vertices present on exactly one side, compared coordinate-exact
double max_changed_distance(const std::vector<Point>& before, const std::vector<Point>& after,
                            const Point& center) {
    auto old_rows = sorted_coords(before);
    auto new_rows = sorted_coords(after);
    double worst_sq = 0.0;
    auto scan = [&](const std::vector<std::vector<double>>& a,
                    const std::vector<std::vector<double>>& b) {
        for (const auto& row : a) {
            if (!std::binary_search(b.begin(), b.end(), row)) {
                Point p{std::vector<double>(row)};
                worst_sq = std::max(worst_sq, dist_sq(p, center));
            }
        }
    };
    scan(old_rows, new_rows);
    scan(new_rows, old_rows);
    return std::sqrt(worst_sq);
}

}  // namespace

PipelineResult theorem_pipeline(const DiscreteSet& K, int stages, double delta,
                                const TargetLibrary& lib) {
    if (stages < 1) throw InvalidInput("need at least one stage");
    if (!std::isfinite(delta) || delta <= 0.0) throw InvalidInput("delta must be positive");
    if (K.dimension() != lib.dimension()) {
        throw InvalidInput("net and target library disagree on dimension");
    }
    if (K.size() < 2) throw InvalidInput("need at least two points");
    int d = K.dimension();

    PipelineState state;
    state.delta_total = delta;

    DisconnectionReport disc = estimate_lambda(K);
    state.lambda_estimate = disc.lambda;
    state.lambda_used = 0.9 * disc.lambda;
    if (!(state.lambda_used > 0.0)) {
        throw InvalidInput("net is not uniformly disconnected at any positive lambda");
    }

    HCurve H = build_H(d, lib, 12);
    std::vector<Point> order = farthest_point_order(K, stages);

    CaptureCertificate G = base_capture(K);
    std::vector<PolylineCurve> trail{G.curve};
    std::vector<std::pair<Point, double>> placed;  // earlier sites and ball radii

    for (int n = 1; n <= stages; ++n) {
        const Point& x = order[static_cast<size_t>(n - 1)];
        double r;
        if (n == 1) {
            r = K.diameter() / 4.0;
        } else {
            r = std::numeric_limits<double>::infinity();
            for (int k = 0; k < n - 1; ++k) {
                r = std::min(r, dist(order[static_cast<size_t>(k)], x) / 4.0);
            }
        }
        for (const auto& [site, rho] : placed) {
            r = std::min(r, 0.9 * (dist(x, site) - rho));
        }
        double budget = delta * std::ldexp(1.0, -n);

        StageAudit audit;
        audit.stage = static_cast<size_t>(n);
        audit.center = x;
        audit.radius = r;
        audit.budget = budget;

        try {
            if (!(r > 0.0)) {
                throw ConstructionError("stage ball collides with an earlier splice site");
            }
            std::vector<Point> ys;
            for (size_t i = 0; i < K.size(); ++i) {
                if (!(K[i] == x) && dist(K[i], x) < 0.99 * r) ys.push_back(K[i]);
            }
            if (ys.size() < 2) {
                throw ConstructionError("stage ball holds too few companion points");
            }
            std::sort(ys.begin(), ys.end(), [&x](const Point& a, const Point& b) {
                double da = dist_sq(a, x), db = dist_sq(b, x);
                if (da != db) return da > db;
                return lex_less(a, b);
            });

            SpliceResult sp = splice(G, K, x, ys, H.curve, state.lambda_used, budget);

            for (const SpliceRecord& rec : sp.records) {
                audit.spent += rec.length_delta;
                placed.emplace_back(rec.site, rec.ball_radius);
            }
            audit.max_change_dist =
                max_changed_distance(G.curve.vertices(), sp.capture.curve.vertices(), x);
            audit.localized = audit.max_change_dist <= r * (1.0 + 1e-9);
            audit.records = std::move(sp.records);
            state.delta_spent += audit.spent;
            if (!audit.localized && state.failure.empty()) {
                state.failure = "stage rewrote the curve outside its localization ball";
                state.failed_stage = audit.stage;
            }
            G = std::move(sp.capture);
            trail.push_back(G.curve);
            state.stages.push_back(std::move(audit));
        } catch (const Error& e) {
            state.failure = e.what();
            state.failed_stage = audit.stage;
            state.stages.push_back(std::move(audit));
            state.success = false;
            return {std::move(G), std::move(state)};
        }
    }

    try {
        CurveLimit lim = curve_limit(trail, 0.05);
        state.final_gap = lim.final_gap;
        state.semicontinuity_margin = lim.semicontinuity_margin;
    } catch (const Error& e) {
        if (state.failure.empty()) state.failure = e.what();
    }

    DiscreteSet F_net(d, 1e-13, G.curve.vertices());
    double R = lib.truncation_radius();
    bool all_passed = true;
    for (const StageAudit& audit : state.stages) {
        if (audit.records.empty()) continue;
        const SpliceRecord* pick = &audit.records.front();
        for (const SpliceRecord& rec : audit.records) {
            if (rec.gap_witness > pick->gap_witness) pick = &rec;
        }
        for (size_t j = 0; j < lib.size(); ++j) {
            WitnessReport w;
            w.stage = audit.stage;
            w.anchor = audit.center;
            w.basepoint = pick->site;
            w.target = lib.targets()[j].name;
            try {
                std::vector<double> scaled;
                for (double s : H.schedules[j].scales()) scaled.push_back(pick->copy_scale * s);
                ScaleSchedule sched(std::move(scaled), H.schedules[j].law());
                std::vector<Point> bases(sched.scales().size(), pick->site);
                w.profile = pseudotangent_witness(F_net, w.anchor, bases, sched,
                                                  lib.targets()[j].set, 0.08 * R);
                w.passed = w.profile.verdict;
            } catch (const Error& e) {
                w.passed = false;
                if (state.failure.empty()) state.failure = e.what();
            }
            all_passed = all_passed && w.passed;
            state.witnesses.push_back(std::move(w));
        }
    }

    state.success = all_passed && state.failure.empty();
    return {std::move(G), std::move(state)};
}

}  // namespace lipcap
