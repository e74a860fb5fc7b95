#include <lipcap/io.hpp>

#include <cstdio>
#include <fstream>
#include <sstream>
#include <utility>

#include <json.hpp>

namespace lipcap {

namespace {

using nlohmann::json;

json point_json(const Point& p) {
    json a = json::array();
    for (int c = 0; c < p.dimension(); ++c) a.push_back(p[c]);
    return a;
}

json points_json(const std::vector<Point>& pts) {
    json a = json::array();
    for (const Point& p : pts) a.push_back(point_json(p));
    return a;
}

Point point_from(const json& a, int dim) {
    if (!a.is_array() || static_cast<int>(a.size()) != dim) {
        throw InvalidInput("point with the wrong coordinate count");
    }
    std::vector<double> c;
    c.reserve(a.size());
    for (const json& v : a) {
        if (!v.is_number()) throw InvalidInput("non-numeric coordinate");
        c.push_back(v.get<double>());
    }
    return Point(std::move(c));
}

std::vector<Point> points_from(const json& a, int dim) {
    if (!a.is_array()) throw InvalidInput("expected an array of points");
    std::vector<Point> pts;
    pts.reserve(a.size());
    for (const json& p : a) pts.push_back(point_from(p, dim));
    return pts;
}

json parse(const std::string& body) {
    json j = json::parse(body, nullptr, false);
    if (j.is_discarded()) throw InvalidInput("malformed JSON");
    return j;
}

int dim_field(const json& j) {
    if (!j.contains("dimension") || !j.at("dimension").is_number_integer()) {
        throw InvalidInput("missing integer dimension field");
    }
    return j.at("dimension").get<int>();
}

double num_field(const json& j, const char* key) {
    if (!j.contains(key) || !j.at(key).is_number()) {
        throw InvalidInput(std::string("missing numeric field ") + key);
    }
    return j.at(key).get<double>();
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

}  // namespace

void write_text_atomic(const std::string& path, const std::string& body) {
    std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw InvalidInput("cannot open " + tmp + " for writing");
        out << body;
        if (!out) throw InvalidInput("short write to " + tmp);
    }
    if (std::rename(tmp.c_str(), path.c_str()) != 0) {
        std::remove(tmp.c_str());
        throw InvalidInput("cannot move " + tmp + " into place");
    }
}

std::string read_text(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InvalidInput("cannot read " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

std::string set_to_json(const DiscreteSet& K) {
    json j;
    j["dimension"] = K.dimension();
    j["resolution"] = K.resolution();
    j["points"] = points_json(K.points());
    return dump(j);
}

DiscreteSet set_from_json(const std::string& body) {
    json j = parse(body);
    int d = dim_field(j);
    if (!j.contains("points")) throw InvalidInput("missing points field");
    return DiscreteSet(d, num_field(j, "resolution"), points_from(j.at("points"), d));
}

std::string truncated_to_json(const TruncatedClosedSet& T) {
    json j;
    j["dimension"] = T.base().dimension();
    j["resolution"] = T.base().resolution();
    j["truncation_radius"] = T.truncation_radius();
    j["contains_origin"] = T.contains_origin();
    j["points"] = points_json(T.base().points());
    return dump(j);
}

TruncatedClosedSet truncated_from_json(const std::string& body) {
    json j = parse(body);
    int d = dim_field(j);
    if (!j.contains("points")) throw InvalidInput("missing points field");
    bool origin = j.contains("contains_origin") && j.at("contains_origin").is_boolean() &&
                  j.at("contains_origin").get<bool>();
    DiscreteSet base(d, num_field(j, "resolution"), points_from(j.at("points"), d));
    return TruncatedClosedSet(std::move(base), num_field(j, "truncation_radius"), origin);
}

std::string curve_to_json(const PolylineCurve& g) {
    json j;
    j["dimension"] = g.dimension();
    j["vertices"] = points_json(g.vertices());
    return dump(j);
}

PolylineCurve curve_from_json(const std::string& body) {
    json j = parse(body);
    int d = dim_field(j);
    if (!j.contains("vertices")) throw InvalidInput("missing vertices field");
    return PolylineCurve(d, points_from(j.at("vertices"), d));
}

std::string capture_to_json(const CaptureCertificate& c) {
    json j;
    j["dimension"] = c.curve.dimension();
    j["vertices"] = points_json(c.curve.vertices());
    j["coverage"] = c.coverage;
    j["captured"] = json::parse(set_to_json(c.captured));
    j["parameters"] = c.parameters;
    return dump(j);
}

CaptureCertificate capture_from_json(const std::string& body) {
    json j = parse(body);
    int d = dim_field(j);
    if (!j.contains("vertices") || !j.contains("captured") || !j.contains("parameters")) {
        throw InvalidInput("capture file needs vertices, captured and parameters");
    }
    PolylineCurve curve(d, points_from(j.at("vertices"), d));
    DiscreteSet captured = set_from_json(j.at("captured").dump());
    if (!j.at("parameters").is_array() || j.at("parameters").size() != captured.size()) {
        throw InvalidInput("one parameter per captured point required");
    }
    std::vector<double> params;
    for (const json& v : j.at("parameters")) {
        if (!v.is_number()) throw InvalidInput("non-numeric parameter");
        params.push_back(v.get<double>());
    }
    return {std::move(curve), std::move(captured), num_field(j, "coverage"), std::move(params)};
}

std::string hcurve_to_json(const HCurve& h) {
    json j;
    j["curve"] = json::parse(curve_to_json(h.curve));
    j["net"] = json::parse(set_to_json(h.net));
    j["declared_budget"] = h.declared_budget;
    json scheds = json::array();
    for (const ScaleSchedule& s : h.schedules) {
        json e;
        e["law"] = s.law();
        e["scales"] = s.scales();
        scheds.push_back(std::move(e));
    }
    j["schedules"] = std::move(scheds);
    return dump(j);
}

PolylineCurve curve_or_hcurve_from_json(const std::string& body) {
    json j = parse(body);
    if (j.contains("curve")) return curve_from_json(j.at("curve").dump());
    return curve_from_json(body);
}

std::string report_to_json(const DisconnectionReport& rep) {
    json j;
    j["lambda"] = rep.lambda;
    j["witness_a"] = point_json(rep.witness_a);
    j["witness_b"] = point_json(rep.witness_b);
    j["pair_count"] = rep.pair_count;
    return dump(j);
}

std::string profile_to_csv(const ConvergenceProfile& p) {
    std::ostringstream out;
    out << "scale,basepoint,discrepancy,radius\n";
    char buf[64];
    auto num = [&buf](double v) {
        std::snprintf(buf, sizeof(buf), "%.17g", v);
        return std::string(buf);
    };
    for (const ProfileRow& row : p.rows) {
        out << num(row.scale) << ",";
        for (int c = 0; c < row.basepoint.dimension(); ++c) {
            if (c) out << ";";
            out << num(row.basepoint[c]);
        }
        out << "," << num(row.discrepancy) << "," << num(p.radius) << "\n";
    }
    return out.str();
}

namespace {

json record_json(const SpliceRecord& rec) {
    json j;
    j["site"] = point_json(rec.site);
    j["zeta"] = rec.zeta;
    j["gap_witness"] = rec.gap_witness;
    j["ball_radius"] = rec.ball_radius;
    j["copy_scale"] = rec.copy_scale;
    j["removed_length"] = rec.removed_length;
    j["length_delta"] = rec.length_delta;
    json arcs = json::array();
    for (const RerouteArc& arc : rec.reroutes) {
        arcs.push_back({{"kind", arc.kind}, {"length", arc.length}});
    }
    j["reroutes"] = std::move(arcs);
    return j;
}

}  // namespace

std::string records_to_json(const std::vector<SpliceRecord>& recs) {
    json a = json::array();
    for (const SpliceRecord& rec : recs) a.push_back(record_json(rec));
    return dump(a);
}

std::string audit_to_json(const PipelineState& state) {
    json j;
    j["lambda_estimate"] = state.lambda_estimate;
    j["lambda_used"] = state.lambda_used;
    j["delta_total"] = state.delta_total;
    j["delta_spent"] = state.delta_spent;
    j["semicontinuity_margin"] = state.semicontinuity_margin;
    j["final_gap"] = state.final_gap;
    j["success"] = state.success;
    j["failure"] = state.failure;
    j["failed_stage"] = state.failed_stage;
    json stages = json::array();
    for (const StageAudit& a : state.stages) {
        json e;
        e["stage"] = a.stage;
        e["center"] = point_json(a.center);
        e["radius"] = a.radius;
        e["budget"] = a.budget;
        e["spent"] = a.spent;
        e["max_change_dist"] = a.max_change_dist;
        e["localized"] = a.localized;
        json recs = json::array();
        for (const SpliceRecord& rec : a.records) recs.push_back(record_json(rec));
        e["records"] = std::move(recs);
        stages.push_back(std::move(e));
    }
    j["stages"] = std::move(stages);
    json wits = json::array();
    for (const WitnessReport& w : state.witnesses) {
        json e;
        e["stage"] = w.stage;
        e["anchor"] = point_json(w.anchor);
        e["basepoint"] = point_json(w.basepoint);
        e["target"] = w.target;
        e["passed"] = w.passed;
        json rows = json::array();
        for (const ProfileRow& row : w.profile.rows) {
            rows.push_back({{"scale", row.scale},
                            {"basepoint", point_json(row.basepoint)},
                            {"discrepancy", row.discrepancy}});
        }
        e["profile"] = std::move(rows);
        e["tolerance"] = w.profile.tolerance;
        wits.push_back(std::move(e));
    }
    j["witnesses"] = std::move(wits);
    return dump(j);
}

std::string stack_to_json(const CantorStack& stack) {
    json j = json::parse(set_to_json(stack.set));
    j["dims"] = stack.dims;
    j["covering_c2"] = stack.covering_c2;
    return dump(j);
}

std::string comb_to_json(const CombExample& comb) {
    json j = json::parse(curve_to_json(comb.curve));
    j["strokes"] = comb.info.strokes;
    j["set_length"] = comb.info.set_length;
    j["traversal_length"] = comb.info.traversal_length;
    json teeth = json::array();
    for (const CombTooth& t : comb.info.teeth) {
        teeth.push_back({{"foot", point_json(t.foot)},
                         {"tip", point_json(t.tip)},
                         {"length", t.length},
                         {"stage", t.stage}});
    }
    j["teeth"] = std::move(teeth);
    return dump(j);
}

std::string scene_svg(const PolylineCurve* curve, const DiscreteSet* pts,
                      const std::string& note) {
    double lo_x = 0.0, hi_x = 1.0, lo_y = 0.0, hi_y = 1.0;
    bool first = true;
    auto widen = [&](const Point& p) {
        if (first) {
            lo_x = hi_x = p[0];
            lo_y = hi_y = p.dimension() > 1 ? p[1] : 0.0;
            first = false;
        } else {
            lo_x = std::min(lo_x, p[0]);
            hi_x = std::max(hi_x, p[0]);
            double y = p.dimension() > 1 ? p[1] : 0.0;
            lo_y = std::min(lo_y, y);
            hi_y = std::max(hi_y, y);
        }
    };
    int dim = 2;
    if (curve != nullptr) {
        dim = curve->dimension();
        for (const Point& p : curve->vertices()) widen(p);
    }
    if (pts != nullptr) {
        dim = std::max(dim, pts->dimension());
        for (const Point& p : pts->points()) widen(p);
    }
    double span = std::max({hi_x - lo_x, hi_y - lo_y, 1e-9});
    double pad = 0.05 * span;
    char buf[64];
    auto num = [&buf](double v) {
        std::snprintf(buf, sizeof(buf), "%.8g", v);
        return std::string(buf);
    };
    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" << num(lo_x - pad) << " "
        << num(-hi_y - pad) << " " << num(hi_x - lo_x + 2 * pad) << " "
        << num(hi_y - lo_y + 2 * pad) << "\" width=\"800\" height=\"800\">\n";
    std::string label = note;
    if (dim > 2) {
        if (!label.empty()) label += "; ";
        label += "projection of the first two coordinates";
    }
    if (!label.empty()) out << "  <title>" << label << "</title>\n";
    if (curve != nullptr) {
        out << "  <polyline fill=\"none\" stroke=\"black\" stroke-width=\"" << num(span / 400.0)
            << "\" points=\"";
        bool lead = true;
        for (const Point& p : curve->vertices()) {
            if (!lead) out << " ";
            lead = false;
            out << num(p[0]) << "," << num(-p[1]);
        }
        out << "\"/>\n";
    }
    if (pts != nullptr) {
        for (const Point& p : pts->points()) {
            out << "  <circle cx=\"" << num(p[0]) << "\" cy=\"" << num(-p[1]) << "\" r=\""
                << num(span / 250.0) << "\" fill=\"crimson\"/>\n";
        }
    }
    out << "</svg>\n";
    return out.str();
}

}  // namespace lipcap
