#include <algorithm>
#include <cctype>
#include <chrono>
#include <cstdio>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include <lipcap/io.hpp>
#include <lipcap/metric.hpp>

namespace {

using namespace lipcap;

std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

Point parse_point(const std::string& text, int dim) {
    std::vector<double> c;
    std::string token;
    std::istringstream in(text);
    while (std::getline(in, token, ',')) {
        try {
            size_t used = 0;
            c.push_back(std::stod(token, &used));
            while (used < token.size() && std::isspace(static_cast<unsigned char>(token[used]))) {
                ++used;
            }
            if (used != token.size()) throw std::invalid_argument(token);
        } catch (const std::exception&) {
            throw InvalidInput("cannot parse coordinate '" + token + "'");
        }
    }
    if (static_cast<int>(c.size()) != dim) {
        throw InvalidInput("point has " + std::to_string(c.size()) + " coordinates, expected " +
                           std::to_string(dim));
    }
    return Point(std::move(c));
}

// a file may hold a plain set or a truncated one; both start life as JSON
DiscreteSet read_any_set(const std::string& path) {
    std::string body = read_text(path);
    nlohmann::json j = nlohmann::json::parse(body, nullptr, false);
    if (!j.is_discarded() && j.contains("truncation_radius")) {
        return truncated_from_json(body).base();
    }
    return set_from_json(body);
}

struct ManifestScribe {
    std::string path;
    std::string command;
    std::vector<std::string> argv;
    std::vector<std::string> inputs;
    std::vector<std::string> outputs;
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();

    void write(int status) const {
        if (path.empty()) return;
        nlohmann::json j;
        j["command"] = command;
        j["argv"] = argv;
        j["inputs"] = inputs;
        j["outputs"] = outputs;
        j["status"] = status;
        j["wall_ms"] = std::chrono::duration_cast<std::chrono::milliseconds>(
                           std::chrono::steady_clock::now() - start)
                           .count();
        write_text_atomic(path, j.dump(2) + "\n");
    }
};

int run(int argc, char** argv, ManifestScribe& scribe) {
    CLI::App app{"geometric capture toolkit"};
    app.require_subcommand(1);
    app.add_option("--manifest", scribe.path, "write a run manifest to this path");

    std::string set_path, out_path, svg_path, point_text, audit_path, records_path;
    std::string file_a, file_b, curve_path, h_path;
    double scale = 0.0, radius = 1.0, lambda = 0.0, delta = 0.0, eps = -1.0;
    int stages = 0, depth = 12, dimension = 2, targets = 3, kmax = 3, teeth = 1;

    CLI::App* lam = app.add_subcommand("lambda", "uniform disconnection estimate");
    lam->add_option("set", set_path, "set JSON file")->required();
    lam->add_option("--out", out_path, "report JSON path");

    CLI::App* blow = app.add_subcommand("blowup", "rescaled truncated view at a point");
    blow->add_option("set", set_path, "set JSON file")->required();
    blow->add_option("--point", point_text, "comma-separated basepoint")->required();
    blow->add_option("--scale", scale, "zoom scale r")->required();
    blow->add_option("--radius", radius, "truncation radius");
    blow->add_option("--out", out_path, "output JSON path");
    blow->add_option("--svg", svg_path, "optional SVG rendering");

    CLI::App* disc = app.add_subcommand("discrepancy", "two-sided truncated excess");
    disc->add_option("a", file_a, "first set file")->required();
    disc->add_option("b", file_b, "second set file")->required();
    disc->add_option("--radius", radius, "truncation radius");

    CLI::App* capt = app.add_subcommand("capture", "base tour through every point");
    capt->add_option("set", set_path, "set JSON file")->required();
    capt->add_option("--out", out_path, "capture JSON path");
    capt->add_option("--svg", svg_path, "optional SVG rendering");

    CLI::App* bh = app.add_subcommand("build-h", "tangent-rich closed curve");
    bh->add_option("--dimension", dimension, "ambient dimension");
    bh->add_option("--targets", targets, "library size");
    bh->add_option("--radius", radius, "library truncation radius");
    bh->add_option("--depth", depth, "scale depth");
    bh->add_option("--out", out_path, "output JSON path");
    bh->add_option("--svg", svg_path, "optional SVG rendering");

    std::vector<std::string> companions;
    CLI::App* spl = app.add_subcommand("splice", "excise balls and reroute through copies");
    spl->add_option("--capture", curve_path, "capture JSON file")->required();
    spl->add_option("--set", set_path, "set JSON file")->required();
    spl->add_option("--point", point_text, "center point")->required();
    spl->add_option("--companion", companions, "companion point, repeatable")->required();
    spl->add_option("--copy", h_path, "curve to copy into the balls")->required();
    spl->add_option("--lambda", lambda, "disconnection constant")->required();
    spl->add_option("--delta", delta, "length budget")->required();
    spl->add_option("--out", out_path, "new capture JSON path");
    spl->add_option("--records", records_path, "splice record JSON path");

    CLI::App* pipe = app.add_subcommand("pipeline", "full recursive construction");
    pipe->add_option("set", set_path, "set JSON file")->required();
    pipe->add_option("--stages", stages, "stage count")->required();
    pipe->add_option("--delta", delta, "total length budget")->required();
    pipe->add_option("--library", targets, "target library size");
    pipe->add_option("--radius", radius, "library truncation radius");
    pipe->add_option("--out-curve", out_path, "final capture JSON path");
    pipe->add_option("--out-audit", audit_path, "audit JSON path");

    CLI::App* ex = app.add_subcommand("examples", "reference fixtures");
    CLI::App* ex_stack = ex->add_subcommand("cantor-stack", "stacked Cantor layers");
    ex_stack->add_option("--d", dimension, "ambient dimension");
    ex_stack->add_option("--kmax", kmax, "largest piece count");
    ex_stack->add_option("--depth", depth, "generation depth")->required();
    ex_stack->add_option("--out", out_path, "output JSON path");
    CLI::App* ex_comb = ex->add_subcommand("comb", "recursive tooth curve");
    ex_comb->add_option("--stages", stages, "stage count")->required();
    ex_comb->add_option("--teeth", teeth, "teeth per component");
    ex_comb->add_option("--out", out_path, "output JSON path");
    ex_comb->add_option("--svg", svg_path, "optional SVG rendering");
    ex->require_subcommand(1);

    CLI::App* ver = app.add_subcommand("verify", "check a curve still covers a set");
    ver->add_option("--curve", curve_path, "curve or capture JSON file")->required();
    ver->add_option("--set", set_path, "set JSON file")->required();
    ver->add_option("--eps", eps, "coverage tolerance, defaults to the set resolution");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    scribe.argv.assign(argv + 1, argv + argc);
    for (const CLI::App* sub : app.get_subcommands()) {
        scribe.command = sub->get_name();
        for (const CLI::App* nested : sub->get_subcommands()) {
            scribe.command += " " + nested->get_name();
        }
    }
    for (const std::string& p : {set_path, file_a, file_b, curve_path, h_path}) {
        if (!p.empty()) scribe.inputs.push_back(p);
    }
    for (const std::string& p : {out_path, svg_path, audit_path, records_path}) {
        if (!p.empty()) scribe.outputs.push_back(p);
    }

    if (lam->parsed()) {
        DiscreteSet K = read_any_set(set_path);
        DisconnectionReport rep = estimate_lambda(K);
        std::cout << "lambdaEstimate " << fmt(rep.lambda) << "\n";
        if (!out_path.empty()) write_text_atomic(out_path, report_to_json(rep));
        return 0;
    }
    if (blow->parsed()) {
        DiscreteSet K = read_any_set(set_path);
        Point x = parse_point(point_text, K.dimension());
        TruncatedClosedSet view = blowup(K, x, scale, radius);
        std::cout << "points " << view.base().size() << "\n";
        if (!out_path.empty()) write_text_atomic(out_path, truncated_to_json(view));
        if (!svg_path.empty()) {
            write_text_atomic(svg_path, scene_svg(nullptr, &view.base(), "blowup"));
        }
        return 0;
    }
    if (disc->parsed()) {
        DiscreteSet A = read_any_set(file_a);
        DiscreteSet B = read_any_set(file_b);
        std::cout << "discrepancy " << fmt(aw_discrepancy(A, B, radius)) << "\n";
        return 0;
    }
    if (capt->parsed()) {
        DiscreteSet K = read_any_set(set_path);
        CaptureCertificate cert = base_capture(K);
        std::cout << "length " << fmt(cert.curve.total_length()) << "\n"
                  << "coverage " << fmt(cert.coverage) << "\n";
        if (!out_path.empty()) write_text_atomic(out_path, capture_to_json(cert));
        if (!svg_path.empty()) {
            write_text_atomic(svg_path, scene_svg(&cert.curve, &K, "base capture"));
        }
        return 0;
    }
    if (bh->parsed()) {
        TargetLibrary lib = target_library(dimension, radius, targets);
        HCurve h = build_H(dimension, lib, depth);
        std::cout << "length " << fmt(arc_length(h.curve)) << "\n"
                  << "budget " << fmt(h.declared_budget) << "\n";
        if (!out_path.empty()) write_text_atomic(out_path, hcurve_to_json(h));
        if (!svg_path.empty()) {
            write_text_atomic(svg_path, scene_svg(&h.curve, nullptr, "tangent-rich curve"));
        }
        return 0;
    }
    if (spl->parsed()) {
        CaptureCertificate G = capture_from_json(read_text(curve_path));
        DiscreteSet K = read_any_set(set_path);
        Point x = parse_point(point_text, K.dimension());
        std::vector<Point> ys;
        for (const std::string& text : companions) ys.push_back(parse_point(text, K.dimension()));
        PolylineCurve H = curve_or_hcurve_from_json(read_text(h_path));
        SpliceResult res = splice(G, K, x, ys, H, lambda, delta);
        double spent = 0.0;
        for (const SpliceRecord& rec : res.records) spent += rec.length_delta;
        std::cout << "balls " << res.records.size() << "\n"
                  << "lengthDelta " << fmt(spent) << "\n";
        if (!out_path.empty()) write_text_atomic(out_path, capture_to_json(res.capture));
        if (!records_path.empty()) write_text_atomic(records_path, records_to_json(res.records));
        return 0;
    }
    if (pipe->parsed()) {
        DiscreteSet K = read_any_set(set_path);
        TargetLibrary lib = target_library(K.dimension(), radius, targets);
        PipelineResult res = theorem_pipeline(K, stages, delta, lib);
        if (!out_path.empty()) write_text_atomic(out_path, capture_to_json(res.capture));
        if (!audit_path.empty()) write_text_atomic(audit_path, audit_to_json(res.state));
        if (!res.state.success) {
            std::cout << "failure " << res.state.failure << "\n";
            if (res.state.failed_stage > 0) {
                std::cout << "failedStage " << res.state.failed_stage << "\n";
            }
            return 1;
        }
        std::cout << "lengthDelta " << fmt(res.state.delta_spent) << "\n"
                  << "witnesses " << res.state.witnesses.size() << "\n";
        return 0;
    }
    if (ex_stack->parsed()) {
        CantorStack stack = example_cantor_stack(dimension, kmax, depth);
        std::cout << "points " << stack.set.size() << "\n";
        for (double v : stack.dims) std::cout << "dim " << fmt(v) << "\n";
        if (!out_path.empty()) write_text_atomic(out_path, stack_to_json(stack));
        return 0;
    }
    if (ex_comb->parsed()) {
        CombExample comb = example_comb(stages, teeth);
        std::cout << "setLength " << fmt(comb.info.set_length) << "\n"
                  << "traversalLength " << fmt(comb.info.traversal_length) << "\n";
        if (!out_path.empty()) write_text_atomic(out_path, comb_to_json(comb));
        if (!svg_path.empty()) {
            write_text_atomic(svg_path, scene_svg(&comb.curve, nullptr, "comb"));
        }
        return 0;
    }
    if (ver->parsed()) {
        std::string body = read_text(curve_path);
        nlohmann::json j = nlohmann::json::parse(body, nullptr, false);
        PolylineCurve curve = (!j.is_discarded() && j.contains("captured"))
                                  ? capture_from_json(body).curve
                                  : curve_or_hcurve_from_json(body);
        DiscreteSet K = read_any_set(set_path);
        if (curve.dimension() != K.dimension()) {
            throw InvalidInput("curve and set disagree on dimension");
        }
        double tol = eps >= 0.0 ? eps : K.resolution();
        double worst = 0.0;
        for (const Point& p : K.points()) {
            worst = std::max(worst, dist_to_curve(curve, p));
        }
        std::cout << "coverage " << fmt(worst) << "\n";
        if (worst <= tol) return 0;
        std::cerr << "verification failed: coverage above " << fmt(tol) << "\n";
        return 1;
    }
    return 2;
}

}  // namespace

int main(int argc, char** argv) {
    ManifestScribe scribe;
    int status = 2;
    try {
        status = run(argc, argv, scribe);
    } catch (const InvalidInput& e) {
        std::cerr << "invalid input: " << e.what() << "\n";
        status = 2;
    } catch (const ConstructionError& e) {
        std::cerr << "construction failed: " << e.what() << "\n";
        status = 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        status = 2;
    }
    try {
        scribe.write(status);
    } catch (const std::exception& e) {
        std::cerr << "manifest not written: " << e.what() << "\n";
    }
    return status;
}
