// Command line front end: analyze a single polynomial, batch-verify a
// classification dataset, enumerate rotation pivots, or evaluate one
// blow-up discrepancy.  Exit codes: 0 success, 1 verification failure,
// 2 usage or input error.

#include "sing/catalog.hpp"
#include "sing/rotation.hpp"

#include <CLI11.hpp>

#include <iostream>

namespace {

std::vector<sing::Int> parse_weight_list(const std::string& s) {
    std::vector<sing::Int> w;
    std::string cur;
    for (char c : s) {
        if (c == ',') {
            w.emplace_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    if (!cur.empty()) w.emplace_back(cur);
    if (w.empty()) throw sing::Error("empty weight list");
    return w;
}

std::map<std::string, long long> parse_bindings(const std::vector<std::string>& defs) {
    std::map<std::string, long long> b;
    for (const auto& d : defs) {
        auto eq = d.find('=');
        if (eq == std::string::npos) throw sing::Error("parameter binding must be name=value: " + d);
        b[d.substr(0, eq)] = std::stoll(d.substr(eq + 1));
    }
    return b;
}

int cmd_analyze(const std::string& poly_src, const std::vector<std::string>& param_defs,
                const std::string& weights_arg, long long degree_arg, long long n_max) {
    using namespace sing;
    auto bindings = parse_bindings(param_defs);
    std::vector<std::string> params;
    for (const auto& [k, v] : bindings) params.push_back(k);
    SupportedPolynomial poly = instantiate(parse_expression(poly_src, params), bindings);
    if (poly.empty()) throw Error("polynomial instantiates to zero");

    Json out;
    out["polynomial"] = canonical_render(poly);
    WeightSystem ws;
    bool have_ws = false;
    if (!weights_arg.empty()) {
        ws.weights = parse_weight_list(weights_arg);
        ws.degree = degree_arg > 0 ? Int(degree_arg) : dot(ws.weights, poly.terms[0].first);
        if (!check_weights(poly, ws)) throw Error("polynomial is not quasihomogeneous for the given weights");
        have_ws = true;
        out["weights_source"] = "supplied";
    } else {
        auto det = detect_weights(poly);
        if (det.kind == WeightDetection::Unique) {
            ws = *det.system;
            have_ws = true;
            out["weights_source"] = "detected";
        } else if (det.kind == WeightDetection::Underdetermined) {
            out["weights_source"] = "underdetermined";
            Json base = Json::array(), kernel = Json::array();
            for (const Rat& v : det.basepoint) base.push_back(rat_str(v));
            for (const auto& k : det.kernel) {
                Json kv = Json::array();
                for (const Rat& v : k) kv.push_back(rat_str(v));
                kernel.push_back(kv);
            }
            out["weight_family"] = {{"basepoint", base}, {"kernel", kernel}};
        } else {
            out["weights_source"] = "not_quasihomogeneous";
        }
    }

    Json newton;
    newton["one_in_polyhedron"] = gamma_contains(poly, ones(poly.dim));
    newton["one_in_interior"] = gamma_interior_contains(poly, ones(poly.dim));
    newton["semantics"] = "necessary conditions for lc / canonical";
    out["newton"] = newton;

    if (have_ws) {
        Json w = Json::array();
        for (const Int& v : ws.weights) w.push_back(to_ll(v));
        out["weights"] = w;
        out["degree"] = to_ll(ws.degree);
        auto crit = numeric_criteria(ws, poly);
        Json c;
        c["sum_minus_degree"] = to_ll(crit.sum_minus_degree);
        c["canonical_bound"] = crit.canonical_bound;
        c["lc_bound"] = crit.lc_bound;
        c["semantics"] = "necessary conditions";
        out["numeric_criteria"] = c;
        try {
            auto wfd = linear_cone_reduce(well_formize(make_hypersurface(ws.weights, ws.degree, poly)));
            Json wf;
            Json at = Json::array(), q = Json::array(), diff = Json::array();
            for (const Int& v : wfd.atilde) at.push_back(to_ll(v));
            for (const Int& v : wfd.q) q.push_back(to_ll(v));
            for (const Rat& v : wfd.diff) diff.push_back(rat_str(v));
            wf["atilde"] = at;
            wf["dtilde"] = to_ll(wfd.dtilde);
            wf["q"] = q;
            wf["diff"] = diff;
            wf["reduced_poly"] = canonical_render(wfd.reduced_poly);
            if (wfd.linear_cone) {
                Json sp = Json::array();
                for (const Int& v : wfd.linear_cone->space) sp.push_back(to_ll(v));
                wf["linear_cone_space"] = sp;
            }
            auto dd = degree_data(wfd);
            wf["canonical_deg"] = rat_str(dd.canonical_deg);
            wf["o1_power"] = rat_str(dd.o1_power);
            wf["fano_deg"] = rat_str(dd.fano_deg);
            out["well_formed"] = wf;
            auto prof = complement_profile(wfd, n_max);
            Json cp;
            cp["candidate_min_index"] =
                prof.candidate ? Json(*prof.candidate) : Json(nullptr);
            cp["screen_regular_complement_absent"] = prof.regular_complement_absent;
            cp["screen_big_coefficient"] = prof.big_coefficient;
            Json rt = Json::array();
            for (const auto& [n, e] : prof.by_index) {
                if (n > 12 && !(prof.candidate && n <= *prof.candidate)) continue;
                Json en;
                en["n"] = n;
                en["r_floor"] = rat_str(e.r_floor);
                en["r_ceil"] = rat_str(e.r_ceil);
                en["representable"] = e.representable;
                rt.push_back(en);
            }
            cp["r_table"] = rt;
            out["complements"] = cp;
        } catch (const std::exception& e) {
            out["well_formed"] = {{"error", e.what()}};
        }
    }
    std::cout << out.dump(2) << "\n";
    return 0;
}

int cmd_verify(const std::string& dataset, const std::string& format, bool include_suspect,
               unsigned jobs) {
    using namespace sing;
    auto rows = load_dataset(dataset);
    if (!include_suspect) {
        std::vector<TableRow> clean;
        for (auto& r : rows)
            if (r.status == CurationStatus::Clean) clean.push_back(std::move(r));
        rows = std::move(clean);
    }
    auto [reports, summary] = verify_all(rows, jobs);
    std::cout << emit_report(reports, format);
    if (format == "text") {
        std::cout << summary.total << " rows";
        for (const auto& [k, v] : summary.by_verdict) std::cout << ", " << v << " " << k;
        std::cout << "\n";
    }
    return summary.ok() ? 0 : 1;
}

int cmd_rotate(const std::string& preset_name, long long bounds) {
    using namespace sing;
    const auto& preset = lookup_preset(preset_name);
    auto pivots = enumerate_pivots(preset, bounds);
    for (const Monomial& m : pivots) {
        SupportedPolynomial p;
        p.dim = 4;
        p.terms.emplace_back(m, CoefficientTag::exact(1));
        std::cout << canonical_render(p) << "\n";
    }
    return 0;
}

int cmd_discrepancy(const std::string& weights_arg, const std::string& poly_src) {
    using namespace sing;
    auto w = parse_weight_list(weights_arg);
    SupportedPolynomial poly = parse_poly(poly_src);
    std::cout << rat_str(blowup_discrepancy(w, poly)) << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact toolkit for quasihomogeneous hypersurface singularity data"};
    app.require_subcommand(1);

    std::string poly_src, weights_arg, dataset, format = "text", preset_name;
    std::vector<std::string> param_defs;
    long long degree_arg = 0, bounds = 30, n_max = 100;
    bool include_suspect = false;
    unsigned jobs = 1;

    auto* analyze = app.add_subcommand("analyze", "full report for one polynomial");
    analyze->add_option("poly", poly_src, "polynomial in the table DSL")->required();
    analyze->add_option("--param", param_defs, "parameter binding name=value");
    analyze->add_option("--weights", weights_arg, "comma separated blow-up weights");
    analyze->add_option("--degree", degree_arg, "quasihomogeneous degree for --weights");
    analyze->add_option("--n-max", n_max, "complement index search bound");

    auto* verify = app.add_subcommand("verify", "batch-verify a dataset of table rows");
    verify->add_option("--dataset", dataset, "line-delimited dataset file")->required();
    verify->add_option("--format", format, "text or json");
    verify->add_flag("--include-suspect", include_suspect, "also run ocr_suspect rows");
    verify->add_option("--jobs", jobs, "worker threads");

    auto* rotate = app.add_subcommand("rotate", "enumerate Newton line rotation pivots");
    rotate->add_option("--preset", preset_name, "preset name, e.g. upsilon1")->required();
    rotate->add_option("--bounds", bounds, "exponent search box");

    auto* discrepancy = app.add_subcommand("discrepancy", "weighted blow-up discrepancy");
    discrepancy->add_option("--weight", weights_arg, "comma separated weight vector")->required();
    discrepancy->add_option("poly", poly_src, "polynomial in the table DSL")->required();

    try {
        app.parse(argc, argv);
        if (analyze->parsed())
            return cmd_analyze(poly_src, param_defs, weights_arg, degree_arg, n_max);
        if (verify->parsed()) return cmd_verify(dataset, format, include_suspect, jobs);
        if (rotate->parsed()) return cmd_rotate(preset_name, bounds);
        if (discrepancy->parsed()) return cmd_discrepancy(weights_arg, poly_src);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
