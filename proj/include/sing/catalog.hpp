#pragma once

#include "sing/complements.hpp"
#include "sing/parse.hpp"

#include <json.hpp>

#include <fstream>
#include <set>
#include <sstream>
#include <thread>

namespace sing {

using Json = nlohmann::ordered_json;

enum class CurationStatus { Clean, OcrSuspect };

/// One machine-readable classification-table row.
struct TableRow {
    int table_id = 0;
    int row_id = 0;
    std::string sub_label;
    std::string poly_src;
    std::map<std::string, long long> params;
    std::optional<std::vector<Int>> expected_weights;
    std::vector<Int> expected_atilde;
    Int expected_dtilde = 0;
    std::optional<std::vector<Int>> expected_reduced_space;
    std::vector<Rat> expected_diff;
    Int expected_index = 0;
    std::string notes;
    CurationStatus status = CurationStatus::Clean;
};

enum class Verdict { Verified, NecessaryPass, Mismatch, Degenerate, ParseFail };

inline const char* verdict_name(Verdict v) {
    switch (v) {
        case Verdict::Verified: return "verified";
        case Verdict::NecessaryPass: return "necessary_pass";
        case Verdict::Mismatch: return "mismatch";
        case Verdict::Degenerate: return "degenerate";
        case Verdict::ParseFail: return "parse_fail";
    }
    return "?";
}

struct RowReport {
    TableRow row;
    Verdict verdict = Verdict::ParseFail;
    std::string detail;
    std::optional<WeightSystem> weights;
    std::optional<WellFormedDatum> datum;
    std::optional<ComplementProfile> profile;
    std::optional<long long> index_candidate;
};

namespace detail {

struct SchemaError : Error {
    SchemaError(std::size_t line, const std::string& what)
        : Error("dataset line " + std::to_string(line) + ": " + what) {}
};

inline std::vector<Int> json_int_vec(const Json& j, std::size_t line, const std::string& field) {
    if (!j.is_array()) throw SchemaError(line, field + " must be an array");
    std::vector<Int> v;
    for (const auto& e : j) {
        if (!e.is_number_integer()) throw SchemaError(line, field + " entries must be integers");
        v.emplace_back(e.get<long long>());
    }
    return v;
}

inline Rat json_rat(const Json& j, std::size_t line, const std::string& field) {
    if (j.is_number_integer()) return Rat(j.get<long long>());
    if (j.is_string()) return parse_rat(j.get<std::string>());
    throw SchemaError(line, field + " entries must be integers or \"p/q\" strings");
}

inline bool standard_coefficient(const Rat& r) {
    if (r == 0) return true;
    return numerator(r) + 1 == denominator(r);  // (m-1)/m
}

}  // namespace detail

inline TableRow parse_row(const Json& j, std::size_t line) {
    using detail::SchemaError;
    TableRow row;
    auto need = [&](const char* field) -> const Json& {
        if (!j.contains(field)) throw SchemaError(line, std::string("missing field ") + field);
        return j.at(field);
    };
    const auto& t = need("table_id");
    if (!t.is_number_integer()) throw SchemaError(line, "table_id must be an integer");
    row.table_id = t.get<int>();
    if (row.table_id < 1 || row.table_id > 17) throw SchemaError(line, "table_id out of range 1..17");
    const auto& r = need("row_id");
    if (!r.is_number_integer()) throw SchemaError(line, "row_id must be an integer");
    row.row_id = r.get<int>();
    if (j.contains("sub_label")) row.sub_label = j.at("sub_label").get<std::string>();
    row.poly_src = need("poly_src").get<std::string>();
    if (j.contains("params")) {
        if (!j.at("params").is_object()) throw SchemaError(line, "params must be an object");
        for (const auto& [k, v] : j.at("params").items()) {
            if (!v.is_number_integer()) throw SchemaError(line, "params values must be integers");
            row.params[k] = v.get<long long>();
        }
    }
    if (j.contains("expected_weights") && !j.at("expected_weights").is_null())
        row.expected_weights = detail::json_int_vec(j.at("expected_weights"), line, "expected_weights");
    row.expected_atilde = detail::json_int_vec(need("expected_atilde"), line, "expected_atilde");
    for (const Int& v : row.expected_atilde)
        if (v <= 0) throw SchemaError(line, "expected_atilde entries must be positive");
    const auto& dt = need("expected_dtilde");
    if (!dt.is_number_integer() || dt.get<long long>() <= 0)
        throw SchemaError(line, "expected_dtilde must be a positive integer");
    row.expected_dtilde = dt.get<long long>();
    if (j.contains("expected_reduced_space") && !j.at("expected_reduced_space").is_null())
        row.expected_reduced_space =
            detail::json_int_vec(j.at("expected_reduced_space"), line, "expected_reduced_space");
    const auto& diffs = need("expected_diff");
    if (!diffs.is_array()) throw SchemaError(line, "expected_diff must be an array");
    for (const auto& e : diffs) {
        Rat d = detail::json_rat(e, line, "expected_diff");
        if (!detail::standard_coefficient(d))
            throw SchemaError(line, "expected_diff entry " + rat_str(d) +
                                        " is not a standard coefficient 0 or (m-1)/m");
        row.expected_diff.push_back(std::move(d));
    }
    const auto& idx = need("expected_index");
    if (!idx.is_number_integer() || idx.get<long long>() < 1)
        throw SchemaError(line, "expected_index must be a positive integer");
    row.expected_index = idx.get<long long>();
    if (j.contains("notes")) row.notes = j.at("notes").get<std::string>();
    std::string st = need("curation_status").get<std::string>();
    if (st == "clean") row.status = CurationStatus::Clean;
    else if (st == "ocr_suspect") row.status = CurationStatus::OcrSuspect;
    else throw SchemaError(line, "curation_status must be clean or ocr_suspect");
    return row;
}

/// Loads a line-delimited dataset; blank lines and '#' comments are skipped.
inline std::vector<TableRow> load_dataset(std::istream& in) {
    std::vector<TableRow> rows;
    std::set<std::string> seen;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::size_t i = line.find_first_not_of(" \t\r");
        if (i == std::string::npos || line[i] == '#') continue;
        Json j;
        try {
            j = Json::parse(line);
        } catch (const std::exception& e) {
            throw detail::SchemaError(lineno, std::string("invalid JSON: ") + e.what());
        }
        TableRow row = parse_row(j, lineno);
        std::string key = std::to_string(row.table_id) + "/" + std::to_string(row.row_id) + "/" +
                          row.sub_label + "/";
        for (const auto& [k, v] : row.params) key += k + "=" + std::to_string(v) + ",";
        if (!seen.insert(key).second)
            throw detail::SchemaError(lineno, "duplicate row " + key);
        rows.push_back(std::move(row));
    }
    return rows;
}

inline std::vector<TableRow> load_dataset(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open dataset file: " + path);
    return load_dataset(in);
}

namespace detail {

template <class T>
std::string vec_str(const std::vector<T>& v, std::string (*fmt)(const T&)) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ",";
        s += fmt(v[i]);
    }
    return s + ")";
}

inline std::string int_vec_str(const std::vector<Int>& v) { return vec_str<Int>(v, int_str); }
inline std::string rat_vec_str(const std::vector<Rat>& v) { return vec_str<Rat>(v, rat_str); }

}  // namespace detail

/**
 * Runs one row through the full pipeline: parse, instantiate, weight
 * detection, the canonical-side numeric criteria, well-formization, field
 * comparison and the complement profile.  Every failure is a verdict, not
 * an exception.
 */
inline RowReport verify_row(const TableRow& row, long long n_max = 100) {
    RowReport rep;
    rep.row = row;
    SupportedPolynomial poly;
    try {
        std::vector<std::string> params;
        for (const auto& [k, v] : row.params) params.push_back(k);
        poly = instantiate(parse_expression(row.poly_src, params), row.params);
        if (poly.empty()) throw Error("polynomial instantiates to zero");
    } catch (const std::exception& e) {
        rep.verdict = Verdict::ParseFail;
        rep.detail = e.what();
        return rep;
    }
    try {
        WeightSystem ws;
        auto det = detect_weights(poly);
        if (row.expected_weights) {
            Int d = dot(*row.expected_weights, poly.terms[0].first);
            ws = WeightSystem{*row.expected_weights, d};
            if (!check_weights(poly, ws)) {
                rep.verdict = Verdict::Degenerate;
                rep.detail = "not quasihomogeneous for the stated weights";
                return rep;
            }
            if (det.kind == WeightDetection::Unique && !(det.system->weights == ws.weights)) {
                rep.verdict = Verdict::Mismatch;
                rep.detail = "weights: computed " + detail::int_vec_str(det.system->weights) +
                             " expected " + detail::int_vec_str(ws.weights);
                return rep;
            }
        } else if (det.kind == WeightDetection::Unique) {
            ws = *det.system;
        } else {
            rep.verdict = Verdict::Degenerate;
            rep.detail = det.kind == WeightDetection::NotQuasihomogeneous
                             ? "not quasihomogeneous"
                             : "weights underdetermined and no expected weights supplied";
            return rep;
        }
        rep.weights = ws;

        auto crit = numeric_criteria(ws, poly);
        if (!crit.canonical_bound || !crit.one_in_interior) {
            rep.verdict = Verdict::Degenerate;
            rep.detail = "canonical-side necessary condition fails (sum p - d = " +
                         crit.sum_minus_degree.str() + ", interior=" +
                         (crit.one_in_interior ? "yes" : "no") + ")";
            return rep;
        }

        WellFormedDatum wfd;
        try {
            wfd = linear_cone_reduce(well_formize(make_hypersurface(ws.weights, ws.degree, poly)));
        } catch (const std::exception& e) {
            rep.verdict = Verdict::Degenerate;
            rep.detail = e.what();
            return rep;
        }
        rep.datum = wfd;

        auto mismatch = [&](const std::string& field, const std::string& got,
                            const std::string& want) {
            rep.verdict = Verdict::Mismatch;
            rep.detail = field + ": computed " + got + " expected " + want;
        };
        if (wfd.atilde != row.expected_atilde) {
            mismatch("atilde", detail::int_vec_str(wfd.atilde),
                     detail::int_vec_str(row.expected_atilde));
            return rep;
        }
        if (wfd.dtilde != row.expected_dtilde) {
            mismatch("dtilde", wfd.dtilde.str(), row.expected_dtilde.str());
            return rep;
        }
        if (wfd.diff != row.expected_diff) {
            mismatch("diff", detail::rat_vec_str(wfd.diff), detail::rat_vec_str(row.expected_diff));
            return rep;
        }
        if (row.expected_reduced_space) {
            if (!wfd.linear_cone) {
                mismatch("reduced_space", "none", detail::int_vec_str(*row.expected_reduced_space));
                return rep;
            }
            // Weighted projective space weights are an unordered tuple.
            auto got = wfd.linear_cone->space, want = *row.expected_reduced_space;
            std::sort(got.begin(), got.end());
            std::sort(want.begin(), want.end());
            if (got != want) {
                mismatch("reduced_space", detail::int_vec_str(wfd.linear_cone->space),
                         detail::int_vec_str(*row.expected_reduced_space));
                return rep;
            }
        }

        long long expect_n = to_ll(row.expected_index);
        auto profile = complement_profile(wfd, std::max(n_max, expect_n));
        rep.profile = profile;
        rep.index_candidate = profile.candidate;
        if (profile.candidate && *profile.candidate == expect_n) {
            rep.verdict = Verdict::Verified;
        } else if (profile.by_index.count(expect_n) && profile.by_index.at(expect_n).representable) {
            rep.verdict = Verdict::NecessaryPass;
            rep.detail = "printed index " + std::to_string(expect_n) +
                         " passes the existence conditions but the least passing index is " +
                         (profile.candidate ? std::to_string(*profile.candidate) : "none");
        } else {
            rep.verdict = Verdict::Mismatch;
            rep.detail = "index: computed " +
                         (profile.candidate ? std::to_string(*profile.candidate) : "none") +
                         " expected " + std::to_string(expect_n);
        }
    } catch (const std::exception& e) {
        rep.verdict = Verdict::Degenerate;
        rep.detail = e.what();
    }
    return rep;
}

struct VerifySummary {
    std::size_t total = 0;
    std::map<std::string, std::size_t> by_verdict;
    std::size_t clean_failures = 0;  // Mismatch/Degenerate/ParseFail among Clean rows
    bool ok() const { return clean_failures == 0; }
};

/// Verifies rows in parallel; reports come back in dataset order whatever
/// the thread count.
inline std::pair<std::vector<RowReport>, VerifySummary> verify_all(
    const std::vector<TableRow>& rows, unsigned parallelism = 1, long long n_max = 100) {
    std::vector<RowReport> reports(rows.size());
    if (parallelism == 0) parallelism = 1;
    parallelism = std::min<unsigned>(parallelism, std::max<std::size_t>(rows.size(), 1));
    if (parallelism <= 1) {
        for (std::size_t i = 0; i < rows.size(); ++i) reports[i] = verify_row(rows[i], n_max);
    } else {
        std::vector<std::thread> pool;
        for (unsigned w = 0; w < parallelism; ++w)
            pool.emplace_back([&, w] {
                for (std::size_t i = w; i < rows.size(); i += parallelism)
                    reports[i] = verify_row(rows[i], n_max);
            });
        for (auto& th : pool) th.join();
    }
    VerifySummary sum;
    sum.total = reports.size();
    for (const auto& r : reports) {
        ++sum.by_verdict[verdict_name(r.verdict)];
        if (r.row.status == CurationStatus::Clean && r.verdict != Verdict::Verified &&
            r.verdict != Verdict::NecessaryPass)
            ++sum.clean_failures;
    }
    return {std::move(reports), std::move(sum)};
}

inline Json report_json(const RowReport& r) {
    Json j;
    j["table"] = r.row.table_id;
    j["row"] = r.row.row_id;
    if (!r.row.sub_label.empty()) j["sub"] = r.row.sub_label;
    Json params = Json::object();
    for (const auto& [k, v] : r.row.params) params[k] = v;
    j["params"] = params;
    j["status"] = r.row.status == CurationStatus::Clean ? "clean" : "ocr_suspect";
    j["verdict"] = verdict_name(r.verdict);
    if (!r.detail.empty()) j["detail"] = r.detail;
    if (r.datum) {
        Json c;
        if (r.weights) {
            Json w = Json::array();
            for (const Int& v : r.weights->weights) w.push_back(to_ll(v));
            c["weights"] = w;
            c["degree"] = to_ll(r.weights->degree);
        }
        Json at = Json::array(), q = Json::array(), diff = Json::array();
        for (const Int& v : r.datum->atilde) at.push_back(to_ll(v));
        for (const Int& v : r.datum->q) q.push_back(to_ll(v));
        for (const Rat& v : r.datum->diff) diff.push_back(rat_str(v));
        c["atilde"] = at;
        c["dtilde"] = to_ll(r.datum->dtilde);
        c["q"] = q;
        c["diff"] = diff;
        c["fano_deg"] = rat_str(degree_data(*r.datum).fano_deg);
        if (r.datum->linear_cone) {
            Json sp = Json::array();
            for (const Int& v : r.datum->linear_cone->space) sp.push_back(to_ll(v));
            c["reduced_space"] = sp;
        }
        if (r.index_candidate) c["index_candidate"] = *r.index_candidate;
        if (r.profile) {
            Json rt = Json::array();
            long long upto = std::min<long long>(
                r.index_candidate ? std::max<long long>(*r.index_candidate, 12) : 12,
                r.profile->by_index.empty() ? 0 : r.profile->by_index.rbegin()->first);
            for (long long n = 1; n <= upto; ++n) {
                const auto& e = r.profile->by_index.at(n);
                Json en;
                en["n"] = n;
                en["r_floor"] = rat_str(e.r_floor);
                en["r_ceil"] = rat_str(e.r_ceil);
                en["representable"] = e.representable;
                rt.push_back(en);
            }
            c["r_table"] = rt;
            c["screen_regular_complement_absent"] = r.profile->regular_complement_absent;
            c["screen_big_coefficient"] = r.profile->big_coefficient;
        }
        j["computed"] = c;
    }
    Json e;
    Json at = Json::array(), diff = Json::array();
    for (const Int& v : r.row.expected_atilde) at.push_back(to_ll(v));
    for (const Rat& v : r.row.expected_diff) diff.push_back(rat_str(v));
    e["atilde"] = at;
    e["dtilde"] = to_ll(r.row.expected_dtilde);
    e["diff"] = diff;
    if (r.row.expected_reduced_space) {
        Json sp = Json::array();
        for (const Int& v : *r.row.expected_reduced_space) sp.push_back(to_ll(v));
        e["reduced_space"] = sp;
    }
    e["index"] = to_ll(r.row.expected_index);
    j["expected"] = e;
    if (!r.row.notes.empty()) j["notes"] = r.row.notes;
    return j;
}

/// Deterministic serialization of a report batch.
inline std::string emit_report(const std::vector<RowReport>& reports, const std::string& format) {
    if (format == "json") {
        Json arr = Json::array();
        for (const auto& r : reports) arr.push_back(report_json(r));
        return arr.dump(2) + "\n";
    }
    if (format != "text") throw Error("unknown report format: " + format);
    std::ostringstream out;
    std::map<int, std::map<std::string, int>> matrix;
    for (const auto& r : reports) ++matrix[r.row.table_id][verdict_name(r.verdict)];
    out << "table  verified  necessary  mismatch  degenerate  parse_fail\n";
    for (const auto& [tid, counts] : matrix) {
        auto get = [&](const char* k) {
            auto it = counts.find(k);
            return it == counts.end() ? 0 : it->second;
        };
        char buf[96];
        std::snprintf(buf, sizeof buf, "%5d  %8d  %9d  %8d  %10d  %10d\n", tid, get("verified"),
                      get("necessary_pass"), get("mismatch"), get("degenerate"), get("parse_fail"));
        out << buf;
    }
    for (const auto& r : reports) {
        if (r.verdict == Verdict::Verified) continue;
        out << "table " << r.row.table_id << " row " << r.row.row_id;
        if (!r.row.sub_label.empty()) out << " [" << r.row.sub_label << "]";
        for (const auto& [k, v] : r.row.params) out << " " << k << "=" << v;
        out << ": " << verdict_name(r.verdict);
        if (!r.detail.empty()) out << " (" << r.detail << ")";
        out << "\n";
    }
    return out.str();
}

}  // namespace sing
