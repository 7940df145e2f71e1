#include "hooklen/report.hpp"

#include <sstream>

namespace hooklen {

namespace {

using nlohmann::json;

json coefficient_list(const Poly& p) {
    return p.coefficient_strings();
}

std::string join(const std::vector<std::string>& items, char sep) {
    std::string out;
    for (std::size_t i = 0; i < items.size(); ++i) {
        out += (i == 0 ? "" : std::string(1, sep)) + items[i];
    }
    return out;
}

double elapsed_ms(const VerificationReport& r) {
    return std::chrono::duration<double, std::milli>(r.elapsed).count();
}

} // namespace

json to_json(const VerificationReport& r, const ReportFormat& format) {
    json out;
    out["family"] = std::string(to_string(r.spec.family));
    out["m"] = r.spec.m;
    out["n"] = r.spec.n;
    out["S"] = r.spec.subset ? json(r.spec.subset->to_vector()) : json(nullptr);
    out["pass"] = r.pass;
    out["lhs"] = coefficient_list(r.lhs);
    out["rhs"] = coefficient_list(r.rhs);
    out["trees_visited"] = r.trees_visited;
    out["elapsed_ms"] = format.include_timing ? elapsed_ms(r) : 0.0;
    if (!r.detail.empty()) {
        out["detail"] = r.detail;
    }
    return out;
}

json to_json(const SuiteResult& suite, const ReportFormat& format) {
    json reports = json::array();
    for (const auto& r : suite.reports) {
        reports.push_back(to_json(r, format));
    }
    return {
        {"reports", std::move(reports)},
        {"summary", {{"total", suite.reports.size()}, {"passed", suite.passed}, {"failed", suite.failed}}},
    };
}

std::string to_csv(const SuiteResult& suite, const ReportFormat& format) {
    std::ostringstream out;
    out << "family,m,n,S,pass,lhs,rhs,trees_visited,elapsed_ms\n";
    for (const auto& r : suite.reports) {
        std::vector<std::string> subset;
        if (r.spec.subset) {
            for (int p : r.spec.subset->to_vector()) {
                subset.push_back(std::to_string(p));
            }
        }
        out << to_string(r.spec.family) << ',' << r.spec.m << ',' << r.spec.n << ','
            << (r.spec.subset ? join(subset, ';') : "-") << ',' << (r.pass ? "true" : "false") << ','
            << join(r.lhs.coefficient_strings(), ';') << ',' << join(r.rhs.coefficient_strings(), ';') << ','
            << r.trees_visited << ',' << (format.include_timing ? elapsed_ms(r) : 0.0) << '\n';
    }
    return out.str();
}

std::string validate_suite_json(const json& doc) {
    if (!doc.is_object() || !doc.contains("reports") || !doc["reports"].is_array()) {
        return "top level must be an object with a 'reports' array";
    }
    if (!doc.contains("summary") || !doc["summary"].is_object()) {
        return "missing 'summary' object";
    }
    for (const char* key : {"total", "passed", "failed"}) {
        if (!doc["summary"].contains(key) || !doc["summary"][key].is_number_unsigned()) {
            return std::string("summary.") + key + " must be a nonnegative integer";
        }
    }
    std::size_t passed = 0;
    for (std::size_t i = 0; i < doc["reports"].size(); ++i) {
        const json& r = doc["reports"][i];
        const std::string at = "reports[" + std::to_string(i) + "]";
        if (!r.is_object()) {
            return at + " must be an object";
        }
        if (!r.contains("family") || !r["family"].is_string() || !parse_family(r["family"].get<std::string>())) {
            return at + ".family must name a known family";
        }
        for (const char* key : {"m", "n"}) {
            if (!r.contains(key) || !r[key].is_number_integer()) {
                return at + "." + key + " must be an integer";
            }
        }
        if (!r.contains("S") || !(r["S"].is_null() || r["S"].is_array())) {
            return at + ".S must be null or an array";
        }
        if (r["S"].is_array()) {
            for (const auto& p : r["S"]) {
                if (!p.is_number_integer() || p.get<int>() < 1) {
                    return at + ".S entries must be positive integers";
                }
            }
        }
        if (!r.contains("pass") || !r["pass"].is_boolean()) {
            return at + ".pass must be a boolean";
        }
        for (const char* key : {"lhs", "rhs"}) {
            if (!r.contains(key) || !r[key].is_array() || r[key].empty()) {
                return at + "." + key + " must be a nonempty coefficient array";
            }
            for (const auto& c : r[key]) {
                if (!c.is_string()) {
                    return at + "." + key + " coefficients must be strings";
                }
                try {
                    (void)BigRational::parse(c.get<std::string>());
                } catch (const std::exception&) {
                    return at + "." + key + " has a malformed rational '" + c.get<std::string>() + "'";
                }
            }
        }
        if (!r.contains("trees_visited") || !r["trees_visited"].is_number_unsigned()) {
            return at + ".trees_visited must be a nonnegative integer";
        }
        if (!r.contains("elapsed_ms") || !r["elapsed_ms"].is_number()) {
            return at + ".elapsed_ms must be a number";
        }
        passed += r["pass"].get<bool>() ? 1 : 0;
    }
    if (doc["summary"]["total"].get<std::size_t>() != doc["reports"].size() ||
        doc["summary"]["passed"].get<std::size_t>() != passed ||
        doc["summary"]["failed"].get<std::size_t>() != doc["reports"].size() - passed) {
        return "summary counts do not match the reports";
    }
    return {};
}

} // namespace hooklen
