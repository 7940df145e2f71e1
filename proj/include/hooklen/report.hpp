#pragma once

#include <string>

#include <json.hpp>

#include "hooklen/identities.hpp"

namespace hooklen {

struct ReportFormat {
    /// elapsed_ms is the only field that varies between identical runs.
    bool include_timing = true;
};

/// {family, m, n, S, pass, lhs: [coeffs], rhs: [coeffs], trees_visited, elapsed_ms}
/// with coefficients as exact "p/q" strings, lowest degree first. S is a list
/// of positions, or null for families without a position set.
nlohmann::json to_json(const VerificationReport& report, const ReportFormat& format = {});

/// {"reports": [...], "summary": {"total", "passed", "failed"}}
nlohmann::json to_json(const SuiteResult& suite, const ReportFormat& format = {});

/// Header plus one row per report; lists inside a cell are ';'-separated.
std::string to_csv(const SuiteResult& suite, const ReportFormat& format = {});

/// Checks a parsed JSON document against the suite schema; returns an empty
/// string when valid, otherwise a description of the first problem.
std::string validate_suite_json(const nlohmann::json& doc);

} // namespace hooklen
