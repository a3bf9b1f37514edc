#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

namespace graphpoly {

/// One reproduced computation: what was expected, where the expectation comes
/// from, and what the library computed.
struct VerdictReport {
    std::string check;       // unique id, "<suite>/<name>"
    std::string location;    // topic the value belongs to
    std::string expected;
    std::string provenance;  // PUBLISHED, TRIVIAL or DERIVED
    std::string computed;
    bool pass = false;
    std::string note;        // "erratum-expected-mismatch: ..." and similar
};

/// Suite names accepted by run_suite, in run order (without "all").
const std::vector<std::string>& suite_names();

/// Runs one suite, or every suite for "all". Reports are sorted by check id.
/// Throws std::invalid_argument for an unknown suite name. Check failures are
/// reported, never thrown.
std::vector<VerdictReport> run_suite(std::string_view suite);

bool all_pass(const std::vector<VerdictReport>& reports);

nlohmann::json to_json(const VerdictReport& r);
/// {"suite", "pass", "checks": [...]}
nlohmann::json reports_to_json(std::string_view suite, const std::vector<VerdictReport>& reports);
/// One line per check plus a summary line.
std::string reports_to_text(const std::vector<VerdictReport>& reports);

}  // namespace graphpoly
