#pragma once

#include <json.hpp>

#include <string>
#include <vector>

#include "lpsign/version.hpp"

namespace lpsign {

/// One row of a per-index table (coefficient index, rendering, error, sign).
struct IndexRow {
    std::size_t n = 0;
    std::string value;
    std::string error;
    char sign = ' ';
};

/// Deterministic analysis report: identical (input, flags, version) produce
/// identical bytes in every format.
struct Report {
    std::string command;
    std::string input_digest = "-";
    std::string version = kVersion;
    std::string backend = "-";
    unsigned precision_bits = 0;
    nlohmann::ordered_json sections = nlohmann::ordered_json::object();
    std::vector<IndexRow> table;
};

/// format is one of "json", "csv", "text"; anything else throws ParseError.
std::string emit_report(const Report& r, const std::string& format);

}  // namespace lpsign
