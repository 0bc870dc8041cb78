#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rsb/json_io.hpp"

namespace rsb::cli {

struct Flags {
    std::optional<std::string> order;
    std::optional<std::string> valuation;
    std::size_t radius = 6;
    long kmax = 64;
    int degree_bound = 512;
    std::string norm = "sum";
    unsigned threads = 1;
    std::size_t max_length = 4;
    bool linear = false;
    std::vector<std::string> words;
    std::vector<std::string> labels;
};

/// Flags echoed in reports, in a fixed key order.
json flags_to_json(const Flags& f);

const std::vector<std::string>& command_names();

/// Runs one subcommand on an input document and returns the "result" part of
/// the report. Throws SchemaError for malformed input and option values.
json run_command(const std::string& command, const json& input, const Flags& flags);

/// The full report for a result.
json make_report(const std::string& command, const Flags& flags, json result, double millis);

}  // namespace rsb::cli
