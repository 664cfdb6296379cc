#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "gkz/json_io.hpp"

namespace gkz::cli {

struct Options {
    std::optional<std::string> truncation;
    std::uint64_t seed = 1;
    double tolerance = 1e-12;
};

struct Result {
    int exit_code = 0;
    Json output;
};

/// Runs one command on a parsed job document. Exit codes: 0 success,
/// 1 malformed input, 2 domain error.
Result run_command(const std::string& command, const Json& job, const Options& options);

} // namespace gkz::cli
