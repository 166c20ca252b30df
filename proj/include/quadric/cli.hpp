#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "quadric/ring.hpp"

namespace quadric {

enum class OutputFormat { Text, Json };

struct RingSelector {
    std::string family;  // go | o | gl | toda
    int rank = 0;
};

struct CliRequest {
    std::string command;
    std::optional<RingSelector> ring;
    std::vector<std::string> exprs;
    int parity = 1;
    OutputFormat format = OutputFormat::Text;
    int degree_cap = kDefaultDegreeCap;
};

enum ExitCode : int { kExitOk = 0, kExitUsage = 2, kExitMath = 3, kExitInternal = 4 };

// Throws PreconditionViolation on a malformed selector such as "go:" or "xx:3".
RingSelector parse_ring_selector(const std::string& text);

// Runs one command; results go to `out`, diagnostics to `err`.
int run_command(const CliRequest& req, std::ostream& out, std::ostream& err);
// argv front end.
int run_cli(int argc, char** argv, std::ostream& out, std::ostream& err);

std::vector<std::string> cli_commands();

}  // namespace quadric
