#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

namespace mbslab::cli {

enum ExitCode : int {
    kOk = 0,
    kInvalidInput = 2,  // bad flags, malformed scenario, domain violation
    kComputation = 3,   // unexpected failure inside an analytics call
    kIo = 4,            // unreadable scenario or unwritable output
};

// Rendered result of one subcommand: the CSV body and a short key: value
// summary for humans.
struct Report {
    std::string csv;
    std::string summary;
};

// Subcommand names in help order.
const std::vector<std::string>& commands();

// Runs `command` on a decoded scenario. Pure: no files, no environment.
Report run_command(std::string_view command, const nlohmann::json& request);

// Full CLI entry point. CSV goes to --out, else to $MBSLAB_OUT_DIR/<command>.csv,
// else to `out`; the summary goes to `out` when the CSV went to a file and to
// `err` otherwise.
int main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace mbslab::cli
