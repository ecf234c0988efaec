#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace tabcomp {

// Exit statuses of the command-line tool.
enum ExitStatus : int {
    exit_ok = 0,
    exit_domain_error = 1,
    exit_malformed_input = 2,
};

// Runs the tool on argv-style arguments (program name first). File arguments
// named "-" or omitted read from `in`.
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
            std::ostream& err);

} // namespace tabcomp
