// Command-line front end: counting, atlas building, fitness-table lookup,
// graph rendering, statistics, and the self-verification suite.
//
// Exit codes: 0 success, 1 verification failure, 2 usage error (including
// unknown ids and malformed input), 3 capacity error, 4 I/O error.
#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace rankatlas {

// args excludes the program name; returns the process exit code
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace rankatlas
