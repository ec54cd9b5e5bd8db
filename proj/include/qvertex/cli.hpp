#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace qv::cli {

/// Exit statuses of the command-line front end.
enum Status : int {
  ok = 0,
  verification_failed = 1,
  bad_input = 2,   // parse errors and invariant violations
  blow_up = 3,     // a configured size limit was exceeded
};

/// Runs one command line (without the program name). Results go to out,
/// diagnostics to err; the return value is the exit status.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qv::cli
