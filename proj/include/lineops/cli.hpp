#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace lineops {

// Runs one command line (without the program name).  Returns 0 on success,
// 1 on a domain error, 2 on a usage error.  Errors go to `err` as a single
// line "error: <kind>: <message>".
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace lineops
