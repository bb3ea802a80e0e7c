#pragma once

#include <iosfwd>

namespace sea {

// Full command-line front end. Returns the process exit code:
//   0  completed, nothing found to complain about
//   1  axiom violations or uniqueness inconsistencies found
//   2  usage, parse, or model errors
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace sea
