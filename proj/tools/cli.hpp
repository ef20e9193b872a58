#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace pww::cli {

enum ExitCode { kOk = 0, kMismatch = 1, kUsage = 2, kPrecondition = 3 };

// args excludes the program name. `in` feeds compute when no --input is given.
int run(const std::vector<std::string> &args, std::istream &in, std::ostream &out, std::ostream &err);

} // namespace pww::cli
