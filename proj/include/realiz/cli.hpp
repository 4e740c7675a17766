#pragma once

#include <istream>
#include <string>
#include <vector>

namespace realiz::cli {

/// Exit codes: 0 success, 2 negative mathematical outcome (NotRealizable or
/// an obstruction witness), 1 usage or input error.
struct Result {
  std::string out;
  std::string err;
  int exit_code = 0;
};

/// Runs one command line (without the program name). Classes not given by
/// --class are read from `in`.
Result run(const std::vector<std::string>& args, std::istream& in);

/// Grammar summary printed with usage errors.
const char* grammar_help();

}  // namespace realiz::cli
