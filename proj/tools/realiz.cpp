#include <iostream>

#include "realiz/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  realiz::cli::Result r = realiz::cli::run(args, std::cin);
  std::cout << r.out;
  if (!r.err.empty()) std::cerr << r.err << (r.err.back() == '\n' ? "" : "\n");
  return r.exit_code;
}
