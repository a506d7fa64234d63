#include <exception>
#include <iostream>
#include <string>
#include <vector>

#include "cyclorth/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  try {
    return cyclorth::cli::run(args, std::cout, std::cerr);
  } catch (const std::exception& e) {
    // Only reachable through a library bug (failed internal consistency check).
    std::cerr << "internal error: " << e.what() << '\n';
    return 3;
  }
}
