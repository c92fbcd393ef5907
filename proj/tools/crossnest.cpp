#include <iostream>
#include <string>
#include <vector>

#include "crossnest/cli.hpp"

int main(int argc, char** argv) {
  const std::vector<std::string> args(argv + 1, argv + argc);
  const auto result = crossnest::cli::run(args);
  std::cout << result.output;
  std::cerr << result.error;
  return result.exit_code;
}
