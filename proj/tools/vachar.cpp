#include "vachar/cli.hpp"

#include <iostream>

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  vachar::cli::RunResult result = vachar::cli::run(args);
  std::cout << result.output;
  if (!result.error.empty()) std::cerr << "vachar: " << result.error << "\n";
  return result.exit_code;
}
