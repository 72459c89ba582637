#include <iostream>
#include <string>
#include <vector>

#include "fourvec/cli.hpp"

int main(int argc, char** argv) {
  const std::vector<std::string> args(argv + 1, argv + argc);
  const fourvec::CommandResult result = fourvec::run_command(args);
  std::cout << result.out;
  std::cerr << result.err;
  return result.exit_code;
}
