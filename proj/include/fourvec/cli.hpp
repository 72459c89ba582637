#pragma once

#include <string>
#include <vector>

namespace fourvec {

namespace exit_code {
inline constexpr int kOk = 0;
inline constexpr int kCheckFailed = 1;  // verify or bench found a failure
inline constexpr int kUsage = 2;        // bad arguments or literal syntax
inline constexpr int kDomain = 3;       // ZeroNorm, NotRotor, ...
}  // namespace exit_code

struct CommandResult {
  int exit_code = exit_code::kOk;
  std::string out;
  std::string err;
};

/// Runs one `fourvec` invocation. `args` excludes the program name.
CommandResult run_command(const std::vector<std::string>& args);

}  // namespace fourvec
