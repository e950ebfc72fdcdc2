#pragma once

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <string>

namespace permcycle::testing {

struct RunResult {
  int exit_code = -1;
  std::string out;
};

/// Runs `binary args` through the shell, capturing stdout; stderr is
/// discarded.
inline RunResult run_cli(const std::string& binary, const std::string& args) {
  const std::string command = "'" + binary + "' " + args + " 2>/dev/null";
  RunResult result;
  FILE* pipe = ::popen(command.c_str(), "r");
  if (!pipe) return result;
  std::array<char, 65536> buffer{};
  std::size_t n;
  while ((n = std::fread(buffer.data(), 1, buffer.size(), pipe)) > 0) result.out.append(buffer.data(), n);
  const int status = ::pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

}  // namespace permcycle::testing
