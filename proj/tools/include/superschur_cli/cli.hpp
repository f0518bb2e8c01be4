#pragma once

#include <string>
#include <vector>

namespace superschur::cli {

enum ExitCode : int {
  kOk = 0,
  kInvalid = 1,     // mathematically invalid input, or not nilpotent for classify
  kParseFailure = 2,
  kUsage = 64,
};

struct CommandResult {
  int exit_code = kOk;
  std::string out;
  std::string err;
};

/// Runs one command. `args` excludes the program name, so args[0] is the command.
CommandResult run(const std::vector<std::string>& args);

std::string usage();

}  // namespace superschur::cli
