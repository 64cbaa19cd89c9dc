#pragma once

#include <string>
#include <vector>

namespace eulerclass {

// Exit codes of the command-line tool.
enum ExitCode : int {
  kExitOk = 0,
  kExitCheckFailed = 1,  // an identity or internal self-check failed
  kExitParse = 2,        // unreadable graph/orientation/tree or bad usage
  kExitInvalidInput = 3,
  kExitResource = 4,
};

struct CliResult {
  int exit_code = kExitOk;
  std::string out;  // JSON document, newline terminated
  std::string err;
};

// Runs one subcommand. args excludes the program name.
CliResult run_cli(const std::vector<std::string>& args);

}  // namespace eulerclass
