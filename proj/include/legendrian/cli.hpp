#pragma once

#include <string>
#include <vector>

namespace legendrian::cli {

struct CommandResult {
  int exit_code = 0;  // 0 success, 1 domain error, 2 usage error
  std::string out;
  std::string err;
};

// Runs one command line (without the program name). Output documents are
// returned in `out` unless --out names a file, in which case they are written
// there.
CommandResult run_command(const std::vector<std::string>& args);

}  // namespace legendrian::cli
