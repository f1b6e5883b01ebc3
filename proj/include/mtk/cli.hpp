#pragma once

#include <string>
#include <vector>

namespace mtk {

struct CommandResult {
  int exit_code = 0;  // 0 success, 1 verification failure, 2 usage or I/O error
  std::string out;
  std::string err;
};

/// Runs one command line (without the program name).
CommandResult run(const std::vector<std::string>& args);

}  // namespace mtk
