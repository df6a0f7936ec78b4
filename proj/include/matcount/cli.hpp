#pragma once

#include <string>
#include <vector>

namespace matcount::cli {

// Runs the tool on argv-style arguments (program name excluded).
// Exit status: 0 success, 1 validation failure, 2 usage error.
int run(const std::vector<std::string>& args);

}  // namespace matcount::cli
