#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace mcg {

// Exit status: 0 success, 1 a check failed, 2 bad input (signature, format, word, script).
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace mcg
