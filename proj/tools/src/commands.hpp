#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace minsurf::cli {

// Exit codes of the minsurf tool.
enum Exit : int { kOk = 0, kRejected = 1, kUsage = 2 };

// args[0] is the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace minsurf::cli
