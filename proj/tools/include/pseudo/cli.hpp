#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace pseudo::cli {

// Runs one invocation; `args` excludes the program name. Returns 0 when every requested
// check passes, 1 when one fails, 2 on usage or input errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace pseudo::cli
