#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace mubcoh {

// args excludes the program name. Returns the process exit code:
// 0 success, 1 sweep violation, 2 usage/parse/domain errors.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace mubcoh
