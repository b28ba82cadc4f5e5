#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace thuelab {

/// Exit codes: 0 success, 1 failed check or verification, 2 usage error.
/// `args` excludes the program name.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace thuelab
