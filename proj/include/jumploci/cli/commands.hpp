#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace jumploci {

/// Entry point of the jumploci tool. `args` excludes the program name.
/// Returns the process exit code: 0 when every requested check passes,
/// 1 when a check fails, 2 on malformed input or usage errors.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace jumploci
