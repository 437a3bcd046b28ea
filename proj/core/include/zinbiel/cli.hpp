#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace zinbiel {

/// Command dispatch for the zinbiel tool. `args` excludes the program
/// name. Exit codes: 0 success; 1 mathematical finding under --strict;
/// 2 malformed input (bad flags, unparsable files, unknown names).
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace zinbiel
