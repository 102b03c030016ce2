#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace kreweras {

/// Entry point of the command-line tool, separated from main() so tests can
/// drive it in-process. args excludes the program name. Returns the process
/// exit code: 0 on success, 1 for domain errors (reported as one line on err),
/// 2 for command-line usage errors.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace kreweras
