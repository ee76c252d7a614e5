#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ringauto::cli {

/// Dispatches a full command line (without the program name) to the
/// subcommands. Exit code 0 on success, 1 on domain errors, 2 on usage
/// errors; all output is deterministic for a fixed argument vector.
int run(std::vector<std::string> args, std::ostream& out, std::ostream& err);

} // namespace ringauto::cli
