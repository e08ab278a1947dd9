#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace bipramsey {

/// Runs one subcommand. Returns 0 on success, 1 on an operation error or a
/// failed check (with an "error: <code>" line on `err` for errors), 2 on a
/// usage error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace bipramsey
