#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace semsketch {

// Runs one subcommand. Returns 0 on success, 1 on usage errors, 2 on
// data/validation errors. Diagnostics go to err, machine output to files
// or out.
int cli_run(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace semsketch
