#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace cantor::cli {

/// Runs one command line (without the program name). Returns the process
/// exit code: 0 on success, 1 on invalid input, 2 when a reconstruction
/// procedure rejects its samples.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cantor::cli
