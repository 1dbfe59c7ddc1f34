#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace arabidx::cli {

// Runs one subcommand. Results go to out, diagnostics to err.
// Returns 0 on success or the ErrorKind exit status.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace arabidx::cli
