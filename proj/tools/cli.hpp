#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace weylkl::cli {

// Command-line entry point; returns the process exit code. Normal output
// goes to out (only on success, never partially), diagnostics to err.
int run(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace weylkl::cli
