#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ratapprox {

/// Runs the command-line surface against explicit streams (the binary's main
/// forwards argv; tests drive it in-process). `args` excludes the program
/// name. Exit codes: 0 success, 1 verification failure, 2 usage error,
/// 3 precision exhausted.
int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace ratapprox
