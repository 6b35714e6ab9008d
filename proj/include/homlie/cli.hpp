#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace homlie::cli {

/// Stable exit-code contract of the command-line tool.
enum ExitCode : int {
    ok = 0,
    parse_error = 1,       ///< unreadable file, bad document, bad SPEC, bad usage
    negative_verdict = 2,  ///< not solvable / not nilpotent / not a morphism / axioms fail
    refused = 3,           ///< precondition refusal (not multiplicative, not an ideal, step bound hit)
};

/// Runs one command; args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace homlie::cli
