/**
 * @file cli.hpp
 * @brief Command-line front end.
 *
 * Subcommands: seq, encode, decode, add, sub, inc, dec, cmp, node,
 * neighbors, path, verify, bench, render.  Every subcommand takes --p.
 * Exit codes: 0 success, 1 verification failure, 2 usage error.
 */
#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace metallic {

/// Run the CLI on the given arguments (without the program name), writing
/// to the given streams.  Returns the process exit code.
int cli_main(const std::vector<std::string>& args, std::ostream& out,
             std::ostream& err);

}  // namespace metallic
