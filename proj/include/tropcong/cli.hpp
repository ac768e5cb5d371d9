// Copyright (c) tropcong contributors.
// SPDX-License-Identifier: Apache-2.0
#ifndef TROPCONG_CLI_HPP
#define TROPCONG_CLI_HPP

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace tropcong::cli {

struct Config {
  int k_bound = 3;
  std::int64_t closure_degree_bound = 12;
  std::size_t gp_search_bound = 4;
  std::string epsilon = "t^1";
  unsigned jobs = 1;
  std::uint64_t seed = 0;
};

// Exit codes shared by every subcommand.
enum ExitCode {
  kOk = 0,          // success / member
  kNonMember = 1,   // decided non-membership, witness in the payload
  kInputError = 2,  // malformed input
  kResource = 3,    // a configured bound was exceeded
  kUnknown = 4      // semi-decision gave up
};

// Runs one subcommand: JSON on stdin, JSON on stdout, diagnostics on
// stderr. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::istream& in,
        std::ostream& out, std::ostream& err);

}  // namespace tropcong::cli

#endif
