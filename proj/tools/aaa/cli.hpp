#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "aaa/algebra.hpp"
#include "properties.hpp"

namespace aaa::cli {

/// Exit codes shared by every subcommand.
enum ExitCode : int {
  kOk = 0,
  kFailure = 1,  // property failure or a false equality
  kInputError = 2,  // parse/eval error
  kUsage = 64,
};

struct Streams {
  std::istream& in;
  std::ostream& out;
  std::ostream& err;
  /// Whether stdout is a terminal: adds the element header and REPL prompt.
  bool tty = false;
};

/// Each entry of `sources` is one input line; statements within a line are
/// separated by ';'. Empty `sources` reads lines from `io.in`.
int run_eval(const std::vector<std::string>& sources, const AlgebraContext& ctx, std::uint64_t seed,
             Streams io);

int run_repl(const AlgebraContext& ctx, std::uint64_t seed, Streams io);

int run_parse(bool roundtrip, Streams io);

int run_check(const CheckOptions& opts, Streams io);

/// Full command-line dispatch; `args[0]` is the program name.
int run(const std::vector<std::string>& args, Streams io);

}  // namespace aaa::cli
