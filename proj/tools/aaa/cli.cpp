#include "cli.hpp"

#include <cstdlib>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "aaa/error.hpp"
#include "aaa/exprlang.hpp"
#include "aaa/textio.hpp"

namespace aaa::cli {

namespace {

constexpr const char* kElementHeader = "free antiassociative algebra element:";

std::string locate(const Error& e, std::size_t line) {
  std::ostringstream os;
  os << line;
  if (e.has_pos()) os << ":" << e.pos().column;
  os << ": " << to_string(e.kind()) << ": " << e.what();
  return os.str();
}

void print_result(const expr::StatementResult& r, const Streams& io) {
  if (const auto* e = std::get_if<Element>(&r)) {
    if (io.tty) io.out << kElementHeader << "\n";
    io.out << serialize(*e) << "\n";
  } else if (const auto* b = std::get_if<bool>(&r)) {
    io.out << (*b ? "true" : "false") << "\n";
  }
}

/// Runs one source line. Returns false on a false equality.
bool run_line(const std::string& line, expr::Env& env, const Streams& io) {
  bool all_true = true;
  for (const auto& stmt : expr::parse_program(line)) {
    const auto result = execute(stmt, env);
    if (const auto* b = std::get_if<bool>(&result); b && !*b) all_true = false;
    print_result(result, io);
  }
  return all_true;
}

std::uint64_t parse_seed(const std::string& text) {
  // stoull would silently wrap a leading '-'.
  if (text.empty() || text.front() < '0' || text.front() > '9') throw std::invalid_argument("not a number");
  std::size_t used = 0;
  const unsigned long long v = std::stoull(text, &used);
  if (used != text.size()) throw std::invalid_argument("trailing characters");
  return v;
}

}  // namespace

int run_eval(const std::vector<std::string>& sources, const AlgebraContext& ctx, std::uint64_t seed,
             Streams io) {
  std::vector<std::string> lines;
  for (const auto& src : sources) {
    std::istringstream ss(src);
    for (std::string l; std::getline(ss, l);) lines.push_back(l);
  }
  if (sources.empty()) {
    for (std::string l; std::getline(io.in, l);) lines.push_back(l);
  }

  expr::Env env(ctx, seed);
  int code = kOk;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    try {
      if (!run_line(lines[i], env, io)) code = kFailure;
    } catch (const Error& e) {
      io.err << "aaa eval: " << locate(e, i + 1) << "\n";
      return kInputError;
    }
  }
  return code;
}

int run_repl(const AlgebraContext& ctx, std::uint64_t seed, Streams io) {
  expr::Env env(ctx, seed);
  std::size_t line_no = 0;
  for (;;) {
    if (io.tty) io.out << "aaa> " << std::flush;
    std::string line;
    if (!std::getline(io.in, line)) break;
    ++line_no;

    std::istringstream words(line);
    std::string command;
    words >> command;
    if (command == ":quit" || command == ":q") break;
    if (command == ":k" || command == ":seed") {
      std::string arg;
      words >> arg;
      try {
        if (command == ":k") {
          env.reset(AlgebraContext{Coefficient::parse(arg)});
          io.out << "k = " << env.context().k << "; bindings cleared\n";
        } else {
          env.reseed(parse_seed(arg));
          io.out << "seed = " << env.seed() << "\n";
        }
      } catch (const std::exception& e) {
        io.err << "error: " << command << " " << arg << ": " << e.what() << "\n";
      }
      continue;
    }
    if (!command.empty() && command.front() == ':') {
      io.err << "error: unknown command " << command << " (try :quit, :k RAT, :seed N)\n";
      continue;
    }
    try {
      run_line(line, env, io);
    } catch (const Error& e) {
      io.err << "error: " << locate(e, line_no) << "\n";
    }
  }
  return kOk;
}

int run_parse(bool roundtrip, Streams io) {
  int code = kOk;
  std::size_t line_no = 0;
  for (std::string line; std::getline(io.in, line);) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    try {
      const std::string canonical = serialize(parse(line));
      io.out << canonical << "\n";
      if (roundtrip && canonical != line) {
        io.err << "line " << line_no << ": not in canonical form\n";
        if (code == kOk) code = kFailure;
      }
    } catch (const Error& e) {
      io.err << "line " << line_no << ": " << e.what();
      if (e.has_pos()) io.err << " at column " << e.pos().column;
      io.err << "\n";
      code = kInputError;
    }
  }
  return code;
}

int run_check(const CheckOptions& opts, Streams io) {
  const auto results = run_properties(opts);
  std::size_t ok = 0;
  for (const auto& r : results) {
    io.out << r.name << ": " << r.passed << "/" << r.trials << (r.ok() ? " passed" : " FAILED") << "\n";
    if (r.ok()) {
      ++ok;
    } else {
      io.out << "  counterexample (--seed " << opts.seed << " --k " << opts.k << "): " << *r.counterexample
             << "\n";
    }
  }
  io.out << ok << "/" << results.size() << " properties passed (" << opts.trials << " trials each)\n";
  return ok == results.size() ? kOk : kFailure;
}

int run(const std::vector<std::string>& args, Streams io) {
  CLI::App app{"Exact arithmetic in the free antiassociative algebra", "aaa"};
  app.require_subcommand(1);

  std::string k_text = "-1";
  std::string seed_text = "0";
  if (const char* env_seed = std::getenv("AAA_SEED")) seed_text = env_seed;

  auto* eval = app.add_subcommand("eval", "Evaluate statements given as arguments or on stdin");
  std::vector<std::string> sources;
  eval->add_option("--k", k_text, "Associativity constant k in a(bc) = k(ab)c");
  eval->add_option("--seed", seed_text, "Seed for raaa() (default: $AAA_SEED or 0)");
  eval->add_option("expr", sources, "Statements; each argument is one line");

  auto* repl = app.add_subcommand("repl", "Interactive session");
  repl->add_option("--k", k_text, "Associativity constant k");
  repl->add_option("--seed", seed_text, "Seed for raaa()");

  auto* parse_cmd = app.add_subcommand("parse", "Canonicalize elements read from stdin, one per line");
  bool roundtrip = false;
  parse_cmd->add_flag("--roundtrip", roundtrip, "Fail unless every line is already canonical");

  auto* check = app.add_subcommand("check", "Run the algebraic property suite");
  std::size_t trials = 1000;
  check->add_option("--trials", trials, "Trials per property");
  check->add_option("--k", k_text, "Associativity constant k");
  check->add_option("--seed", seed_text, "Base seed");

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    return app.exit(e, io.out, io.err) == 0 ? kOk : kUsage;
  }

  AlgebraContext ctx;
  std::uint64_t seed = 0;
  try {
    ctx.k = Coefficient::parse(k_text);
  } catch (const Error& e) {
    io.err << "aaa: --k: " << e.what() << "\n";
    return kUsage;
  }
  try {
    seed = parse_seed(seed_text);
  } catch (const std::exception&) {
    io.err << "aaa: --seed: expected an unsigned 64-bit integer, got '" << seed_text << "'\n";
    return kUsage;
  }

  if (eval->parsed()) return run_eval(sources, ctx, seed, io);
  if (repl->parsed()) return run_repl(ctx, seed, io);
  if (parse_cmd->parsed()) return run_parse(roundtrip, io);
  return run_check(CheckOptions{trials, seed, ctx.k}, io);
}

}  // namespace aaa::cli
