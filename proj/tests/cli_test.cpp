#include <gtest/gtest.h>

#include <sstream>

#include "aaa/random.hpp"
#include "cli.hpp"

namespace aaa::cli {
namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result invoke(std::vector<std::string> args, const std::string& stdin_text = "", bool tty = false) {
  args.insert(args.begin(), "aaa");
  std::istringstream in(stdin_text);
  std::ostringstream out, err;
  const int code = run(args, Streams{in, out, err, tty});
  return {code, out.str(), err.str()};
}

TEST(CliEval, Examples) {
  EXPECT_EQ(invoke({"eval", "sym a b c; a*(b*c)"}).out, "-1(a.b)c\n");
  EXPECT_EQ(invoke({"eval", "sym a b c d; a*b*c*d"}).out, "0\n");
  const Result r = invoke({"eval", "--k", "1", "sym a b c; a*(b*c) = (a*b)*c"});
  EXPECT_EQ(r.out, "true\n");
  EXPECT_EQ(r.code, 0);
}

TEST(CliEval, FalseEqualityExitsOne) {
  const Result r = invoke({"eval", "sym a b c; a*(b*c) = (a*b)*c; a*b"});
  EXPECT_EQ(r.out, "false\n+1a.b\n");
  EXPECT_EQ(r.code, 1);
}

TEST(CliEval, TerminalHeader) {
  EXPECT_EQ(invoke({"eval", "sym p q r; p+q+r"}, "", true).out,
            "free antiassociative algebra element:\n+1p +1q +1r\n");
}

TEST(CliEval, MultipleArgumentsAndStdin) {
  EXPECT_EQ(invoke({"eval", "sym a b", "a*b", "b*a"}).out, "+1a.b\n+1b.a\n");
  EXPECT_EQ(invoke({"eval"}, "sym a b\nlet v = a + b\nv*v\n").out, "+1a.a +1a.b +1b.a +1b.b\n");
}

TEST(CliEval, ErrorsReportLineAndColumn) {
  Result r = invoke({"eval", "sym a", "a + bb"});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("2:5: UnboundVariable"), std::string::npos) << r.err;
  r = invoke({"eval", "sym a; a $"});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("1:10: LexError"), std::string::npos) << r.err;
  r = invoke({"eval", "sym a; 2+a"});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("ScalarLiteralAsElement"), std::string::npos) << r.err;
}

TEST(CliEval, UsageErrors) {
  EXPECT_EQ(invoke({"eval", "--bogus"}).code, 64);
  EXPECT_EQ(invoke({"frobnicate"}).code, 64);
  EXPECT_EQ(invoke({}).code, 64);
  EXPECT_EQ(invoke({"eval", "--k", "x", "sym a"}).code, 64);
  EXPECT_EQ(invoke({"eval", "--seed", "-4", "sym a"}).code, 64);
  EXPECT_EQ(invoke({"--help"}).code, 0);
}

TEST(CliEval, RationalK) {
  EXPECT_EQ(invoke({"eval", "--k=-3/2", "sym a b c; a*(b*c)"}).out, "-3/2(a.b)c\n");
}

TEST(CliEval, SeedControlsRaaa) {
  const Result a = invoke({"eval", "--seed", "9", "raaa()"});
  const Result b = invoke({"eval", "--seed", "9", "raaa()"});
  const Result c = invoke({"eval", "--seed", "10", "raaa()"});
  EXPECT_EQ(a.out, b.out);
  EXPECT_NE(a.out, c.out);
}

TEST(CliRepl, Session) {
  const Result r = invoke({"repl"}, "sym p q r\np+q+r\nlet a = raaa()\nsingle(a) = a\n:quit\np\n");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "+1p +1q +1r\nfalse\n");
}

TEST(CliRepl, SingleOfRandomIsDegreeOne) {
  const Result r = invoke({"repl"}, "let a = raaa()\nsingle(a)\n");
  ASSERT_FALSE(r.out.empty());
  EXPECT_EQ(r.out.find('.'), std::string::npos) << r.out;
}

TEST(CliRepl, ContextResetDropsBindings) {
  const Result r = invoke({"repl"}, "sym a b c\n:k 1\na*(b*c)\nsym a b c\na*(b*c) = (a*b)*c\n");
  EXPECT_NE(r.err.find("UnboundVariable"), std::string::npos) << r.err;
  EXPECT_NE(r.out.find("k = 1; bindings cleared\n"), std::string::npos);
  EXPECT_NE(r.out.find("true\n"), std::string::npos);
}

TEST(CliRepl, RecoverableErrors) {
  const Result r = invoke({"repl"}, "a*(\n:k zz\n:nope\n:seed 3\nsym a\na\n");
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.err.find("ParseError"), std::string::npos);
  EXPECT_NE(r.err.find(":k zz"), std::string::npos);
  EXPECT_NE(r.err.find("unknown command"), std::string::npos);
  EXPECT_NE(r.out.find("seed = 3\n+1a\n"), std::string::npos) << r.out;
}

TEST(CliRepl, PromptOnTerminal) {
  EXPECT_EQ(invoke({"repl"}, "", true).out, "aaa> ");
}

TEST(CliParse, Canonicalizes) {
  const Result r = invoke({"parse"}, "+1q +6r +6x\n-1a.b  +1a.b\n");
  EXPECT_EQ(r.out, "+1q +6r +6x\n0\n");
  EXPECT_EQ(r.code, 0);
}

TEST(CliParse, SyntaxError) {
  const Result r = invoke({"parse"}, "+1(a.b\n");
  EXPECT_EQ(r.code, 2);
  EXPECT_EQ(r.err.rfind("line 1: unclosed '('", 0), 0u) << r.err;
}

TEST(CliParse, Roundtrip) {
  EXPECT_EQ(invoke({"parse", "--roundtrip"}, "+1q +6r +6x\n0\n").code, 0);
  const Result r = invoke({"parse", "--roundtrip"}, "+1q +6r +6x\n+1b +1a\n");
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.err.find("line 2: not in canonical form"), std::string::npos);
}

TEST(CliCheck, DefaultRun) {
  const Result r = invoke({"check"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("7/7 properties passed (1000 trials each)\n"), std::string::npos) << r.out;
}

TEST(CliCheck, OtherK) {
  for (const char* k : {"5", "1", "0", "2", "-3/2"}) {
    const Result r = invoke({"check", "--trials", "100", "--k=" + std::string(k)});
    EXPECT_EQ(r.code, 0) << k << "\n" << r.out;
  }
}

TEST(CliCheck, Vacuous) {
  const Result r = invoke({"check", "--trials", "0"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("7/7 properties passed (0 trials each)"), std::string::npos);
}

TEST(CliCheck, CounterexampleIsReported) {
  const std::vector<Property> props{
      {"always", [](std::uint64_t, const Coefficient&) -> std::optional<std::string> { return std::nullopt; }},
      {"third-trial-fails", [](std::uint64_t seed, const Coefficient&) -> std::optional<std::string> {
         static int calls = 0;
         if (++calls == 3) return "seed " + std::to_string(seed);
         return std::nullopt;
       }}};
  const auto results = run_properties(props, CheckOptions{10, 4, Coefficient(-1)});
  ASSERT_EQ(results.size(), 2u);
  EXPECT_TRUE(results[0].ok());
  EXPECT_EQ(results[0].passed, 10u);
  EXPECT_FALSE(results[1].ok());
  EXPECT_EQ(results[1].passed, 2u);
  EXPECT_EQ(*results[1].counterexample, "trial 2, seed " + std::to_string(derive_seed(4, 1, 2)));
}

}  // namespace
}  // namespace aaa::cli
