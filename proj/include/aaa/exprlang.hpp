#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "aaa/algebra.hpp"
#include "aaa/coefficient.hpp"
#include "aaa/element.hpp"
#include "aaa/error.hpp"

// Statement language over algebra elements:
//
//   program   := stmt ((';' | newline) stmt)*
//   stmt      := 'sym' ident+ | 'let' ident '=' expr | expr ['=' expr]
//   expr      := term (('+' | '-') term)*
//   term      := unary ('*' unary)*          (left-associative)
//   unary     := '-' unary | atom
//   atom      := number | ident | '(' expr ')' | ident '(' args ')'
//   args      := [arg (',' arg)*]
//   arg       := expr | ident '=' kwvalue
//   kwvalue   := ['-'] number | row | '(' row (',' row)* ')'
//   row       := ident ('.' ident)*
//
// Numbers are `digits` or `digits/digits`. `#` starts a comment.
namespace aaa::expr {

enum class TokenKind {
  Ident,
  Number,
  Plus,
  Minus,
  Star,
  LParen,
  RParen,
  Equals,
  Comma,
  Dot,
  Separator,  // ';' or newline
  KwSym,
  KwLet,
  End,
};

std::string_view to_string(TokenKind kind);

struct Token {
  TokenKind kind;
  std::string text;
  SourcePos pos;
  Coefficient number{};  // Number tokens only
};

/// Throws Error(LexError) at the first illegal character.
std::vector<Token> tokenize(std::string_view src);

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

struct NumberLit {
  Coefficient value;
};
struct Var {
  std::string name;
};
struct Neg {
  ExprPtr operand;
};
struct Add {
  ExprPtr lhs, rhs;
};
struct Sub {
  ExprPtr lhs, rhs;
};
struct Mul {
  ExprPtr lhs, rhs;
};

/// Keyword argument: a number (`seed=3`) or symbol rows (`d1=(c,w)`,
/// `rows=(a.a, b.b)`).
struct KwArg {
  std::string name;
  std::variant<Coefficient, std::vector<std::vector<std::string>>> value;
  SourcePos pos;
};

struct Call {
  std::string name;
  std::vector<ExprPtr> args;
  std::vector<KwArg> kwargs;
};

struct Expr {
  std::variant<NumberLit, Var, Neg, Add, Sub, Mul, Call> node;
  SourcePos pos;
};

/// Structural rendering, e.g. "Mul(Mul(a,b),c)".
std::string to_string(const Expr& e);

struct SymDecl {
  std::vector<std::string> names;
  SourcePos pos;
};
struct LetStmt {
  std::string name;
  ExprPtr value;
  SourcePos pos;
};
struct ExprStmt {
  ExprPtr value;
};
struct EqualityStmt {
  ExprPtr lhs, rhs;
};
using Statement = std::variant<SymDecl, LetStmt, ExprStmt, EqualityStmt>;

/// Parses exactly one expression (trailing tokens other than End are an error).
/// Throws Error(ParseError).
ExprPtr parse_expr(std::span<const Token> tokens);
ExprPtr parse_expr(std::string_view src);

/// Empty statements are skipped.
std::vector<Statement> parse_program(std::span<const Token> tokens);
std::vector<Statement> parse_program(std::string_view src);

/// Name bindings plus the single algebra context they were built under.
class Env {
 public:
  explicit Env(AlgebraContext ctx = {}, std::uint64_t seed = 0) : ctx_(std::move(ctx)), seed_(seed) {}

  const AlgebraContext& context() const noexcept { return ctx_; }
  std::uint64_t seed() const noexcept { return seed_; }

  /// Binds `name` to the generator `name`. Throws Error(InvalidSymbol).
  void declare_symbol(const std::string& name);
  void bind(const std::string& name, Element value);
  const Element* lookup(const std::string& name) const;
  std::size_t size() const noexcept { return bindings_.size(); }

  /// Switch context; prior bindings belong to the old context and are dropped.
  void reset(AlgebraContext ctx);
  /// Restart the raaa() stream from a new seed. Bindings are kept.
  void reseed(std::uint64_t seed);

  /// Seed for the next seedless raaa() call.
  std::uint64_t next_random_seed();

 private:
  AlgebraContext ctx_;
  std::uint64_t seed_;
  std::uint64_t random_calls_ = 0;
  std::map<std::string, Element> bindings_;
};

/// Throws Error(UnboundVariable), Error(ScalarLiteralAsElement) or
/// Error(EvalError); library errors from builtins propagate with the call's
/// position attached.
Element eval(const Expr& e, Env& env);

/// Outcome of one statement: nothing (sym/let), an element, or a truth value.
using StatementResult = std::variant<std::monostate, Element, bool>;

StatementResult execute(const Statement& stmt, Env& env);

}  // namespace aaa::expr
