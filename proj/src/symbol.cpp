#include "aaa/symbol.hpp"

#include <utility>

#include "aaa/error.hpp"

namespace aaa {

namespace {

bool is_alpha(char c) { return (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') || c == '_'; }
bool is_digit(char c) { return c >= '0' && c <= '9'; }

}  // namespace

Symbol::Symbol(std::string name) : name_(std::move(name)) {
  if (!is_valid(name_)) {
    throw Error(ErrorKind::InvalidSymbol, "invalid symbol name '" + name_ + "'");
  }
}

bool Symbol::is_valid(std::string_view name) {
  if (name.empty() || !is_alpha(name.front())) return false;
  for (char c : name) {
    if (!is_alpha(c) && !is_digit(c)) return false;
  }
  return true;
}

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidSymbol: return "InvalidSymbol";
    case ErrorKind::InvalidCoefficient: return "InvalidCoefficient";
    case ErrorKind::LengthMismatch: return "LengthMismatch";
    case ErrorKind::DegreeMismatch: return "DegreeMismatch";
    case ErrorKind::RaggedMatrix: return "RaggedMatrix";
    case ErrorKind::EmptyAlphabet: return "EmptyAlphabet";
    case ErrorKind::SyntaxError: return "SyntaxError";
    case ErrorKind::LexError: return "LexError";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::UnboundVariable: return "UnboundVariable";
    case ErrorKind::ScalarLiteralAsElement: return "ScalarLiteralAsElement";
    case ErrorKind::EvalError: return "EvalError";
  }
  return "Unknown";
}

}  // namespace aaa
