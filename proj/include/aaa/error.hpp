#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace aaa {

enum class ErrorKind {
  InvalidSymbol,
  InvalidCoefficient,
  LengthMismatch,
  DegreeMismatch,
  RaggedMatrix,
  EmptyAlphabet,
  SyntaxError,
  LexError,
  ParseError,
  UnboundVariable,
  ScalarLiteralAsElement,
  EvalError,
};

std::string_view to_string(ErrorKind kind);

/// 1-based source location. A zero line means "single-line input".
struct SourcePos {
  std::size_t line = 0;
  std::size_t column = 0;
};

/// The single exception type thrown by the library. `kind()` discriminates.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, std::string message, SourcePos pos = {})
      : std::runtime_error(std::move(message)), kind_(kind), pos_(pos) {}

  ErrorKind kind() const noexcept { return kind_; }
  const SourcePos& pos() const noexcept { return pos_; }
  bool has_pos() const noexcept { return pos_.column != 0; }

 private:
  ErrorKind kind_;
  SourcePos pos_;
};

}  // namespace aaa
