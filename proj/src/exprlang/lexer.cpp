#include <string>

#include "aaa/exprlang.hpp"

namespace aaa::expr {

namespace {

bool is_ident_start(char c) { return (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') || c == '_'; }
bool is_digit(char c) { return c >= '0' && c <= '9'; }
bool is_ident_char(char c) { return is_ident_start(c) || is_digit(c); }

}  // namespace

std::string_view to_string(TokenKind kind) {
  switch (kind) {
    case TokenKind::Ident: return "identifier";
    case TokenKind::Number: return "number";
    case TokenKind::Plus: return "'+'";
    case TokenKind::Minus: return "'-'";
    case TokenKind::Star: return "'*'";
    case TokenKind::LParen: return "'('";
    case TokenKind::RParen: return "')'";
    case TokenKind::Equals: return "'='";
    case TokenKind::Comma: return "','";
    case TokenKind::Dot: return "'.'";
    case TokenKind::Separator: return "end of statement";
    case TokenKind::KwSym: return "'sym'";
    case TokenKind::KwLet: return "'let'";
    case TokenKind::End: return "end of input";
  }
  return "token";
}

std::vector<Token> tokenize(std::string_view src) {
  std::vector<Token> out;
  std::size_t line = 1;
  std::size_t line_start = 0;
  std::size_t i = 0;

  const auto pos_at = [&](std::size_t at) { return SourcePos{line, at - line_start + 1}; };
  const auto push = [&](TokenKind kind, std::size_t start, std::size_t len) {
    out.push_back(Token{kind, std::string(src.substr(start, len)), pos_at(start)});
  };

  while (i < src.size()) {
    const char c = src[i];
    if (c == '\n') {
      push(TokenKind::Separator, i, 1);
      ++i;
      ++line;
      line_start = i;
      continue;
    }
    if (c == ' ' || c == '\t' || c == '\r') {
      ++i;
      continue;
    }
    if (c == '#') {
      while (i < src.size() && src[i] != '\n') ++i;
      continue;
    }
    if (is_ident_start(c)) {
      const std::size_t start = i;
      while (i < src.size() && is_ident_char(src[i])) ++i;
      const std::string_view word = src.substr(start, i - start);
      TokenKind kind = TokenKind::Ident;
      if (word == "sym") kind = TokenKind::KwSym;
      if (word == "let") kind = TokenKind::KwLet;
      push(kind, start, i - start);
      continue;
    }
    if (is_digit(c)) {
      const std::size_t start = i;
      while (i < src.size() && is_digit(src[i])) ++i;
      if (i < src.size() && src[i] == '/') {
        ++i;
        if (i >= src.size() || !is_digit(src[i])) {
          throw Error(ErrorKind::LexError, "expected denominator digits after '/'", pos_at(i));
        }
        while (i < src.size() && is_digit(src[i])) ++i;
      }
      push(TokenKind::Number, start, i - start);
      try {
        out.back().number = Coefficient::parse(out.back().text);
      } catch (const Error& e) {
        throw Error(ErrorKind::LexError, e.what(), pos_at(start));
      }
      continue;
    }

    TokenKind kind;
    switch (c) {
      case '+': kind = TokenKind::Plus; break;
      case '-': kind = TokenKind::Minus; break;
      case '*': kind = TokenKind::Star; break;
      case '(': kind = TokenKind::LParen; break;
      case ')': kind = TokenKind::RParen; break;
      case '=': kind = TokenKind::Equals; break;
      case ',': kind = TokenKind::Comma; break;
      case '.': kind = TokenKind::Dot; break;
      case ';': kind = TokenKind::Separator; break;
      default:
        throw Error(ErrorKind::LexError, std::string("illegal character '") + c + "'", pos_at(i));
    }
    push(kind, i, 1);
    ++i;
  }
  out.push_back(Token{TokenKind::End, "", pos_at(i)});
  return out;
}

}  // namespace aaa::expr
