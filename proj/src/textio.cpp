#include "aaa/textio.hpp"

#include <string>

#include "aaa/error.hpp"

namespace aaa {

namespace {

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\n'; }
bool is_digit(char c) { return c >= '0' && c <= '9'; }
bool is_sym_start(char c) { return (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') || c == '_'; }
bool is_sym_char(char c) { return is_sym_start(c) || is_digit(c); }

class Scanner {
 public:
  explicit Scanner(std::string_view text) : text_(text) {}

  bool done() const { return pos_ >= text_.size(); }
  char peek() const { return done() ? '\0' : text_[pos_]; }
  std::size_t column() const { return pos_ + 1; }

  void skip_space() {
    while (!done() && is_space(text_[pos_])) ++pos_;
  }

  [[noreturn]] void fail(const std::string& message, std::size_t column) const {
    throw Error(ErrorKind::SyntaxError, message, SourcePos{0, column});
  }
  [[noreturn]] void fail(const std::string& message) const { fail(message, column()); }

  std::string_view take_while(bool (*pred)(char)) {
    const std::size_t start = pos_;
    while (!done() && pred(text_[pos_])) ++pos_;
    return text_.substr(start, pos_ - start);
  }

  void expect(char c, const std::string& message) {
    if (peek() != c) fail(message);
    ++pos_;
  }

  Symbol symbol() {
    if (!is_sym_start(peek())) fail("expected symbol");
    return Symbol(std::string(take_while(is_sym_char)));
  }

  Coefficient magnitude() {
    const std::size_t start = column();
    const std::string_view num = take_while(is_digit);
    if (num.empty()) fail("expected coefficient digits");
    std::string text(num);
    if (peek() == '/') {
      ++pos_;
      const std::string_view den = take_while(is_digit);
      if (den.empty()) fail("expected denominator digits");
      text += '/';
      text += den;
    }
    try {
      return Coefficient::parse(text);
    } catch (const Error& e) {
      fail(e.what(), start);
    }
  }

  TermKey key() {
    if (peek() == '(') {
      const std::size_t open = column();
      ++pos_;
      Symbol i = symbol();
      expect('.', "expected '.' inside bracketed pair");
      Symbol j = symbol();
      if (peek() != ')') fail("unclosed '('", open);
      ++pos_;
      Symbol k = symbol();
      return TermKey(Key<3>{std::move(i), std::move(j), std::move(k)});
    }
    Symbol i = symbol();
    if (peek() == '.') {
      ++pos_;
      Symbol j = symbol();
      return TermKey(Key<2>{std::move(i), std::move(j)});
    }
    return TermKey(Key<1>{std::move(i)});
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

std::string serialize_key(const TermKey& key) {
  const auto& s = key.symbols();
  switch (key.degree()) {
    case 1: return s[0].name();
    case 2: return s[0].name() + "." + s[1].name();
    default: return "(" + s[0].name() + "." + s[1].name() + ")" + s[2].name();
  }
}

std::string serialize_term(const TermKey& key, const Coefficient& c) {
  return (c.sign() < 0 ? "-" : "+") + c.abs().to_string() + serialize_key(key);
}

std::string serialize(const Element& a) {
  if (a.is_zero()) return "0";
  std::string out;
  for (const auto& [key, c] : a.term_list()) {
    if (!out.empty()) out += ' ';
    out += serialize_term(key, c);
  }
  return out;
}

Element parse(std::string_view text) {
  Scanner in(text);
  in.skip_space();
  if (in.done()) in.fail("empty input");
  if (in.peek() == '0') {
    const std::size_t col = in.column();
    if (in.take_while(is_digit) != "0") in.fail("expected '+' or '-' before term", col);
    in.skip_space();
    if (!in.done()) in.fail("'0' must stand alone", col);
    return Element{};
  }

  ElementBuilder out;
  while (!in.done()) {
    const char sign = in.peek();
    if (sign != '+' && sign != '-') in.fail("expected '+' or '-' before term");
    in.expect(sign, "");
    Coefficient c = in.magnitude();
    TermKey key = in.key();
    if (!in.done() && !is_space(in.peek()) && in.peek() != '+' && in.peek() != '-') {
      in.fail(std::string("unexpected character '") + in.peek() + "'");
    }
    out.add(key, sign == '-' ? -c : c);
    in.skip_space();
  }
  return std::move(out).build();
}

}  // namespace aaa
