#include <string>
#include <utility>

#include "aaa/exprlang.hpp"

namespace aaa::expr {

namespace {

class Parser {
 public:
  explicit Parser(std::span<const Token> tokens) : tokens_(tokens) {}

  const Token& peek(std::size_t ahead = 0) const {
    static const Token end{TokenKind::End, "", {}};
    const std::size_t at = pos_ + ahead;
    if (at < tokens_.size()) return tokens_[at];
    return tokens_.empty() ? end : tokens_.back();
  }
  bool at(TokenKind kind) const { return peek().kind == kind; }
  bool at_statement_end() const { return at(TokenKind::Separator) || at(TokenKind::End); }

  const Token& advance() {
    const Token& t = peek();
    if (pos_ < tokens_.size()) ++pos_;
    return t;
  }

  bool accept(TokenKind kind) {
    if (!at(kind)) return false;
    advance();
    return true;
  }

  [[noreturn]] void fail(const std::string& expected) const {
    const Token& t = peek();
    std::string found = t.kind == TokenKind::End || t.kind == TokenKind::Separator
                            ? std::string(to_string(t.kind))
                            : "'" + t.text + "'";
    throw Error(ErrorKind::ParseError, "expected " + expected + ", found " + found, t.pos);
  }

  const Token& expect(TokenKind kind) {
    if (!at(kind)) fail(std::string(to_string(kind)));
    return advance();
  }

  ExprPtr expr() {
    ExprPtr lhs = term();
    for (;;) {
      const SourcePos pos = peek().pos;
      if (accept(TokenKind::Plus)) {
        lhs = make(Add{lhs, term()}, pos);
      } else if (accept(TokenKind::Minus)) {
        lhs = make(Sub{lhs, term()}, pos);
      } else {
        return lhs;
      }
    }
  }

  ExprPtr term() {
    ExprPtr lhs = unary();
    for (;;) {
      const SourcePos pos = peek().pos;
      if (!accept(TokenKind::Star)) return lhs;
      lhs = make(Mul{lhs, unary()}, pos);
    }
  }

  ExprPtr unary() {
    const SourcePos pos = peek().pos;
    if (accept(TokenKind::Minus)) return make(Neg{unary()}, pos);
    return atom();
  }

  ExprPtr atom() {
    const Token& t = peek();
    switch (t.kind) {
      case TokenKind::Number:
        advance();
        return make(NumberLit{t.number}, t.pos);
      case TokenKind::LParen: {
        advance();
        ExprPtr inner = expr();
        expect(TokenKind::RParen);
        return inner;
      }
      case TokenKind::Ident:
        advance();
        if (at(TokenKind::LParen)) return call(t);
        return make(Var{t.text}, t.pos);
      default:
        fail("expression");
    }
  }

  ExprPtr call(const Token& name) {
    expect(TokenKind::LParen);
    Call c{name.text, {}, {}};
    if (!accept(TokenKind::RParen)) {
      do {
        if (at(TokenKind::Ident) && peek(1).kind == TokenKind::Equals) {
          c.kwargs.push_back(kwarg());
        } else {
          c.args.push_back(expr());
        }
      } while (accept(TokenKind::Comma));
      expect(TokenKind::RParen);
    }
    return make(std::move(c), name.pos);
  }

  KwArg kwarg() {
    const Token& name = advance();
    expect(TokenKind::Equals);
    KwArg kw{name.text, {}, name.pos};
    if (at(TokenKind::Minus) || at(TokenKind::Number)) {
      const bool negative = accept(TokenKind::Minus);
      const Coefficient v = expect(TokenKind::Number).number;
      kw.value = negative ? -v : v;
      return kw;
    }
    std::vector<std::vector<std::string>> rows;
    if (accept(TokenKind::LParen)) {
      do {
        rows.push_back(row());
      } while (accept(TokenKind::Comma));
      expect(TokenKind::RParen);
    } else {
      rows.push_back(row());
    }
    kw.value = std::move(rows);
    return kw;
  }

  std::vector<std::string> row() {
    std::vector<std::string> names{expect(TokenKind::Ident).text};
    while (accept(TokenKind::Dot)) names.push_back(expect(TokenKind::Ident).text);
    return names;
  }

  std::optional<Statement> statement() {
    if (at_statement_end()) return std::nullopt;
    const SourcePos pos = peek().pos;
    if (accept(TokenKind::KwSym)) {
      SymDecl decl{{}, pos};
      do {
        decl.names.push_back(expect(TokenKind::Ident).text);
        accept(TokenKind::Comma);
      } while (at(TokenKind::Ident));
      return decl;
    }
    if (accept(TokenKind::KwLet)) {
      std::string name = expect(TokenKind::Ident).text;
      expect(TokenKind::Equals);
      return LetStmt{std::move(name), expr(), pos};
    }
    ExprPtr lhs = expr();
    if (accept(TokenKind::Equals)) {
      accept(TokenKind::Equals);  // tolerate '=='
      return EqualityStmt{lhs, expr()};
    }
    return ExprStmt{lhs};
  }

  std::vector<Statement> program() {
    std::vector<Statement> out;
    for (;;) {
      if (auto s = statement()) out.push_back(std::move(*s));
      if (at(TokenKind::End)) return out;
      if (!accept(TokenKind::Separator)) fail("';' or end of line");
    }
  }

 private:
  template <typename Node>
  static ExprPtr make(Node node, SourcePos pos) {
    return std::make_shared<const Expr>(Expr{std::move(node), pos});
  }

  std::span<const Token> tokens_;
  std::size_t pos_ = 0;
};

struct Printer {
  std::string operator()(const NumberLit& n) const { return n.value.to_string(); }
  std::string operator()(const Var& v) const { return v.name; }
  std::string operator()(const Neg& n) const { return "Neg(" + to_string(*n.operand) + ")"; }
  std::string operator()(const Add& n) const { return binary("Add", n.lhs, n.rhs); }
  std::string operator()(const Sub& n) const { return binary("Sub", n.lhs, n.rhs); }
  std::string operator()(const Mul& n) const { return binary("Mul", n.lhs, n.rhs); }
  std::string operator()(const Call& c) const {
    std::string out = c.name + "(";
    bool first = true;
    const auto sep = [&] {
      if (!first) out += ",";
      first = false;
    };
    for (const auto& a : c.args) {
      sep();
      out += to_string(*a);
    }
    for (const auto& kw : c.kwargs) {
      sep();
      out += kw.name + "=";
      if (const auto* num = std::get_if<Coefficient>(&kw.value)) {
        out += num->to_string();
        continue;
      }
      const auto& rows = std::get<std::vector<std::vector<std::string>>>(kw.value);
      out += "(";
      for (std::size_t r = 0; r < rows.size(); ++r) {
        if (r) out += ",";
        for (std::size_t i = 0; i < rows[r].size(); ++i) out += (i ? "." : "") + rows[r][i];
      }
      out += ")";
    }
    return out + ")";
  }

  static std::string binary(const char* name, const ExprPtr& l, const ExprPtr& r) {
    return std::string(name) + "(" + to_string(*l) + "," + to_string(*r) + ")";
  }
};

}  // namespace

std::string to_string(const Expr& e) { return std::visit(Printer{}, e.node); }

ExprPtr parse_expr(std::span<const Token> tokens) {
  Parser p(tokens);
  ExprPtr e = p.expr();
  if (!p.at(TokenKind::End)) p.fail("end of input");
  return e;
}

ExprPtr parse_expr(std::string_view src) {
  const auto tokens = tokenize(src);
  return parse_expr(tokens);
}

std::vector<Statement> parse_program(std::span<const Token> tokens) { return Parser(tokens).program(); }

std::vector<Statement> parse_program(std::string_view src) {
  const auto tokens = tokenize(src);
  return parse_program(tokens);
}

}  // namespace aaa::expr
