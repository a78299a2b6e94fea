#include <limits>
#include <set>
#include <string>
#include <utility>

#include "aaa/access.hpp"
#include "aaa/exprlang.hpp"
#include "aaa/random.hpp"

namespace aaa::expr {

namespace {

using Rows = std::vector<std::vector<std::string>>;

// Intermediate value: bare numbers exist only as scalar factors.
using Value = std::variant<Coefficient, Element>;

constexpr std::uint64_t kRaaaStream = 0x72616161;  // "raaa"

[[noreturn]] void fail(ErrorKind kind, const std::string& message, SourcePos pos) {
  throw Error(kind, message, pos);
}

Element as_element(const Value& v, SourcePos pos) {
  if (const auto* e = std::get_if<Element>(&v)) return *e;
  // Zero is the one scalar the algebra has.
  if (std::get<Coefficient>(v).is_zero()) return zero();
  fail(ErrorKind::ScalarLiteralAsElement,
       "number " + std::get<Coefficient>(v).to_string() +
           " used as an element; numbers may only scale an element from the left",
       pos);
}

class Evaluator {
 public:
  explicit Evaluator(Env& env) : env_(env) {}

  Value operator()(const Expr& e) { return std::visit([&](const auto& n) { return eval(n, e.pos); }, e.node); }

 private:
  Value eval(const NumberLit& n, SourcePos) { return n.value; }

  Value eval(const Var& v, SourcePos pos) {
    if (const Element* e = env_.lookup(v.name)) return *e;
    fail(ErrorKind::UnboundVariable, "unbound variable '" + v.name + "'", pos);
  }

  Value eval(const Neg& n, SourcePos) {
    Value v = (*this)(*n.operand);
    if (auto* c = std::get_if<Coefficient>(&v)) return -*c;
    return neg(std::get<Element>(v));
  }

  Value eval(const Add& n, SourcePos) { return add(element(*n.lhs), element(*n.rhs)); }
  Value eval(const Sub& n, SourcePos) { return sub(element(*n.lhs), element(*n.rhs)); }

  Value eval(const Mul& n, SourcePos) {
    Value lhs = (*this)(*n.lhs);
    Value rhs = (*this)(*n.rhs);
    if (const auto* c = std::get_if<Coefficient>(&lhs)) {
      if (const auto* d = std::get_if<Coefficient>(&rhs)) return *c * *d;
      return scalar_mul(*c, std::get<Element>(rhs));
    }
    return mul(env_.context(), std::get<Element>(lhs), as_element(rhs, n.rhs->pos));
  }

  Value eval(const Call& c, SourcePos pos) {
    try {
      return call(c, pos);
    } catch (const Error& e) {
      if (e.has_pos()) throw;
      throw Error(e.kind(), c.name + ": " + e.what(), pos);
    }
  }

  Element element(const Expr& e) { return as_element((*this)(e), e.pos); }

  Element call(const Call& c, SourcePos pos) {
    const std::string& f = c.name;
    if (f == "single" || f == "double" || f == "triple") {
      arity(c, 1, {}, pos);
      const Element a = element(*c.args[0]);
      if (f == "single") return single_part(a);
      if (f == "double") return double_part(a);
      return triple_part(a);
    }
    if (f == "set_single" || f == "set_double" || f == "set_triple") {
      arity(c, 2, {}, pos);
      const Element a = element(*c.args[0]);
      const Element r = element(*c.args[1]);
      if (f == "set_single") return set_single(a, r);
      if (f == "set_double") return set_double(a, r);
      return set_triple(a, r);
    }
    if (f == "extract") {
      arity(c, 1, {"s1", "d1", "d2", "t1", "t2", "t3", "rows"}, pos);
      const Element a = element(*c.args[0]);
      if (const KwArg* rows = find(c, "rows")) return extract_matrix(a, matrix(c, *rows));
      return extract(a, selector(c));
    }
    if (f == "replace") {
      arity(c, 2, {"s1", "d1", "d2", "t1", "t2", "t3", "rows"}, pos);
      const Element a = element(*c.args[0]);
      const Coefficient value = scalar(*c.args[1]);
      if (const KwArg* rows = find(c, "rows")) return replace_matrix(a, matrix(c, *rows), value);
      return replace(a, selector(c), value);
    }
    if (f == "raaa") {
      arity(c, 0, {"seed", "n1", "n2", "n3", "lo", "hi", "alphabet"}, pos);
      return random_element(c);
    }
    fail(ErrorKind::EvalError, "unknown function '" + f + "'", pos);
  }

  void arity(const Call& c, std::size_t positional, const std::set<std::string>& allowed,
             SourcePos pos) const {
    if (c.args.size() != positional) {
      fail(ErrorKind::EvalError,
           c.name + " takes " + std::to_string(positional) + " positional argument(s), got " +
               std::to_string(c.args.size()),
           pos);
    }
    std::set<std::string> seen;
    for (const auto& kw : c.kwargs) {
      if (!allowed.contains(kw.name)) {
        fail(ErrorKind::EvalError, c.name + " has no argument '" + kw.name + "'", kw.pos);
      }
      if (!seen.insert(kw.name).second) {
        fail(ErrorKind::EvalError, "argument '" + kw.name + "' given twice", kw.pos);
      }
    }
  }

  static const KwArg* find(const Call& c, std::string_view name) {
    for (const auto& kw : c.kwargs) {
      if (kw.name == name) return &kw;
    }
    return nullptr;
  }

  Coefficient scalar(const Expr& e) {
    Value v = (*this)(e);
    if (auto* c = std::get_if<Coefficient>(&v)) return *c;
    fail(ErrorKind::EvalError, "expected a number", e.pos);
  }

  static const Rows& rows_of(const KwArg& kw) {
    const auto* rows = std::get_if<Rows>(&kw.value);
    if (!rows) fail(ErrorKind::EvalError, "argument '" + kw.name + "' expects symbols", kw.pos);
    return *rows;
  }

  static std::vector<Symbol> symbol_column(const Call& c, std::string_view name) {
    const KwArg* kw = find(c, name);
    if (!kw) return {};
    std::vector<Symbol> out;
    for (const auto& row : rows_of(*kw)) {
      if (row.size() != 1) {
        fail(ErrorKind::EvalError, "argument '" + kw->name + "' expects plain symbols", kw->pos);
      }
      out.emplace_back(row[0]);
    }
    return out;
  }

  static KeySelector selector(const Call& c) {
    return KeySelector{symbol_column(c, "s1"), symbol_column(c, "d1"), symbol_column(c, "d2"),
                       symbol_column(c, "t1"), symbol_column(c, "t2"), symbol_column(c, "t3")};
  }

  static KeyMatrix matrix(const Call& c, const KwArg& rows) {
    for (const char* other : {"s1", "d1", "d2", "t1", "t2", "t3"}) {
      if (find(c, other)) fail(ErrorKind::EvalError, "'rows' cannot be combined with '" + std::string(other) + "'", rows.pos);
    }
    std::vector<std::vector<Symbol>> m;
    for (const auto& row : rows_of(rows)) m.push_back(symbols(row));
    return KeyMatrix(std::move(m));
  }

  static std::int64_t integer(const KwArg& kw, std::int64_t lo, std::int64_t hi) {
    const auto* c = std::get_if<Coefficient>(&kw.value);
    if (!c || !c->is_integer() || *c < Coefficient(lo) || *c > Coefficient(hi)) {
      fail(ErrorKind::EvalError,
           "argument '" + kw.name + "' expects an integer in [" + std::to_string(lo) + ", " +
               std::to_string(hi) + "]",
           kw.pos);
    }
    return std::stoll(c->numerator());
  }

  Element random_element(const Call& c) {
    RaaaOptions opts;
    std::uint64_t seed = 0;
    bool seeded = false;
    constexpr std::int64_t kMaxCount = 100000;
    for (const auto& kw : c.kwargs) {
      if (kw.name == "seed") {
        const auto* v = std::get_if<Coefficient>(&kw.value);
        if (!v || !v->is_integer() || v->sign() < 0 ||
            *v > Coefficient::parse(std::to_string(std::numeric_limits<std::uint64_t>::max()))) {
          fail(ErrorKind::EvalError, "seed must be an unsigned 64-bit integer", kw.pos);
        }
        seed = std::stoull(v->numerator());
        seeded = true;
      } else if (kw.name == "n1") {
        opts.n1 = static_cast<int>(integer(kw, 0, kMaxCount));
      } else if (kw.name == "n2") {
        opts.n2 = static_cast<int>(integer(kw, 0, kMaxCount));
      } else if (kw.name == "n3") {
        opts.n3 = static_cast<int>(integer(kw, 0, kMaxCount));
      } else if (kw.name == "lo") {
        opts.coeff_lo = integer(kw, -1'000'000'000, 1'000'000'000);
      } else if (kw.name == "hi") {
        opts.coeff_hi = integer(kw, -1'000'000'000, 1'000'000'000);
      } else if (kw.name == "alphabet") {
        opts.alphabet.clear();
        for (const auto& row : rows_of(kw)) {
          if (row.size() != 1) fail(ErrorKind::EvalError, "alphabet expects plain symbols", kw.pos);
          opts.alphabet.emplace_back(row[0]);
        }
      }
    }
    return raaa(seeded ? seed : env_.next_random_seed(), opts);
  }

  Env& env_;
};

}  // namespace

void Env::declare_symbol(const std::string& name) { bindings_[name] = from_symbols({Symbol(name)}); }

void Env::bind(const std::string& name, Element value) { bindings_[name] = std::move(value); }

const Element* Env::lookup(const std::string& name) const {
  const auto it = bindings_.find(name);
  return it == bindings_.end() ? nullptr : &it->second;
}

void Env::reset(AlgebraContext ctx) {
  ctx_ = std::move(ctx);
  bindings_.clear();
}

void Env::reseed(std::uint64_t seed) {
  seed_ = seed;
  random_calls_ = 0;
}

std::uint64_t Env::next_random_seed() { return derive_seed(seed_, kRaaaStream, random_calls_++); }

Element eval(const Expr& e, Env& env) {
  Evaluator ev(env);
  return as_element(ev(e), e.pos);
}

StatementResult execute(const Statement& stmt, Env& env) {
  struct Visitor {
    Env& env;
    StatementResult operator()(const SymDecl& d) const {
      for (const auto& name : d.names) {
        try {
          env.declare_symbol(name);
        } catch (const Error& e) {
          throw Error(e.kind(), e.what(), d.pos);
        }
      }
      return std::monostate{};
    }
    StatementResult operator()(const LetStmt& s) const {
      env.bind(s.name, eval(*s.value, env));
      return std::monostate{};
    }
    StatementResult operator()(const ExprStmt& s) const { return eval(*s.value, env); }
    StatementResult operator()(const EqualityStmt& s) const {
      Element lhs = eval(*s.lhs, env);
      return lhs == eval(*s.rhs, env);
    }
  };
  return std::visit(Visitor{env}, stmt);
}

}  // namespace aaa::expr
