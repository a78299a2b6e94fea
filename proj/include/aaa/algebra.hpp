#pragma once

#include <vector>

#include "aaa/coefficient.hpp"
#include "aaa/element.hpp"
#include "aaa/symbol.hpp"

namespace aaa {

/// Multiplication policy: a(bc) = k (ab)c. k = -1 is the antiassociative
/// algebra, k = 1 recovers associativity (truncated above degree 3).
struct AlgebraContext {
  Coefficient k{-1};

  friend bool operator==(const AlgebraContext&, const AlgebraContext&) = default;
};

/// Parallel column lists, one group per degree. Any group may be empty.
struct ElementSpec {
  std::vector<Symbol> s1;
  std::vector<Coefficient> sc;
  std::vector<Symbol> d1, d2;
  std::vector<Coefficient> dc;
  std::vector<Symbol> t1, t2, t3;
  std::vector<Coefficient> tc;
};

inline Element zero() { return Element{}; }

/// Sum of the given generators with unit coefficients; repeats accumulate.
Element from_symbols(const std::vector<Symbol>& names);

/// Throws Error(LengthMismatch) if any parallel group is ragged. Duplicate
/// keys accumulate.
Element make_element(const ElementSpec& spec);

Element add(const Element& a, const Element& b);
Element neg(const Element& a);
Element sub(const Element& a, const Element& b);
Element scalar_mul(const Coefficient& c, const Element& a);

/// Bilinear product, truncated above degree 3. Only three term families
/// survive: 1x1 -> 2, 2x1 -> 3, and 1x2 -> 3 (scaled by ctx.k).
Element mul(const AlgebraContext& ctx, const Element& a, const Element& b);

inline bool equals(const Element& a, const Element& b) { return a == b; }

inline Element operator+(const Element& a, const Element& b) { return add(a, b); }
inline Element operator-(const Element& a, const Element& b) { return sub(a, b); }
inline Element operator-(const Element& a) { return neg(a); }
inline Element operator*(const Coefficient& c, const Element& a) { return scalar_mul(c, a); }

}  // namespace aaa
