#pragma once

#include <cstddef>
#include <vector>

#include "aaa/coefficient.hpp"
#include "aaa/element.hpp"
#include "aaa/symbol.hpp"

namespace aaa {

/// Keyed selection, one parallel group per degree. Groups may be empty.
struct KeySelector {
  std::vector<Symbol> s1;
  std::vector<Symbol> d1, d2;
  std::vector<Symbol> t1, t2, t3;

  /// Throws Error(LengthMismatch) if a group is ragged.
  std::vector<TermKey> keys() const;
};

/// Rowwise index: every row is a term key of the same width.
class KeyMatrix {
 public:
  KeyMatrix() = default;
  /// Throws Error(RaggedMatrix) on unequal row widths and
  /// Error(DegreeMismatch) on a width outside 1..3.
  explicit KeyMatrix(std::vector<std::vector<Symbol>> rows);

  std::size_t width() const noexcept { return width_; }
  std::size_t rows() const noexcept { return keys_.size(); }
  const std::vector<TermKey>& keys() const noexcept { return keys_; }

 private:
  std::size_t width_ = 0;
  std::vector<TermKey> keys_;
};

/// Terms of one degree as parallel columns in canonical order.
struct TermView {
  std::vector<TermKey> keys;
  std::vector<Coefficient> coeffs;
};

Element single_part(const Element& a);
Element double_part(const Element& a);
Element triple_part(const Element& a);

/// Replace one degree's terms by those of `r`. `r` must be zero or hold only
/// terms of that degree, else Error(DegreeMismatch).
Element set_single(const Element& a, const Element& r);
Element set_double(const Element& a, const Element& r);
Element set_triple(const Element& a, const Element& r);

Element extract(const Element& a, const KeySelector& sel);
/// Sets every selected key to `value`; zero deletes. Repeated keys are set once.
Element replace(const Element& a, const KeySelector& sel, const Coefficient& value);

Element extract_matrix(const Element& a, const KeyMatrix& m);
Element replace_matrix(const Element& a, const KeyMatrix& m, const Coefficient& value);

/// `degree` must be 1, 2 or 3.
TermView view(const Element& a, std::size_t degree);

std::vector<Symbol> s1(const Element& a);
std::vector<Coefficient> sc(const Element& a);
std::vector<Symbol> d1(const Element& a);
std::vector<Symbol> d2(const Element& a);
std::vector<Coefficient> dc(const Element& a);
std::vector<Symbol> t1(const Element& a);
std::vector<Symbol> t2(const Element& a);
std::vector<Symbol> t3(const Element& a);
std::vector<Coefficient> tc(const Element& a);

}  // namespace aaa
