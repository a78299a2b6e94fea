#pragma once

#include <array>
#include <cstddef>
#include <initializer_list>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "aaa/coefficient.hpp"
#include "aaa/symbol.hpp"

namespace aaa {

/// Fixed-degree term key. A degree-3 key {i, j, k} always denotes (x_i x_j) x_k.
template <std::size_t N>
using Key = std::array<Symbol, N>;

template <std::size_t N>
using TermMap = std::map<Key<N>, Coefficient>;

/// Term key of runtime degree 1, 2 or 3.
class TermKey {
 public:
  /// Throws Error(DegreeMismatch) unless 1 <= symbols.size() <= 3.
  explicit TermKey(std::vector<Symbol> symbols);
  template <std::size_t N>
  explicit TermKey(const Key<N>& key) : symbols_(key.begin(), key.end()) {}

  std::size_t degree() const noexcept { return symbols_.size(); }
  const std::vector<Symbol>& symbols() const noexcept { return symbols_; }
  const Symbol& operator[](std::size_t i) const { return symbols_[i]; }

  template <std::size_t N>
  Key<N> as() const;

  friend bool operator==(const TermKey&, const TermKey&) = default;
  friend auto operator<=>(const TermKey& a, const TermKey& b) {
    if (a.degree() != b.degree()) return a.degree() <=> b.degree();
    return a.symbols_ <=> b.symbols_;
  }

 private:
  std::vector<Symbol> symbols_;
};

/// An element of the free antiassociative algebra: a sparse sum of degree-1,
/// degree-2 and left-bracketed degree-3 terms. Never stores a zero
/// coefficient, so structural equality is algebraic equality. There is no
/// degree-0 part.
class Element {
 public:
  /// The zero element.
  Element() = default;

  const TermMap<1>& singles() const noexcept { return singles_; }
  const TermMap<2>& doubles() const noexcept { return doubles_; }
  const TermMap<3>& triples() const noexcept { return triples_; }

  template <std::size_t N>
  const TermMap<N>& terms() const noexcept {
    static_assert(N >= 1 && N <= 3);
    if constexpr (N == 1) {
      return singles_;
    } else if constexpr (N == 2) {
      return doubles_;
    } else {
      return triples_;
    }
  }

  bool is_zero() const noexcept { return singles_.empty() && doubles_.empty() && triples_.empty(); }
  std::size_t size() const noexcept { return singles_.size() + doubles_.size() + triples_.size(); }

  /// Coefficient of `key`, zero when absent.
  Coefficient coefficient(const TermKey& key) const;

  /// All terms in canonical order: by degree, then lexicographically.
  std::vector<std::pair<TermKey, Coefficient>> term_list() const;

  friend bool operator==(const Element&, const Element&) = default;

 private:
  friend class ElementBuilder;
  TermMap<1> singles_;
  TermMap<2> doubles_;
  TermMap<3> triples_;
};

/// Mutable staging area for an Element. Coefficients may pass through zero
/// while building; `build()` discards them.
class ElementBuilder {
 public:
  ElementBuilder() = default;
  explicit ElementBuilder(Element seed) : e_(std::move(seed)) {}

  template <std::size_t N>
  ElementBuilder& add(const Key<N>& key, const Coefficient& c) {
    if (!c.is_zero()) map<N>()[key] += c;
    return *this;
  }

  ElementBuilder& add(const TermKey& key, const Coefficient& c);

  /// Overwrites; a zero value removes the key.
  template <std::size_t N>
  ElementBuilder& set(const Key<N>& key, const Coefficient& c) {
    if (c.is_zero()) {
      map<N>().erase(key);
    } else {
      map<N>()[key] = c;
    }
    return *this;
  }

  ElementBuilder& set(const TermKey& key, const Coefficient& c);

  template <std::size_t N>
  ElementBuilder& replace_degree(TermMap<N> terms) {
    map<N>() = std::move(terms);
    return *this;
  }

  Element build() &&;

 private:
  template <std::size_t N>
  TermMap<N>& map() {
    if constexpr (N == 1) {
      return e_.singles_;
    } else if constexpr (N == 2) {
      return e_.doubles_;
    } else {
      return e_.triples_;
    }
  }

  Element e_;
};

/// Convenience: validated symbols from names.
std::vector<Symbol> symbols(std::initializer_list<std::string> names);
std::vector<Symbol> symbols(const std::vector<std::string>& names);

template <std::size_t N>
Key<N> TermKey::as() const {
  Key<N> key = [&]<std::size_t... I>(std::index_sequence<I...>) {
    return Key<N>{symbols_.at(I)...};
  }(std::make_index_sequence<N>{});
  return key;
}

}  // namespace aaa
