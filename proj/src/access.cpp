#include "aaa/access.hpp"

#include <string>

#include "aaa/error.hpp"

namespace aaa {

namespace {

template <std::size_t N>
Element only_degree(const Element& a) {
  ElementBuilder b;
  b.replace_degree<N>(a.terms<N>());
  return std::move(b).build();
}

template <std::size_t N>
Element set_degree(const Element& a, const Element& r) {
  const bool foreign = (N != 1 && !r.singles().empty()) || (N != 2 && !r.doubles().empty()) ||
                       (N != 3 && !r.triples().empty());
  if (foreign) {
    throw Error(ErrorKind::DegreeMismatch,
                "replacement for degree " + std::to_string(N) + " holds terms of another degree");
  }
  ElementBuilder b(a);
  b.replace_degree<N>(r.terms<N>());
  return std::move(b).build();
}

void check_group(std::size_t a, std::size_t b, const char* what) {
  if (a != b) {
    throw Error(ErrorKind::LengthMismatch, std::string(what) + ": parallel lists have lengths " +
                                               std::to_string(a) + " and " + std::to_string(b));
  }
}

Element extract_keys(const Element& a, const std::vector<TermKey>& keys) {
  ElementBuilder out;
  for (const auto& key : keys) out.set(key, a.coefficient(key));
  return std::move(out).build();
}

Element replace_keys(const Element& a, const std::vector<TermKey>& keys, const Coefficient& value) {
  ElementBuilder out(a);
  for (const auto& key : keys) out.set(key, value);
  return std::move(out).build();
}

template <std::size_t N>
std::vector<Symbol> column(const Element& a, std::size_t index) {
  std::vector<Symbol> out;
  out.reserve(a.terms<N>().size());
  for (const auto& [key, c] : a.terms<N>()) out.push_back(key[index]);
  return out;
}

template <std::size_t N>
std::vector<Coefficient> coeff_column(const Element& a) {
  std::vector<Coefficient> out;
  out.reserve(a.terms<N>().size());
  for (const auto& [key, c] : a.terms<N>()) out.push_back(c);
  return out;
}

template <std::size_t N>
TermView view_of(const Element& a) {
  TermView v;
  for (const auto& [key, c] : a.terms<N>()) {
    v.keys.emplace_back(key);
    v.coeffs.push_back(c);
  }
  return v;
}

}  // namespace

std::vector<TermKey> KeySelector::keys() const {
  check_group(d1.size(), d2.size(), "d1/d2");
  check_group(t1.size(), t2.size(), "t1/t2");
  check_group(t1.size(), t3.size(), "t1/t3");
  std::vector<TermKey> out;
  out.reserve(s1.size() + d1.size() + t1.size());
  for (const auto& s : s1) out.emplace_back(Key<1>{s});
  for (std::size_t i = 0; i < d1.size(); ++i) out.emplace_back(Key<2>{d1[i], d2[i]});
  for (std::size_t i = 0; i < t1.size(); ++i) out.emplace_back(Key<3>{t1[i], t2[i], t3[i]});
  return out;
}

KeyMatrix::KeyMatrix(std::vector<std::vector<Symbol>> rows) {
  if (rows.empty()) return;
  width_ = rows.front().size();
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != width_) {
      throw Error(ErrorKind::RaggedMatrix, "row " + std::to_string(r + 1) + " has width " +
                                               std::to_string(rows[r].size()) + ", expected " +
                                               std::to_string(width_));
    }
  }
  keys_.reserve(rows.size());
  for (auto& row : rows) keys_.emplace_back(std::move(row));
}

Element single_part(const Element& a) { return only_degree<1>(a); }
Element double_part(const Element& a) { return only_degree<2>(a); }
Element triple_part(const Element& a) { return only_degree<3>(a); }

Element set_single(const Element& a, const Element& r) { return set_degree<1>(a, r); }
Element set_double(const Element& a, const Element& r) { return set_degree<2>(a, r); }
Element set_triple(const Element& a, const Element& r) { return set_degree<3>(a, r); }

Element extract(const Element& a, const KeySelector& sel) { return extract_keys(a, sel.keys()); }

Element replace(const Element& a, const KeySelector& sel, const Coefficient& value) {
  return replace_keys(a, sel.keys(), value);
}

Element extract_matrix(const Element& a, const KeyMatrix& m) { return extract_keys(a, m.keys()); }

Element replace_matrix(const Element& a, const KeyMatrix& m, const Coefficient& value) {
  return replace_keys(a, m.keys(), value);
}

TermView view(const Element& a, std::size_t degree) {
  switch (degree) {
    case 1: return view_of<1>(a);
    case 2: return view_of<2>(a);
    case 3: return view_of<3>(a);
    default:
      throw Error(ErrorKind::DegreeMismatch, "no terms of degree " + std::to_string(degree));
  }
}

std::vector<Symbol> s1(const Element& a) { return column<1>(a, 0); }
std::vector<Coefficient> sc(const Element& a) { return coeff_column<1>(a); }
std::vector<Symbol> d1(const Element& a) { return column<2>(a, 0); }
std::vector<Symbol> d2(const Element& a) { return column<2>(a, 1); }
std::vector<Coefficient> dc(const Element& a) { return coeff_column<2>(a); }
std::vector<Symbol> t1(const Element& a) { return column<3>(a, 0); }
std::vector<Symbol> t2(const Element& a) { return column<3>(a, 1); }
std::vector<Symbol> t3(const Element& a) { return column<3>(a, 2); }
std::vector<Coefficient> tc(const Element& a) { return coeff_column<3>(a); }

}  // namespace aaa
