#include "aaa/element.hpp"

#include <iterator>

#include "aaa/error.hpp"

namespace aaa {

namespace {

template <std::size_t N>
void drop_zeros(TermMap<N>& m) {
  std::erase_if(m, [](const auto& kv) { return kv.second.is_zero(); });
}

template <std::size_t N>
void append_terms(const TermMap<N>& m, std::vector<std::pair<TermKey, Coefficient>>& out) {
  for (const auto& [key, c] : m) out.emplace_back(TermKey(key), c);
}

template <std::size_t N>
Coefficient lookup(const TermMap<N>& m, const TermKey& key) {
  const auto it = m.find(key.as<N>());
  return it == m.end() ? Coefficient{} : it->second;
}

}  // namespace

TermKey::TermKey(std::vector<Symbol> symbols) : symbols_(std::move(symbols)) {
  if (symbols_.empty() || symbols_.size() > 3) {
    throw Error(ErrorKind::DegreeMismatch,
                "term keys have 1 to 3 symbols, got " + std::to_string(symbols_.size()));
  }
}

Coefficient Element::coefficient(const TermKey& key) const {
  switch (key.degree()) {
    case 1: return lookup(singles_, key);
    case 2: return lookup(doubles_, key);
    default: return lookup(triples_, key);
  }
}

std::vector<std::pair<TermKey, Coefficient>> Element::term_list() const {
  std::vector<std::pair<TermKey, Coefficient>> out;
  out.reserve(size());
  append_terms(singles_, out);
  append_terms(doubles_, out);
  append_terms(triples_, out);
  return out;
}

ElementBuilder& ElementBuilder::add(const TermKey& key, const Coefficient& c) {
  switch (key.degree()) {
    case 1: return add(key.as<1>(), c);
    case 2: return add(key.as<2>(), c);
    default: return add(key.as<3>(), c);
  }
}

ElementBuilder& ElementBuilder::set(const TermKey& key, const Coefficient& c) {
  switch (key.degree()) {
    case 1: return set(key.as<1>(), c);
    case 2: return set(key.as<2>(), c);
    default: return set(key.as<3>(), c);
  }
}

Element ElementBuilder::build() && {
  drop_zeros(e_.singles_);
  drop_zeros(e_.doubles_);
  drop_zeros(e_.triples_);
  return std::move(e_);
}

std::vector<Symbol> symbols(std::initializer_list<std::string> names) {
  std::vector<Symbol> out;
  out.reserve(names.size());
  for (const auto& n : names) out.emplace_back(n);
  return out;
}

std::vector<Symbol> symbols(const std::vector<std::string>& names) {
  std::vector<Symbol> out;
  out.reserve(names.size());
  for (const auto& n : names) out.emplace_back(n);
  return out;
}

}  // namespace aaa
