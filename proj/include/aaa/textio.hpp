#pragma once

#include <string>
#include <string_view>

#include "aaa/coefficient.hpp"
#include "aaa/element.hpp"

namespace aaa {

/// One-line canonical rendering, e.g. "+1a -1/2b +3a.b -2(p.b)bar".
/// Terms are ordered by degree, then lexicographically; zero is "0".
std::string serialize(const Element& a);

/// Renders a single term: sign, magnitude, key.
std::string serialize_term(const TermKey& key, const Coefficient& c);

/// "a", "a.b" or "(a.b)c".
std::string serialize_key(const TermKey& key);

/// Inverse of serialize. Accepts any whitespace between terms, unreduced
/// fractions and zero coefficients (dropped); duplicate keys accumulate.
/// Throws Error(SyntaxError) carrying the 1-based column.
Element parse(std::string_view text);

}  // namespace aaa
