#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "aaa/coefficient.hpp"

namespace aaa::cli {

struct CheckOptions {
  std::size_t trials = 1000;
  std::uint64_t seed = 0;
  Coefficient k{-1};
};

struct PropertyResult {
  std::string name;
  std::size_t passed = 0;
  std::size_t trials = 0;
  /// First failing trial: reproduction seed and serialized inputs.
  std::optional<std::string> counterexample;

  bool ok() const { return !counterexample.has_value(); }
};

/// A named law checked on one seeded trial. Returns a description of the
/// inputs on failure.
struct Property {
  std::string name;
  std::function<std::optional<std::string>(std::uint64_t trial_seed, const Coefficient& k)> trial;
};

/// distributivity, bilinearity, antiassociativity, nilpotency,
/// remarkable-identity, oracle-equivalence, round-trip.
const std::vector<Property>& standard_properties();

/// Trial t of property p uses derive_seed(opts.seed, p, t). Stops a property
/// at its first counterexample.
std::vector<PropertyResult> run_properties(const CheckOptions& opts);
std::vector<PropertyResult> run_properties(const std::vector<Property>& props, const CheckOptions& opts);

}  // namespace aaa::cli
