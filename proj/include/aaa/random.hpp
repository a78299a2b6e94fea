#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "aaa/coefficient.hpp"
#include "aaa/element.hpp"
#include "aaa/symbol.hpp"

namespace aaa {

/// SplitMix64, used to expand a 64-bit seed into generator state.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}
  std::uint64_t next();

 private:
  std::uint64_t state_;
};

/// xoshiro256** 1.0 (Blackman & Vigna). Satisfies UniformRandomBitGenerator.
class Xoshiro256 {
 public:
  using result_type = std::uint64_t;

  /// State seeded from four successive SplitMix64 outputs.
  explicit Xoshiro256(std::uint64_t seed);
  explicit Xoshiro256(const std::array<std::uint64_t, 4>& state) : s_(state) {}

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() { return ~result_type{0}; }
  result_type operator()();

  /// Uniform in [0, bound) by rejection; identical on every platform.
  std::uint64_t below(std::uint64_t bound);
  /// Uniform in [lo, hi].
  std::int64_t between(std::int64_t lo, std::int64_t hi);

 private:
  std::array<std::uint64_t, 4> s_;
};

struct RaaaOptions {
  std::vector<Symbol> alphabet = default_alphabet();
  int n1 = 5;
  int n2 = 5;
  int n3 = 5;
  std::int64_t coeff_lo = 1;
  std::int64_t coeff_hi = 4;

  static std::vector<Symbol> default_alphabet();
};

/// Simple random element: n1/n2/n3 draws per degree with uniform keys over the
/// alphabet and uniform integer coefficients; repeated keys accumulate.
/// Throws Error(EmptyAlphabet), or Error(InvalidCoefficient) on a negative
/// count or an empty coefficient range.
Element raaa(std::uint64_t seed, const RaaaOptions& opts = {});
Element raaa(Xoshiro256& rng, const RaaaOptions& opts = {});

/// Signed rationals with |numerator| <= max_numerator and denominators in
/// 1..max_denominator; never zero.
Coefficient random_rational(Xoshiro256& rng, std::int64_t max_numerator = 9,
                            std::int64_t max_denominator = 4);

/// Like raaa but with random signed rational coefficients; may be zero.
Element random_rational_element(Xoshiro256& rng, const RaaaOptions& opts = {});

/// Stable derivation of a sub-seed, e.g. per trial of a property check.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream, std::uint64_t index = 0);

}  // namespace aaa
