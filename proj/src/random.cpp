#include "aaa/random.hpp"

#include <bit>
#include <string>

#include "aaa/error.hpp"

namespace aaa {

std::uint64_t SplitMix64::next() {
  std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

Xoshiro256::Xoshiro256(std::uint64_t seed) {
  SplitMix64 sm(seed);
  for (auto& word : s_) word = sm.next();
}

Xoshiro256::result_type Xoshiro256::operator()() {
  const std::uint64_t result = std::rotl(s_[1] * 5, 7) * 9;
  const std::uint64_t t = s_[1] << 17;
  s_[2] ^= s_[0];
  s_[3] ^= s_[1];
  s_[1] ^= s_[2];
  s_[0] ^= s_[3];
  s_[2] ^= t;
  s_[3] = std::rotl(s_[3], 45);
  return result;
}

std::uint64_t Xoshiro256::below(std::uint64_t bound) {
  if (bound == 0) throw Error(ErrorKind::InvalidCoefficient, "empty sampling range");
  // Reject the lowest 2^64 mod bound values so the modulus is unbiased.
  const std::uint64_t threshold = (0 - bound) % bound;
  for (;;) {
    const std::uint64_t x = (*this)();
    if (x >= threshold) return x % bound;
  }
}

std::int64_t Xoshiro256::between(std::int64_t lo, std::int64_t hi) {
  if (hi < lo) throw Error(ErrorKind::InvalidCoefficient, "empty coefficient range");
  const auto span = static_cast<std::uint64_t>(hi) - static_cast<std::uint64_t>(lo) + 1;
  if (span == 0) return static_cast<std::int64_t>((*this)());  // full 64-bit range
  return static_cast<std::int64_t>(static_cast<std::uint64_t>(lo) + below(span));
}

std::vector<Symbol> RaaaOptions::default_alphabet() { return symbols({"a", "b", "c", "d"}); }

namespace {

void validate(const RaaaOptions& opts) {
  if (opts.alphabet.empty()) throw Error(ErrorKind::EmptyAlphabet, "raaa needs a nonempty alphabet");
  if (opts.n1 < 0 || opts.n2 < 0 || opts.n3 < 0) {
    throw Error(ErrorKind::InvalidCoefficient, "term counts must be nonnegative");
  }
  if (opts.coeff_hi < opts.coeff_lo) {
    throw Error(ErrorKind::InvalidCoefficient, "empty coefficient range");
  }
}

// Draw order per term: key symbols left to right, then the coefficient.
template <typename Draw>
Element generate(Xoshiro256& rng, const RaaaOptions& opts, Draw draw) {
  validate(opts);
  const auto& alpha = opts.alphabet;
  const auto pick = [&] { return alpha[rng.below(alpha.size())]; };
  ElementBuilder b;
  for (int i = 0; i < opts.n1; ++i) {
    Key<1> key{pick()};
    b.add(key, draw());
  }
  for (int i = 0; i < opts.n2; ++i) {
    Key<2> key{pick(), pick()};
    b.add(key, draw());
  }
  for (int i = 0; i < opts.n3; ++i) {
    Key<3> key{pick(), pick(), pick()};
    b.add(key, draw());
  }
  return std::move(b).build();
}

}  // namespace

Element raaa(Xoshiro256& rng, const RaaaOptions& opts) {
  return generate(rng, opts, [&] { return Coefficient(rng.between(opts.coeff_lo, opts.coeff_hi)); });
}

Element raaa(std::uint64_t seed, const RaaaOptions& opts) {
  Xoshiro256 rng(seed);
  return raaa(rng, opts);
}

Coefficient random_rational(Xoshiro256& rng, std::int64_t max_numerator, std::int64_t max_denominator) {
  std::int64_t num = rng.between(1, max_numerator);
  if (rng.below(2) == 1) num = -num;
  return Coefficient(num, rng.between(1, max_denominator));
}

Element random_rational_element(Xoshiro256& rng, const RaaaOptions& opts) {
  return generate(rng, opts, [&] { return random_rational(rng); });
}

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream, std::uint64_t index) {
  std::uint64_t h = SplitMix64(seed).next();
  h = SplitMix64(h ^ (stream * 0x9e3779b97f4a7c15ULL)).next();
  return SplitMix64(h ^ (index * 0xd1b54a32d192ed03ULL)).next();
}

}  // namespace aaa
