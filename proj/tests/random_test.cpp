#include <gtest/gtest.h>

#include <algorithm>
#include <array>
#include <set>

#include "aaa/error.hpp"
#include "aaa/random.hpp"
#include "aaa/textio.hpp"

namespace aaa {
namespace {

// Reference outputs computed with an independent Python transcription of the
// published SplitMix64 and xoshiro256** 1.0 sources.
TEST(SplitMix64, ReferenceSequence) {
  SplitMix64 sm(1234567);
  const std::array<std::uint64_t, 5> expected{6457827717110365317ULL, 3203168211198807973ULL,
                                              9817491932198370423ULL, 4593380528125082431ULL,
                                              16408922859458223821ULL};
  for (auto v : expected) EXPECT_EQ(sm.next(), v);
}

TEST(Xoshiro256, ReferenceSequenceFromRawState) {
  Xoshiro256 rng(std::array<std::uint64_t, 4>{1, 2, 3, 4});
  const std::array<std::uint64_t, 6> expected{11520ULL, 0ULL, 1509978240ULL, 1215971899390074240ULL,
                                              1216172134540287360ULL, 607988272756665600ULL};
  for (auto v : expected) EXPECT_EQ(rng(), v);
}

TEST(Xoshiro256, SeededViaSplitMix) {
  Xoshiro256 zero_seed(0);
  EXPECT_EQ(zero_seed(), 11091344671253066420ULL);
  EXPECT_EQ(zero_seed(), 13793997310169335082ULL);
  Xoshiro256 rng(42);
  EXPECT_EQ(rng(), 1546998764402558742ULL);
  EXPECT_EQ(rng(), 6990951692964543102ULL);
}

TEST(Xoshiro256, BoundedDrawsStayInRange) {
  Xoshiro256 rng(5);
  std::array<int, 7> hist{};
  for (int i = 0; i < 7000; ++i) {
    const auto v = rng.below(7);
    ASSERT_LT(v, 7u);
    ++hist[v];
  }
  // Loose sanity bound: every bucket within 30% of 1000.
  for (int h : hist) EXPECT_NEAR(h, 1000, 300);
  for (int i = 0; i < 1000; ++i) {
    const auto v = rng.between(-2, 3);
    ASSERT_GE(v, -2);
    ASSERT_LE(v, 3);
  }
  EXPECT_EQ(rng.between(4, 4), 4);
  EXPECT_THROW(rng.below(0), Error);
}

TEST(Raaa, DeterministicPerSeed) {
  EXPECT_EQ(raaa(17), raaa(17));
  EXPECT_NE(raaa(17), raaa(18));
  Xoshiro256 a(99), b(99);
  EXPECT_EQ(raaa(a), raaa(b));
}

TEST(Raaa, ZeroCounts) {
  RaaaOptions opts;
  opts.n1 = opts.n2 = opts.n3 = 0;
  EXPECT_TRUE(raaa(3, opts).is_zero());
}

TEST(Raaa, Errors) {
  RaaaOptions empty;
  empty.alphabet.clear();
  try {
    raaa(1, empty);
    ADD_FAILURE() << "no throw";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::EmptyAlphabet);
  }
  RaaaOptions negative;
  negative.n2 = -1;
  EXPECT_THROW(raaa(1, negative), Error);
  RaaaOptions inverted;
  inverted.coeff_lo = 5;
  inverted.coeff_hi = 1;
  EXPECT_THROW(raaa(1, inverted), Error);
}

TEST(Raaa, StructureOverManySeeds) {
  const RaaaOptions opts;
  const std::set<std::string> alphabet{"a", "b", "c", "d"};
  for (std::uint64_t seed = 0; seed < 1000; ++seed) {
    const Element e = raaa(seed, opts);
    for (const auto& [key, c] : e.term_list()) {
      ASSERT_GE(key.degree(), 1u);
      ASSERT_LE(key.degree(), 3u);
      for (const auto& s : key.symbols()) ASSERT_TRUE(alphabet.contains(s.name())) << s;
      ASSERT_TRUE(c.is_integer());
      // Up to n draws of [1,4] can land on one key.
      const int n = key.degree() == 1 ? opts.n1 : (key.degree() == 2 ? opts.n2 : opts.n3);
      ASSERT_GE(c, Coefficient(opts.coeff_lo));
      ASSERT_LE(c, Coefficient(opts.coeff_hi * n));
    }
    ASSERT_GE(e.singles().size(), 1u);
    ASSERT_LE(e.singles().size(), static_cast<std::size_t>(opts.n1));
    ASSERT_LE(e.doubles().size(), static_cast<std::size_t>(opts.n2));
    ASSERT_LE(e.triples().size(), static_cast<std::size_t>(opts.n3));
  }
}

TEST(Raaa, CustomAlphabet) {
  RaaaOptions opts;
  opts.alphabet = symbols({"foo"});
  opts.n1 = 3;
  opts.n2 = 0;
  opts.n3 = 1;
  opts.coeff_lo = opts.coeff_hi = 2;
  EXPECT_EQ(serialize(raaa(1, opts)), "+6foo +2(foo.foo)foo");
}

TEST(RandomRational, NonZeroAndBounded) {
  Xoshiro256 rng(8);
  for (int i = 0; i < 1000; ++i) {
    const Coefficient c = random_rational(rng, 9, 4);
    ASSERT_FALSE(c.is_zero());
    ASSERT_LE(c.abs(), Coefficient(9));
  }
}

TEST(DeriveSeed, Distinct) {
  std::set<std::uint64_t> seen;
  for (std::uint64_t s = 0; s < 4; ++s) {
    for (std::uint64_t stream = 0; stream < 8; ++stream) {
      for (std::uint64_t i = 0; i < 64; ++i) seen.insert(derive_seed(s, stream, i));
    }
  }
  EXPECT_EQ(seen.size(), 4u * 8u * 64u);
  EXPECT_EQ(derive_seed(1, 2, 3), derive_seed(1, 2, 3));
}

}  // namespace
}  // namespace aaa
