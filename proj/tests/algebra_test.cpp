#include <gtest/gtest.h>

#include "aaa/algebra.hpp"
#include "aaa/error.hpp"
#include "test_support.hpp"

namespace aaa {
namespace {

using testing::el;
using testing::kAnti;

TEST(Zero, IsAdditiveIdentity) {
  EXPECT_TRUE(zero().is_zero());
  EXPECT_EQ(serialize(zero()), "0");
  EXPECT_EQ(serialize(zero() + from_symbols(symbols({"p", "q", "r"}))), "+1p +1q +1r");
  EXPECT_EQ(mul(kAnti, zero(), el("+1a +2a.b +3(a.b)c")), zero());
  EXPECT_EQ(mul(kAnti, el("+1a +2a.b"), zero()), zero());
}

TEST(FromSymbols, Examples) {
  EXPECT_EQ(serialize(testing::fixture_x()), "+1p +1q +1r");
  EXPECT_EQ(serialize(from_symbols(symbols({"a", "a"}))), "+2a");
  EXPECT_EQ(from_symbols({}), zero());
  EXPECT_THROW(from_symbols(symbols({"p", "q.r"})), Error);
}

TEST(MakeElement, PaperConstructors) {
  EXPECT_EQ(serialize(testing::fixture_x1()), "-1p +5r +6x");
  EXPECT_EQ(serialize(testing::fixture_y()), "+1a.foo +2b.bar +3c.baz");
  EXPECT_EQ(serialize(testing::fixture_z()), "+5(bar.q)foo +6(bar.r)foo +7(bar.s)bar");
}

TEST(MakeElement, AccumulatesAndDropsZeros) {
  const Element e = make_element({.s1 = symbols({"a", "a", "b"}),
                                  .sc = {2, -2, 1},
                                  .d1 = symbols({"a", "a"}),
                                  .d2 = symbols({"b", "b"}),
                                  .dc = {1, 3}});
  EXPECT_EQ(serialize(e), "+1b +4a.b");
}

TEST(MakeElement, LengthMismatch) {
  const auto expect_mismatch = [](const ElementSpec& spec) {
    try {
      make_element(spec);
      ADD_FAILURE() << "no throw";
    } catch (const Error& e) {
      EXPECT_EQ(e.kind(), ErrorKind::LengthMismatch);
    }
  };
  expect_mismatch({.s1 = symbols({"a", "b"}), .sc = {1}});
  expect_mismatch({.d1 = symbols({"a"}), .d2 = symbols({"a", "b"}), .dc = {1}});
  expect_mismatch({.d1 = symbols({"a"}), .d2 = symbols({"b"}), .dc = {}});
  expect_mismatch({.t1 = symbols({"a"}), .t2 = symbols({"b"}), .t3 = symbols({}), .tc = {1}});
}

TEST(Add, Cancellation) {
  EXPECT_EQ(serialize(testing::fixture_x() + testing::fixture_x1()), "+1q +6r +6x");
  const Element e = el("+1a -2/3b.c +4(a.b)c");
  EXPECT_EQ(e + zero(), e);
  EXPECT_EQ(e + neg(e), zero());
}

TEST(ScalarMul, Examples) {
  EXPECT_EQ(serialize(scalar_mul(1000, el("+1b.d +2c.b +2c.d"))), "+1000b.d +2000c.b +2000c.d");
  const Element e = el("+1a -2/3b.c +4(a.b)c");
  EXPECT_EQ(scalar_mul(0, e), zero());
  EXPECT_EQ(sub(e, e), zero());
  EXPECT_EQ(serialize(Coefficient(3, 2) * e), "+3/2a -1b.c +6(a.b)c");
}

TEST(Mul, PaperProduct) {
  const Element x = testing::fixture_x();
  const Element rhs = testing::fixture_x1() + testing::fixture_y();
  const Element product = mul(kAnti, x, rhs);
  EXPECT_EQ(serialize(product), testing::kProductText);
  EXPECT_EQ(product, mul(kAnti, x, testing::fixture_x1()) + mul(kAnti, x, testing::fixture_y()));
}

TEST(Mul, Generators) {
  const Element a = el("+1a"), b = el("+1b"), c = el("+1c");
  EXPECT_EQ(serialize(mul(kAnti, a, b)), "+1a.b");
  EXPECT_EQ(serialize(mul(kAnti, a, mul(kAnti, b, c))), "-1(a.b)c");
  EXPECT_EQ(serialize(mul(kAnti, mul(kAnti, a, b), c)), "+1(a.b)c");
  EXPECT_EQ(serialize(mul(AlgebraContext{2}, a, mul(AlgebraContext{2}, b, c))), "+2(a.b)c");
  EXPECT_EQ(mul(AlgebraContext{0}, a, mul(AlgebraContext{0}, b, c)), zero());
}

TEST(Mul, NeverProducesSingles) {
  Xoshiro256 rng(11);
  for (int i = 0; i < 200; ++i) {
    const Element p = mul(kAnti, testing::random_element(rng), testing::random_element(rng));
    EXPECT_TRUE(p.singles().empty());
  }
}

TEST(Equals, Examples) {
  EXPECT_TRUE(equals(zero(), from_symbols({})));
  EXPECT_FALSE(equals(el("+1a"), el("+2a")));
  EXPECT_FALSE(equals(el("+1a.b"), el("+1b.a")));
}

// Laws over random elements. Each runs a few hundred seeded trials; the
// acceptance suite repeats the headline ones at full scale.
class Laws : public ::testing::TestWithParam<Coefficient> {
 protected:
  AlgebraContext ctx() const { return AlgebraContext{GetParam()}; }
  Element m(const Element& u, const Element& v) const { return mul(ctx(), u, v); }
};

TEST_P(Laws, Distributivity) {
  Xoshiro256 rng(1);
  for (int i = 0; i < 300; ++i) {
    const Element u = testing::random_sparse_element(rng), v = testing::random_element(rng),
                  w = testing::random_element(rng);
    ASSERT_EQ(m(u, v + w), m(u, v) + m(u, w));
    ASSERT_EQ(m(u + v, w), m(u, w) + m(v, w));
  }
}

TEST_P(Laws, BilinearCompatibility) {
  Xoshiro256 rng(2);
  for (int i = 0; i < 300; ++i) {
    const Element u = testing::random_element(rng), v = testing::random_element(rng);
    const Coefficient a = random_rational(rng), b = random_rational(rng);
    ASSERT_EQ(m(a * u, b * v), (a * b) * m(u, v));
  }
}

TEST_P(Laws, GeneralizedAssociativity) {
  Xoshiro256 rng(3);
  for (int i = 0; i < 300; ++i) {
    const Element u = testing::random_element(rng), v = testing::random_element(rng),
                  w = testing::random_element(rng);
    ASSERT_EQ(m(u, m(v, w)), GetParam() * m(m(u, v), w));
  }
}

TEST_P(Laws, NilpotentOfOrderFour) {
  Xoshiro256 rng(4);
  for (int i = 0; i < 200; ++i) {
    const Element a = testing::random_element(rng), b = testing::random_element(rng),
                  c = testing::random_element(rng), d = testing::random_element(rng);
    ASSERT_TRUE(m(m(m(a, b), c), d).is_zero());
    ASSERT_TRUE(m(m(a, b), m(c, d)).is_zero());
    ASSERT_TRUE(m(a, m(b, m(c, d))).is_zero());
    ASSERT_TRUE(m(a, m(m(b, c), d)).is_zero());
    ASSERT_TRUE(m(m(a, m(b, c)), d).is_zero());
  }
}

TEST_P(Laws, DegreesArePreservedByLinearOps) {
  Xoshiro256 rng(5);
  for (int i = 0; i < 200; ++i) {
    const Element u = testing::random_element(rng);
    const Element s = random_rational(rng) * u;
    ASSERT_EQ(s.singles().size(), u.singles().size());
    ASSERT_EQ(s.doubles().size(), u.doubles().size());
    ASSERT_EQ(s.triples().size(), u.triples().size());
  }
}

TEST_P(Laws, NoStoredZeros) {
  Xoshiro256 rng(6);
  const auto no_zeros = [](const Element& e) {
    for (const auto& [k, c] : e.term_list()) {
      if (c.is_zero()) return false;
    }
    return true;
  };
  for (int i = 0; i < 200; ++i) {
    const Element u = testing::random_element(rng), v = testing::random_element(rng);
    ASSERT_TRUE(no_zeros(u + v));
    ASSERT_TRUE(no_zeros(u - v));
    ASSERT_TRUE(no_zeros(m(u, v)));
    ASSERT_TRUE(no_zeros(u + neg(u)));
  }
}

INSTANTIATE_TEST_SUITE_P(K, Laws,
                         ::testing::Values(Coefficient(-1), Coefficient(1), Coefficient(2),
                                           Coefficient(-3, 2), Coefficient(0)));

TEST(RemarkableIdentity, HoldsForRandomElements) {
  Xoshiro256 rng(7);
  for (int i = 0; i < 300; ++i) {
    const Element a = testing::random_element(rng), b = testing::random_element(rng),
                  x = testing::random_element(rng);
    const Element lhs = mul(kAnti, a + mul(kAnti, a, x), b + mul(kAnti, x, b));
    ASSERT_EQ(lhs, mul(kAnti, a, b));
  }
}

TEST(RemarkableIdentity, FailsAwayFromMinusOne) {
  const AlgebraContext assoc{1};
  const Element a = el("+1a"), b = el("+1b"), x = el("+1x");
  const Element lhs = mul(assoc, a + mul(assoc, a, x), b + mul(assoc, x, b));
  EXPECT_EQ(serialize(lhs), "+1a.b +2(a.x)b");
}

}  // namespace
}  // namespace aaa
