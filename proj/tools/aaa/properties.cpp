#include "properties.hpp"

#include <utility>

#include "aaa/algebra.hpp"
#include "aaa/random.hpp"
#include "aaa/textio.hpp"
#include "oracle.hpp"

namespace aaa::cli {

namespace {

struct Inputs {
  Xoshiro256 rng;
  std::string described;

  explicit Inputs(std::uint64_t seed) : rng(seed), described("seed " + std::to_string(seed)) {}

  Element element(const char* name) {
    Element e = random_rational_element(rng);
    described += std::string("; ") + name + " = " + serialize(e);
    return e;
  }

  Coefficient scalar(const char* name) {
    Coefficient c = random_rational(rng);
    described += std::string("; ") + name + " = " + c.to_string();
    return c;
  }

  std::optional<std::string> verdict(bool ok) const {
    if (ok) return std::nullopt;
    return described;
  }
};

std::vector<Property> make_properties() {
  std::vector<Property> props;

  props.push_back({"distributivity", [](std::uint64_t seed, const Coefficient& k) {
                     Inputs in(seed);
                     const AlgebraContext ctx{k};
                     const Element u = in.element("u");
                     const Element v = in.element("v");
                     const Element w = in.element("w");
                     return in.verdict(mul(ctx, u, v + w) == mul(ctx, u, v) + mul(ctx, u, w) &&
                                       mul(ctx, u + v, w) == mul(ctx, u, w) + mul(ctx, v, w));
                   }});

  props.push_back({"bilinearity", [](std::uint64_t seed, const Coefficient& k) {
                     Inputs in(seed);
                     const AlgebraContext ctx{k};
                     const Element u = in.element("u");
                     const Element v = in.element("v");
                     const Coefficient a = in.scalar("a");
                     const Coefficient b = in.scalar("b");
                     return in.verdict(mul(ctx, a * u, b * v) == (a * b) * mul(ctx, u, v));
                   }});

  props.push_back({"antiassociativity", [](std::uint64_t seed, const Coefficient& k) {
                     Inputs in(seed);
                     const AlgebraContext ctx{k};
                     const Element u = in.element("u");
                     const Element v = in.element("v");
                     const Element w = in.element("w");
                     return in.verdict(mul(ctx, u, mul(ctx, v, w)) == k * mul(ctx, mul(ctx, u, v), w));
                   }});

  props.push_back({"nilpotency", [](std::uint64_t seed, const Coefficient& k) {
                     Inputs in(seed);
                     const AlgebraContext ctx{k};
                     const Element a = in.element("a");
                     const Element b = in.element("b");
                     const Element c = in.element("c");
                     const Element d = in.element("d");
                     const Element ab = mul(ctx, a, b);
                     return in.verdict(mul(ctx, mul(ctx, ab, c), d).is_zero() &&
                                       mul(ctx, ab, mul(ctx, c, d)).is_zero() &&
                                       mul(ctx, a, mul(ctx, b, mul(ctx, c, d))).is_zero() &&
                                       mul(ctx, a, mul(ctx, mul(ctx, b, c), d)).is_zero() &&
                                       mul(ctx, mul(ctx, a, mul(ctx, b, c)), d).is_zero());
                   }});

  // (a + ax)(b + xb) = ab + (1 + k)(ax)b, which is the identity
  // (a + ax)(b + xb) = ab at k = -1.
  props.push_back({"remarkable-identity", [](std::uint64_t seed, const Coefficient& k) {
                     Inputs in(seed);
                     const AlgebraContext ctx{k};
                     const Element a = in.element("a");
                     const Element b = in.element("b");
                     const Element x = in.element("x");
                     const Element ax = mul(ctx, a, x);
                     const Element lhs = mul(ctx, a + ax, b + mul(ctx, x, b));
                     const Element rhs = mul(ctx, a, b) + (Coefficient{1} + k) * mul(ctx, ax, b);
                     return in.verdict(lhs == rhs);
                   }});

  props.push_back({"oracle-equivalence", [](std::uint64_t seed, const Coefficient& k) {
                     Inputs in(seed);
                     const Element u = in.element("u");
                     const Element v = in.element("v");
                     return in.verdict(mul(AlgebraContext{k}, u, v) == oracle::naive_mul(k, u, v));
                   }});

  props.push_back({"round-trip", [](std::uint64_t seed, const Coefficient&) {
                     Inputs in(seed);
                     const Element e = in.element("e");
                     const std::string text = serialize(e);
                     return in.verdict(parse(text) == e && serialize(parse(text)) == text);
                   }});

  return props;
}

}  // namespace

const std::vector<Property>& standard_properties() {
  static const std::vector<Property> props = make_properties();
  return props;
}

std::vector<PropertyResult> run_properties(const CheckOptions& opts) {
  return run_properties(standard_properties(), opts);
}

std::vector<PropertyResult> run_properties(const std::vector<Property>& props, const CheckOptions& opts) {
  std::vector<PropertyResult> results;
  for (std::size_t p = 0; p < props.size(); ++p) {
    PropertyResult r{props[p].name, 0, opts.trials, std::nullopt};
    for (std::size_t t = 0; t < opts.trials; ++t) {
      if (auto failure = props[p].trial(derive_seed(opts.seed, p, t), opts.k)) {
        r.counterexample = "trial " + std::to_string(t) + ", " + *failure;
        break;
      }
      ++r.passed;
    }
    results.push_back(std::move(r));
  }
  return results;
}

}  // namespace aaa::cli
