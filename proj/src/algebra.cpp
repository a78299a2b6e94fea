#include "aaa/algebra.hpp"

#include <string>

#include "aaa/error.hpp"

namespace aaa {

namespace {

void require_same_length(std::size_t a, std::size_t b, const char* what) {
  if (a != b) {
    throw Error(ErrorKind::LengthMismatch, std::string(what) + ": parallel lists have lengths " +
                                               std::to_string(a) + " and " + std::to_string(b));
  }
}

template <std::size_t N, typename F>
void transform_into(ElementBuilder& out, const TermMap<N>& in, F&& f) {
  for (const auto& [key, c] : in) out.add(key, f(c));
}

}  // namespace

Element from_symbols(const std::vector<Symbol>& names) {
  ElementBuilder b;
  for (const auto& s : names) b.add(Key<1>{s}, Coefficient{1});
  return std::move(b).build();
}

Element make_element(const ElementSpec& spec) {
  require_same_length(spec.s1.size(), spec.sc.size(), "s1/sc");
  require_same_length(spec.d1.size(), spec.d2.size(), "d1/d2");
  require_same_length(spec.d1.size(), spec.dc.size(), "d1/dc");
  require_same_length(spec.t1.size(), spec.t2.size(), "t1/t2");
  require_same_length(spec.t1.size(), spec.t3.size(), "t1/t3");
  require_same_length(spec.t1.size(), spec.tc.size(), "t1/tc");

  ElementBuilder b;
  for (std::size_t i = 0; i < spec.s1.size(); ++i) b.add(Key<1>{spec.s1[i]}, spec.sc[i]);
  for (std::size_t i = 0; i < spec.d1.size(); ++i) b.add(Key<2>{spec.d1[i], spec.d2[i]}, spec.dc[i]);
  for (std::size_t i = 0; i < spec.t1.size(); ++i) {
    b.add(Key<3>{spec.t1[i], spec.t2[i], spec.t3[i]}, spec.tc[i]);
  }
  return std::move(b).build();
}

Element add(const Element& a, const Element& b) {
  ElementBuilder out(a);
  const auto id = [](const Coefficient& c) { return c; };
  transform_into(out, b.singles(), id);
  transform_into(out, b.doubles(), id);
  transform_into(out, b.triples(), id);
  return std::move(out).build();
}

Element neg(const Element& a) { return scalar_mul(Coefficient{-1}, a); }

Element sub(const Element& a, const Element& b) { return add(a, neg(b)); }

Element scalar_mul(const Coefficient& c, const Element& a) {
  if (c.is_zero()) return zero();
  ElementBuilder out;
  const auto scale = [&c](const Coefficient& x) { return c * x; };
  transform_into(out, a.singles(), scale);
  transform_into(out, a.doubles(), scale);
  transform_into(out, a.triples(), scale);
  return std::move(out).build();
}

Element mul(const AlgebraContext& ctx, const Element& a, const Element& b) {
  ElementBuilder out;

  // x_i * x_j = x_i.x_j
  for (const auto& [ka, ca] : a.singles()) {
    for (const auto& [kb, cb] : b.singles()) {
      out.add(Key<2>{ka[0], kb[0]}, ca * cb);
    }
  }

  // (x_i x_j) * x_k = (x_i.x_j)x_k
  for (const auto& [ka, ca] : a.doubles()) {
    for (const auto& [kb, cb] : b.singles()) {
      out.add(Key<3>{ka[0], ka[1], kb[0]}, ca * cb);
    }
  }

  // x_i * (x_j x_k) = k (x_i.x_j)x_k
  if (!ctx.k.is_zero()) {
    for (const auto& [ka, ca] : a.singles()) {
      for (const auto& [kb, cb] : b.doubles()) {
        out.add(Key<3>{ka[0], kb[0], kb[1]}, ctx.k * ca * cb);
      }
    }
  }

  // Every other pairing has degree >= 4 and vanishes.
  return std::move(out).build();
}

}  // namespace aaa
