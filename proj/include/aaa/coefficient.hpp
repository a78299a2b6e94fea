#pragma once

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace aaa {

/// Exact rational scalar, always held in lowest terms with a positive
/// denominator.
class Coefficient {
 public:
  Coefficient() = default;
  Coefficient(std::int64_t value);  // NOLINT(google-explicit-constructor)
  Coefficient(std::int64_t numerator, std::int64_t denominator);

  /// Accepts "n" or "n/d" with an optional leading sign. Throws
  /// Error(InvalidCoefficient) on malformed text or a zero denominator.
  static Coefficient parse(std::string_view text);

  bool is_zero() const { return sgn(value_) == 0; }
  bool is_integer() const { return value_.get_den() == 1; }
  int sign() const { return sgn(value_); }

  Coefficient abs() const;
  std::string numerator() const { return value_.get_num().get_str(); }
  std::string denominator() const { return value_.get_den().get_str(); }

  /// "n" for integers, "n/d" otherwise; negative values carry a leading '-'.
  std::string to_string() const;

  Coefficient operator-() const;
  Coefficient& operator+=(const Coefficient& rhs);
  Coefficient& operator-=(const Coefficient& rhs);
  Coefficient& operator*=(const Coefficient& rhs);

  friend Coefficient operator+(Coefficient lhs, const Coefficient& rhs) { return lhs += rhs; }
  friend Coefficient operator-(Coefficient lhs, const Coefficient& rhs) { return lhs -= rhs; }
  friend Coefficient operator*(Coefficient lhs, const Coefficient& rhs) { return lhs *= rhs; }

  friend bool operator==(const Coefficient& a, const Coefficient& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const Coefficient& a, const Coefficient& b) {
    const int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  friend std::ostream& operator<<(std::ostream& os, const Coefficient& c) {
    return os << c.to_string();
  }

 private:
  explicit Coefficient(mpq_class value);
  mpq_class value_{0};
};

}  // namespace aaa
