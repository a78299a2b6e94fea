#include "aaa/coefficient.hpp"

#include <algorithm>
#include <cctype>
#include <utility>

#include "aaa/error.hpp"

namespace aaa {

namespace {

bool all_digits(std::string_view s) {
  return !s.empty() &&
         std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c) != 0; });
}

}  // namespace

Coefficient::Coefficient(std::int64_t value) {
  // mpq_class has no int64 constructor on every platform; go through text.
  value_ = mpq_class(mpz_class(std::to_string(value)));
}

Coefficient::Coefficient(std::int64_t numerator, std::int64_t denominator) {
  if (denominator == 0) {
    throw Error(ErrorKind::InvalidCoefficient, "zero denominator");
  }
  value_ = mpq_class(mpz_class(std::to_string(numerator)), mpz_class(std::to_string(denominator)));
  value_.canonicalize();
}

Coefficient::Coefficient(mpq_class value) : value_(std::move(value)) { value_.canonicalize(); }

Coefficient Coefficient::parse(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '+' || body.front() == '-')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  const auto slash = body.find('/');
  const std::string_view num = body.substr(0, slash);
  const std::string_view den = slash == std::string_view::npos ? "1" : body.substr(slash + 1);
  if (!all_digits(num) || !all_digits(den)) {
    throw Error(ErrorKind::InvalidCoefficient, "malformed rational '" + std::string(text) + "'");
  }
  mpz_class n(std::string(num), 10);
  mpz_class d(std::string(den), 10);
  if (d == 0) {
    throw Error(ErrorKind::InvalidCoefficient, "zero denominator in '" + std::string(text) + "'");
  }
  if (negative) n = -n;
  return Coefficient(mpq_class(n, d));
}

Coefficient Coefficient::abs() const { return Coefficient(mpq_class(::abs(value_))); }

std::string Coefficient::to_string() const {
  // get_str yields "n" or "n/d" for a canonical mpq.
  return value_.get_str();
}

Coefficient Coefficient::operator-() const { return Coefficient(mpq_class(-value_)); }

Coefficient& Coefficient::operator+=(const Coefficient& rhs) {
  value_ += rhs.value_;
  return *this;
}

Coefficient& Coefficient::operator-=(const Coefficient& rhs) {
  value_ -= rhs.value_;
  return *this;
}

Coefficient& Coefficient::operator*=(const Coefficient& rhs) {
  value_ *= rhs.value_;
  return *this;
}

}  // namespace aaa
