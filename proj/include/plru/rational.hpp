#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace plru {

using BigInt = mpz_class;

/// Exact signed fraction in lowest terms with a positive denominator.
///
/// Backed by GMP rationals; every arithmetic result is renormalized, so two
/// equal values always have identical numerator and denominator.
class Rational {
public:
  Rational() = default;
  Rational(long value) : value_(value) {} // NOLINT(google-explicit-constructor)
  Rational(long numerator, long denominator);
  Rational(const BigInt& numerator, const BigInt& denominator);
  explicit Rational(const BigInt& integer) : value_(integer) {}
  explicit Rational(const mpq_class& value);

  /// Accepts "p", "-p", "p/q", "-p/q" with q > 0. No whitespace.
  static std::optional<Rational> parse(std::string_view text);

  BigInt numerator() const { return value_.get_num(); }
  BigInt denominator() const { return value_.get_den(); }
  const mpq_class& raw() const noexcept { return value_; }

  int sign() const { return sgn(value_); }
  bool is_zero() const { return sign() == 0; }
  bool is_integer() const { return value_.get_den() == 1; }

  Rational abs() const;
  BigInt floor() const;
  double to_double() const { return value_.get_d(); }

  /// "p/q", or "p" when the denominator is 1.
  std::string str() const { return value_.get_str(); }

  Rational operator-() const;
  Rational& operator+=(const Rational& rhs);
  Rational& operator-=(const Rational& rhs);
  Rational& operator*=(const Rational& rhs);
  Rational& operator/=(const Rational& rhs);

  friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
  friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
  friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
  friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }

  friend bool operator==(const Rational& a, const Rational& b) { return cmp(a.value_, b.value_) == 0; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

private:
  mpq_class value_;
};

Rational pow(const Rational& base, std::uint64_t exponent);
Rational min(const Rational& a, const Rational& b);
Rational max(const Rational& a, const Rational& b);

std::ostream& operator<<(std::ostream& os, const Rational& r);

} // namespace plru
