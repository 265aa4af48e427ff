#include "plru/decimal.hpp"

#include <stdexcept>

namespace plru {

namespace {

BigInt pow10(unsigned long e) {
  BigInt r;
  mpz_ui_pow_ui(r.get_mpz_t(), 10, e);
  return r;
}

// q * 10^k for a possibly negative k.
Rational shift(const Rational& q, long k) {
  if (k >= 0) return q * Rational(pow10(static_cast<unsigned long>(k)));
  return q / Rational(pow10(static_cast<unsigned long>(-k)));
}

BigInt round_half_even(const Rational& q) {
  BigInt fl = q.floor();
  const Rational rem = q - Rational(fl);
  const Rational half(1, 2);
  if (rem > half || (rem == half && mpz_odd_p(fl.get_mpz_t()))) fl += 1;
  return fl;
}

} // namespace

std::string to_decimal(const Rational& value, int significant_digits) {
  if (significant_digits < 1) throw std::invalid_argument("need at least one significant digit");
  if (value.is_zero()) return "0";

  const Rational q = value.abs();
  const BigInt lower = pow10(static_cast<unsigned long>(significant_digits - 1));
  const BigInt upper = lower * 10;

  // Initial guess from digit counts, then step until q * 10^k lies in
  // [10^(d-1), 10^d).
  long k = static_cast<long>(significant_digits) -
           static_cast<long>(mpz_sizeinbase(q.numerator().get_mpz_t(), 10)) +
           static_cast<long>(mpz_sizeinbase(q.denominator().get_mpz_t(), 10));
  while (shift(q, k) >= Rational(upper)) --k;
  while (shift(q, k) < Rational(lower)) ++k;

  BigInt mantissa = round_half_even(shift(q, k));
  if (mantissa == upper) {
    mantissa = lower;
    --k;
  }

  const std::string digits = mantissa.get_str();
  const long d = static_cast<long>(digits.size());
  std::string out;
  if (k <= 0) {
    out = digits + std::string(static_cast<std::size_t>(-k), '0');
  } else {
    std::string int_part, frac_part;
    if (k < d) {
      int_part = digits.substr(0, static_cast<std::size_t>(d - k));
      frac_part = digits.substr(static_cast<std::size_t>(d - k));
    } else {
      int_part = "0";
      frac_part = std::string(static_cast<std::size_t>(k - d), '0') + digits;
    }
    while (!frac_part.empty() && frac_part.back() == '0') frac_part.pop_back();
    out = frac_part.empty() ? int_part : int_part + "." + frac_part;
  }
  return value.sign() < 0 ? "-" + out : out;
}

} // namespace plru
