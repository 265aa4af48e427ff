#pragma once

#include <compare>
#include <optional>

#include "plru/pl_function.hpp"
#include "plru/rational.hpp"

namespace plru {

/// A lattice-norm value: an exact non-negative rational or +infinity.
class NormValue {
public:
  static NormValue finite(Rational value);
  static NormValue infinite() { return NormValue(); }

  bool is_finite() const noexcept { return value_.has_value(); }
  /// Throws std::logic_error when infinite.
  const Rational& value() const;

  friend bool operator==(const NormValue&, const NormValue&) = default;
  friend std::strong_ordering operator<=>(const NormValue& a, const NormValue& b);

private:
  NormValue() = default;
  std::optional<Rational> value_;
};

struct NormWitness {
  enum class Kind {
    node,          // ratio |x(t)|/e(t) attains the norm at t
    slope_at_zero, // the norm is |x'(0+)|/e'(0+) with x(0) = e(0) = 0
  };
  Kind kind = Kind::node;
  Rational t;

  friend bool operator==(const NormWitness&, const NormWitness&) = default;
};

struct NormCertificate {
  NormValue value;
  NormWitness witness;
};

/// Throws InvalidRegulator unless e >= 0 on [0,1] and e > 0 on (0,1].
void require_admissible_regulator(const PLFunction& e);

/// ||x||_e = inf{lambda >= 0 : |x| <= lambda e}, computed exactly.
///
/// On each segment of the merged grid of |x| and e the ratio |x|/e is a
/// quotient of linear functions with positive denominator, hence monotone,
/// so the supremum is attained at a node (or, when e(0) = 0, by the slope
/// ratio on the first segment). The witness is the smallest such t.
NormCertificate e_norm(const PLFunction& x, const PLFunction& e);

/// x is in the principal ideal generated by e iff ||x||_e is finite.
bool in_principal_ideal(const PLFunction& x, const PLFunction& e);

/// Least n >= 1 with n*x <= y failing. Requires x >= 0, y >= 0, x != 0;
/// throws DegenerateInput otherwise.
BigInt archimedean_witness(const PLFunction& x, const PLFunction& y);

} // namespace plru
