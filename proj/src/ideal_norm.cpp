#include "plru/ideal_norm.hpp"

#include <stdexcept>

#include "plru/error.hpp"

namespace plru {

NormValue NormValue::finite(Rational value) {
  if (value.sign() < 0) throw std::logic_error("negative norm value");
  NormValue v;
  v.value_ = std::move(value);
  return v;
}

const Rational& NormValue::value() const {
  if (!value_) throw std::logic_error("infinite norm has no rational value");
  return *value_;
}

std::strong_ordering operator<=>(const NormValue& a, const NormValue& b) {
  if (a.is_finite() && b.is_finite()) return a.value() <=> b.value();
  if (a.is_finite() == b.is_finite()) return std::strong_ordering::equal;
  return a.is_finite() ? std::strong_ordering::less : std::strong_ordering::greater;
}

void require_admissible_regulator(const PLFunction& e) {
  for (const auto& b : e.breakpoints()) {
    if (b.value.sign() < 0)
      throw Error(ErrorCode::invalid_regulator,
                  "regulator is negative at t = " + b.t.str());
    if (b.value.is_zero() && !b.t.is_zero())
      throw Error(ErrorCode::invalid_regulator,
                  "regulator vanishes at t = " + b.t.str() + " in (0,1]");
  }
}

NormCertificate e_norm(const PLFunction& x, const PLFunction& e) {
  require_admissible_regulator(e);
  const PLFunction ax = abs_val(x);
  const auto grid = merged_grid(ax, e);

  const Rational e0 = e(Rational(0));
  const Rational x0 = ax(Rational(0));

  Rational best;
  NormWitness witness;
  if (e0.sign() > 0) {
    best = x0 / e0;
    witness = {NormWitness::Kind::node, Rational(0)};
  } else if (!x0.is_zero()) {
    return {NormValue::infinite(), {NormWitness::Kind::node, Rational(0)}};
  } else {
    // Both vanish at 0 and are linear up to the next node, so the ratio on
    // (0, grid[1]] is the constant slope ratio.
    best = ax(grid[1]) / e(grid[1]);
    witness = {NormWitness::Kind::slope_at_zero, Rational(0)};
  }

  for (std::size_t i = 1; i < grid.size(); ++i) {
    Rational r = ax(grid[i]) / e(grid[i]);
    if (r > best) {
      best = std::move(r);
      witness = {NormWitness::Kind::node, grid[i]};
    }
  }
  return {NormValue::finite(std::move(best)), std::move(witness)};
}

bool in_principal_ideal(const PLFunction& x, const PLFunction& e) {
  return e_norm(x, e).value.is_finite();
}

BigInt archimedean_witness(const PLFunction& x, const PLFunction& y) {
  const PLFunction zero = builtin::zero();
  if (x == zero) throw Error(ErrorCode::degenerate_input, "x is identically zero");
  if (!leq(zero, x)) throw Error(ErrorCode::degenerate_input, "x is not positive");
  if (!leq(zero, y)) throw Error(ErrorCode::degenerate_input, "y is not positive");

  // Where x vanishes at a segment end the ratio y/x either blows up or is
  // constant on that segment, so the infimum over {x > 0} sits at a node.
  std::optional<Rational> least;
  for (const auto& t : merged_grid(x, y)) {
    const Rational xt = x(t);
    if (xt.sign() <= 0) continue;
    Rational r = y(t) / xt;
    if (!least || r < *least) least = std::move(r);
  }
  return least->floor() + 1;
}

} // namespace plru
