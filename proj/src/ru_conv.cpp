#include "plru/ru_conv.hpp"

#include <limits>
#include <stdexcept>

#include "plru/error.hpp"
#include "plru/ideal_norm.hpp"

namespace plru {

EpsRule EpsRule::reciprocal() { return EpsRule(Kind::reciprocal, Rational(0), {}); }

EpsRule EpsRule::geometric(Rational ratio) {
  if (ratio.sign() <= 0 || ratio >= Rational(1))
    throw Error(ErrorCode::degenerate_input, "geometric ratio " + ratio.str() + " not in (0,1)");
  return EpsRule(Kind::geometric, std::move(ratio), {});
}

EpsRule EpsRule::explicit_list(std::vector<Rational> values) {
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (values[i].sign() <= 0)
      throw Error(ErrorCode::degenerate_input, "eps_" + std::to_string(i + 1) + " is not positive");
    if (i > 0 && values[i] > values[i - 1])
      throw Error(ErrorCode::degenerate_input, "eps list increases at index " + std::to_string(i + 1));
  }
  return EpsRule(Kind::explicit_list, Rational(0), std::move(values));
}

Rational EpsRule::operator()(std::uint64_t n) const {
  if (n == 0) throw Error(ErrorCode::degenerate_input, "eps index must be >= 1");
  switch (kind_) {
  case Kind::reciprocal:
    return Rational(BigInt(1), BigInt(std::to_string(n)));
  case Kind::geometric:
    return pow(ratio_, n);
  case Kind::explicit_list:
    if (n > values_.size())
      throw Error(ErrorCode::degenerate_input,
                  "eps index " + std::to_string(n) + " beyond explicit list of " +
                      std::to_string(values_.size()));
    return values_[n - 1];
  }
  throw std::logic_error("unknown eps kind");
}

std::optional<std::uint64_t> EpsRule::length() const {
  if (kind_ == Kind::explicit_list) return values_.size();
  return std::nullopt;
}

RegulatedSequence::RegulatedSequence(std::vector<IndexedTerm> terms, EpsRule eps,
                                     PLFunction regulator)
    : terms_(std::move(terms)), eps_(std::move(eps)), regulator_(std::move(regulator)) {
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    if (terms_[i].index == 0) throw Error(ErrorCode::degenerate_input, "term index must be >= 1");
    if (i > 0 && terms_[i].index <= terms_[i - 1].index)
      throw Error(ErrorCode::degenerate_input, "term indices must be strictly increasing");
  }
  require_admissible_regulator(regulator_);
}

namespace {

// |a - b| <= c * reg, with the failing node if any.
std::optional<Violation> bound_violation(Inequality which, std::uint64_t n,
                                         std::optional<std::uint64_t> m, const PLFunction& a,
                                         const PLFunction& b, const Rational& c,
                                         const PLFunction& reg) {
  const PLFunction lhs = abs_val(a - b);
  const PLFunction rhs = scale(c, reg);
  auto t = first_violation(lhs, rhs);
  if (!t) return std::nullopt;
  Rational l = lhs(*t);
  Rational r = rhs(*t);
  return Violation{which, n, m, std::move(*t), std::move(l), std::move(r)};
}

CheckReport fail(Violation v) { return CheckReport{false, std::move(v)}; }

Rational reciprocal_of(std::uint64_t n) { return Rational(BigInt(1), BigInt(std::to_string(n))); }

} // namespace

CheckReport check_ru_cauchy(const RegulatedSequence& seq) {
  const auto& terms = seq.terms();
  if (terms.size() < 2) throw Error(ErrorCode::degenerate_input, "Cauchy check needs two terms");
  for (std::size_t i = 0; i < terms.size(); ++i) {
    const Rational eps = seq.eps()(terms[i].index);
    for (std::size_t j = i + 1; j < terms.size(); ++j) {
      if (auto v = bound_violation(Inequality::cauchy, terms[i].index, terms[j].index, terms[i].f,
                                   terms[j].f, eps, seq.regulator()))
        return fail(std::move(*v));
    }
  }
  return {};
}

CheckReport check_ru_limit(const RegulatedSequence& seq, const PLFunction& limit) {
  if (seq.terms().empty()) throw Error(ErrorCode::degenerate_input, "limit check needs a term");
  for (const auto& term : seq.terms()) {
    if (auto v = bound_violation(Inequality::limit, term.index, std::nullopt, term.f, limit,
                                 seq.eps()(term.index), seq.regulator()))
      return fail(std::move(*v));
  }
  return {};
}

CheckReport verify_closure_chain(const std::vector<PLFunction>& phis,
                                 const std::vector<PLFunction>& fs, const PLFunction& limit,
                                 const EpsRule& eps, const PLFunction& regulator) {
  if (phis.empty() || phis.size() != fs.size())
    throw Error(ErrorCode::degenerate_input,
                "approximant and sequence lists must be non-empty and aligned (got " +
                    std::to_string(phis.size()) + " and " + std::to_string(fs.size()) + ")");
  require_admissible_regulator(regulator);

  std::optional<Violation> first;
  for (std::size_t i = 0; i < phis.size(); ++i) {
    const std::uint64_t n = i + 1;
    const Rational inv_n = reciprocal_of(n);
    const Rational eps_n = eps(n);

    auto hyp_phi = bound_violation(Inequality::approximant_bound, n, std::nullopt, phis[i], fs[i],
                                   inv_n, regulator);
    auto hyp_lim =
        bound_violation(Inequality::limit, n, std::nullopt, fs[i], limit, eps_n, regulator);
    auto concl = bound_violation(Inequality::transferred_bound, n, std::nullopt, phis[i], limit,
                                 inv_n + eps_n, regulator);

    if (!hyp_phi && !hyp_lim && concl)
      throw std::logic_error("triangle inequality violated at n = " + std::to_string(n) +
                             ", t = " + concl->t.str());
    if (!first) {
      if (hyp_phi) first = std::move(hyp_phi);
      else if (hyp_lim) first = std::move(hyp_lim);
      else if (concl) first = std::move(concl);
    }
  }
  if (first) return fail(std::move(*first));
  return {};
}

std::optional<std::uint64_t> uniqueness_breaker(const PLFunction& f, const PLFunction& g,
                                                const PLFunction& regulator, const EpsRule& eps) {
  require_admissible_regulator(regulator);
  if (f == g) return std::nullopt;
  const NormValue norm = e_norm(f - g, regulator).value;
  if (!norm.is_finite()) return 1;
  const Rational& gap = norm.value();

  if (eps.kind() == EpsRule::Kind::reciprocal) {
    const BigInt n0 = (Rational(2) / gap).floor() + 1;
    if (!n0.fits_ulong_p()) throw Error(ErrorCode::degenerate_input, "separating index too large");
    return static_cast<std::uint64_t>(n0.get_ui());
  }

  const auto limit = eps.length().value_or(std::numeric_limits<std::uint64_t>::max());
  for (std::uint64_t n = 1; n <= limit; ++n) {
    if (Rational(2) * eps(n) < gap) return n;
  }
  throw Error(ErrorCode::degenerate_input,
              "no supplied eps index separates the two candidate limits");
}

} // namespace plru
