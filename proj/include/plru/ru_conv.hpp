#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "plru/pl_function.hpp"
#include "plru/rational.hpp"

namespace plru {

/// A sequence of positive, nonincreasing rational tolerances eps_n, n >= 1.
class EpsRule {
public:
  enum class Kind { reciprocal, geometric, explicit_list };

  /// eps_n = 1/n
  static EpsRule reciprocal();
  /// eps_n = q^n with 0 < q < 1.
  static EpsRule geometric(Rational ratio);
  /// eps_n = values[n-1]; values must be positive and nonincreasing.
  static EpsRule explicit_list(std::vector<Rational> values);

  Kind kind() const noexcept { return kind_; }

  /// Throws DegenerateInput for n = 0 or n past the end of an explicit list.
  Rational operator()(std::uint64_t n) const;

  /// Number of available indices; empty for the unbounded rules.
  std::optional<std::uint64_t> length() const;

private:
  EpsRule(Kind kind, Rational ratio, std::vector<Rational> values)
      : kind_(kind), ratio_(std::move(ratio)), values_(std::move(values)) {}

  Kind kind_;
  Rational ratio_;
  std::vector<Rational> values_;
};

struct IndexedTerm {
  std::uint64_t index;
  PLFunction f;
};

/// Finite prefix of a function sequence with a tolerance rule and regulator.
class RegulatedSequence {
public:
  /// Throws DegenerateInput unless indices are positive and strictly
  /// increasing; InvalidRegulator for an inadmissible regulator.
  RegulatedSequence(std::vector<IndexedTerm> terms, EpsRule eps, PLFunction regulator);

  const std::vector<IndexedTerm>& terms() const noexcept { return terms_; }
  const EpsRule& eps() const noexcept { return eps_; }
  const PLFunction& regulator() const noexcept { return regulator_; }

private:
  std::vector<IndexedTerm> terms_;
  EpsRule eps_;
  PLFunction regulator_;
};

enum class Inequality {
  cauchy,             // |f_n - f_m| <= eps_n reg
  limit,              // |f_n - f| <= eps_n reg
  approximant_bound,  // |phi_n - f_n| <= (1/n) reg
  transferred_bound,  // |phi_n - f| <= (1/n + eps_n) reg
};

/// A concrete node where an inequality fails: lhs > rhs at t.
struct Violation {
  Inequality inequality;
  std::uint64_t n;
  std::optional<std::uint64_t> m;
  Rational t;
  Rational lhs;
  Rational rhs;
};

struct CheckReport {
  bool pass = true;
  std::optional<Violation> failure;
};

/// Checks |f_n - f_m| <= eps_n * reg for every supplied pair m >= n.
/// The first failure in (n, m) lexicographic order is reported.
CheckReport check_ru_cauchy(const RegulatedSequence& seq);

/// Checks |f_n - limit| <= eps_n * reg for every supplied n.
CheckReport check_ru_limit(const RegulatedSequence& seq, const PLFunction& limit);

/// Checks, for n = 1..k, |phi_n - f_n| <= (1/n) reg and |f_n - limit| <=
/// eps_n reg, and the transferred bound |phi_n - limit| <= (1/n + eps_n) reg.
/// The transferred bound failing while both hypotheses hold would contradict
/// the triangle inequality and raises std::logic_error.
CheckReport verify_closure_chain(const std::vector<PLFunction>& phis,
                                 const std::vector<PLFunction>& fs, const PLFunction& limit,
                                 const EpsRule& eps, const PLFunction& regulator);

/// Empty when f == g. Otherwise the least n0 with 2*eps_{n0} < ||f - g||_reg,
/// the first index at which "|h - f| <= eps reg" and "|h - g| <= eps reg"
/// cannot both hold. An infinite norm gives 1.
std::optional<std::uint64_t> uniqueness_breaker(const PLFunction& f, const PLFunction& g,
                                                const PLFunction& regulator, const EpsRule& eps);

} // namespace plru
