#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "plru/pl_function.hpp"
#include "plru/rational.hpp"

namespace plru {

/// Geometric breakpoint sequences b_n = b1 * rho^(n-1), a_n = alpha * b_n.
///
/// 0 < rho < alpha < 1 and 0 < b1 <= 1 is exactly the ordering
/// 0 < a_{n+1} < b_{n+1} < a_n < b_n; both sequences tend to 0 since rho < 1.
struct TailParams {
  Rational rho{1, 4};
  Rational alpha{1, 2};
  Rational b1{1};

  Rational b(std::uint64_t n) const;
  Rational a(std::uint64_t n) const { return alpha * b(n); }
};

/// Throws ConditionIViolated naming the first failing inequality.
TailParams make_tail_params(const Rational& rho, const Rational& alpha,
                            const Rational& b1 = Rational(1));

/// Node offset within a period and the ratio f(t)/t at that node.
struct Anchor {
  Rational offset;
  Rational ratio;
};

/// Continuous function on [0,1] whose breakpoints accumulate at 0.
///
/// In period n (t in (rho*b_n, b_n]) the nodes sit at offset_i * b_n with value
/// ratio_i * offset_i * b_n, and the function interpolates linearly between
/// consecutive nodes, including across period boundaries. On [b1, 1] it follows
/// an explicit head. f(0) = 0. The pattern is degree-1 homogeneous:
/// f(rho * t) = rho * f(t) for t in (0, b1].
class TailFunction {
public:
  /// Anchors must start at offset 1, be strictly decreasing and stay in
  /// (rho, 1]. The head is required iff b1 < 1; it runs from
  /// (b1, ratio_0 * b1) to t = 1. Throws MalformedFunction otherwise.
  TailFunction(TailParams params, std::vector<Anchor> anchors, std::vector<Breakpoint> head = {});

  const TailParams& params() const noexcept { return params_; }
  const std::vector<Anchor>& anchors() const noexcept { return anchors_; }
  const std::vector<Breakpoint>& head() const noexcept { return head_; }

  Rational operator()(const Rational& t) const;

  /// Nodes of period n in increasing t, excluding the next period's start.
  std::vector<Breakpoint> period_nodes(std::uint64_t n) const;

private:
  TailParams params_;
  std::vector<Anchor> anchors_;
  std::vector<Breakpoint> head_;
};

/// f(b_n) = 0, f(a_n) = a_n, linear in between, f(0) = 0.
TailFunction build_counterexample(const TailParams& params);

/// Member of E agreeing with f on [b_{N+1}, 1], joined to the origin by the
/// chord through (b_{N+1}, f(b_{N+1})). For build_counterexample's f that chord is 0.
PLFunction truncate(const TailFunction& f, std::uint64_t periods);

struct RatioBounds {
  Rational liminf;
  Rational limsup;
  std::size_t argmin = 0; // anchor index attaining liminf
  std::size_t argmax = 0; // anchor index attaining limsup

  Rational gap() const { return limsup - liminf; }
};

/// liminf and limsup of f(t)/t as t -> 0+. Between nodes f(t)/t is monotone and
/// node ratios repeat every period, so these are the extreme anchor ratios.
RatioBounds ratio_bounds(const TailFunction& f);

/// ||f||_u = sup |f(t)|/t over (0,1], attained at a node of period 1 or the head.
Rational tail_u_norm(const TailFunction& f);

/// Evidence that no germ lambda*t approximates f within eps*t near 0.
///
/// Nodes with ratio liminf force lambda <= liminf + eps (lambda_high_bound);
/// nodes with ratio limsup force lambda >= limsup - eps (lambda_low_bound).
/// For eps <= epsilon_star = gap/3 the bounds cross.
struct RefutationCert {
  Rational lambda_low_bound;
  Rational lambda_high_bound;
  Rational epsilon_star;
  Rational node_low;
  Rational node_high;
};

struct HMembership {
  bool member = false;
  std::optional<RefutationCert> refutation;
};

/// Within the representable class, f is an r.u. limit of members of the
/// principal ideal of u iff its node ratios are constant.
HMembership h_membership(const TailFunction& f);

/// A node t < delta where |lambda t - f(t)| > epsilon t. Throws
/// RefutationNotGuaranteed when epsilon >= gap/2, DomainError for delta <= 0.
Rational germ_refutation(const TailFunction& f, const Rational& lambda, const Rational& delta,
                         const Rational& epsilon);

struct StrictInclusionCert {
  Rational ideal_norm;
  Rational ratio_liminf;
  Rational ratio_limsup;
  RefutationCert refutation;
  std::uint64_t depth_checked = 0;
  /// 0 <= truncate(f, N) <= u for every checked N.
  bool sandwiched = false;
};

/// Throws StrictInclusionNotWitnessed when f has constant node ratio.
/// Internal inconsistencies in the depth checks raise std::logic_error.
StrictInclusionCert strict_inclusion_certificate(const TailFunction& f, std::uint64_t depth);
StrictInclusionCert strict_inclusion_certificate(const TailParams& params, std::uint64_t depth);

/// Sup of |f - truncate(f, N)| and of |f - truncate(f, N)|/t, with the nodes
/// attaining them. Both are attained in period N+1; by homogeneity the
/// relative value recurs at the matching node of every later period.
struct ResidualProfile {
  Rational sup_abs;
  Rational sup_abs_node;
  Rational sup_relative;
  Rational sup_relative_node;
};

ResidualProfile residual_profile(const TailFunction& f, std::uint64_t periods);

struct HWitness {
  PLFunction phi;
  Rational eps;
};

/// For a constant-ratio tail, an element of the principal ideal of u within
/// eps*u of f, eps <= 1/n. Throws NotInH when the ratio gap is positive.
HWitness h_witness(const TailFunction& f, std::uint64_t n);

} // namespace plru
