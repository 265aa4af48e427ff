#include "plru/counterexample.hpp"

#include <stdexcept>

#include "plru/error.hpp"
#include "plru/ideal_norm.hpp"

namespace plru {

Rational TailParams::b(std::uint64_t n) const {
  if (n == 0) throw Error(ErrorCode::degenerate_input, "period index must be >= 1");
  return b1 * pow(rho, n - 1);
}

TailParams make_tail_params(const Rational& rho, const Rational& alpha, const Rational& b1) {
  auto violated = [](const std::string& what) {
    return Error(ErrorCode::condition_i_violated, "condition (i) violated: " + what);
  };
  if (rho.sign() <= 0)
    throw violated("0 < a_{n+1} requires rho > 0 (rho = " + rho.str() + ")");
  if (alpha >= Rational(1))
    throw violated("a_n < b_n requires alpha < 1 (alpha = " + alpha.str() + ")");
  if (rho >= alpha)
    throw violated("b_{n+1} < a_n requires rho < alpha (rho = " + rho.str() +
                   ", alpha = " + alpha.str() + ")");
  if (b1.sign() <= 0 || b1 > Rational(1))
    throw violated("0 < b_1 <= 1 required (b_1 = " + b1.str() + ")");
  return TailParams{rho, alpha, b1};
}

TailFunction::TailFunction(TailParams params, std::vector<Anchor> anchors,
                           std::vector<Breakpoint> head)
    : params_(std::move(params)), anchors_(std::move(anchors)), head_(std::move(head)) {
  params_ = make_tail_params(params_.rho, params_.alpha, params_.b1);
  if (anchors_.empty() || anchors_.front().offset != Rational(1))
    throw Error(ErrorCode::malformed_function, "anchors must start at offset 1");
  for (std::size_t i = 1; i < anchors_.size(); ++i) {
    if (anchors_[i].offset >= anchors_[i - 1].offset)
      throw Error(ErrorCode::malformed_function, "anchor offsets must strictly decrease");
    if (anchors_[i].offset <= params_.rho)
      throw Error(ErrorCode::malformed_function,
                  "anchor offset " + anchors_[i].offset.str() + " not in (rho, 1]");
  }

  const Rational& b1 = params_.b1;
  if (b1 == Rational(1)) {
    if (!head_.empty()) throw Error(ErrorCode::malformed_function, "head given but b1 = 1");
    return;
  }
  if (head_.size() < 2 || head_.front().t != b1 || head_.back().t != Rational(1))
    throw Error(ErrorCode::malformed_function, "head must span [b1, 1]");
  if (head_.front().value != anchors_.front().ratio * b1)
    throw Error(ErrorCode::malformed_function, "head is discontinuous at b1");
  for (std::size_t i = 1; i < head_.size(); ++i) {
    if (head_[i].t <= head_[i - 1].t)
      throw Error(ErrorCode::malformed_function, "head abscissae must strictly increase");
  }
}

Rational TailFunction::operator()(const Rational& t) const {
  if (t.sign() < 0 || t > Rational(1))
    throw Error(ErrorCode::domain_error, "evaluation point " + t.str() + " outside [0,1]");
  if (t.is_zero()) return Rational(0);

  const Rational& rho = params_.rho;
  Rational b = params_.b1;
  if (t >= b) {
    if (head_.empty()) return anchors_.front().ratio * t;
    for (std::size_t i = 1; i < head_.size(); ++i) {
      if (t <= head_[i].t) {
        const auto& lo = head_[i - 1];
        const auto& hi = head_[i];
        return lo.value + (hi.value - lo.value) * (t - lo.t) / (hi.t - lo.t);
      }
    }
  }

  while (t <= rho * b) b *= rho;
  // Normalized position s in (rho, 1]; the pattern on that interval is
  // anchors followed by the next period's first node at offset rho.
  const Rational s = t / b;
  for (std::size_t i = 0; i < anchors_.size(); ++i) {
    const Rational& hi_off = anchors_[i].offset;
    const Rational hi_val = anchors_[i].ratio * hi_off;
    const bool last = i + 1 == anchors_.size();
    const Rational& lo_off = last ? rho : anchors_[i + 1].offset;
    const Rational lo_val = (last ? anchors_.front().ratio : anchors_[i + 1].ratio) * lo_off;
    if (s >= lo_off) {
      const Rational g = lo_val + (hi_val - lo_val) * (s - lo_off) / (hi_off - lo_off);
      return g * b;
    }
  }
  throw std::logic_error("tail evaluation fell outside its period");
}

std::vector<Breakpoint> TailFunction::period_nodes(std::uint64_t n) const {
  const Rational b = params_.b(n);
  std::vector<Breakpoint> nodes;
  nodes.reserve(anchors_.size());
  for (auto it = anchors_.rbegin(); it != anchors_.rend(); ++it) {
    const Rational t = it->offset * b;
    nodes.push_back({t, it->ratio * t});
  }
  return nodes;
}

TailFunction build_counterexample(const TailParams& params) {
  return TailFunction(params, {{Rational(1), Rational(0)}, {params.alpha, Rational(1)}},
                      params.b1 == Rational(1)
                          ? std::vector<Breakpoint>{}
                          : std::vector<Breakpoint>{{params.b1, Rational(0)}, {Rational(1), Rational(0)}});
}

PLFunction truncate(const TailFunction& f, std::uint64_t periods) {
  if (periods == 0) throw Error(ErrorCode::degenerate_input, "truncation depth must be >= 1");
  const Rational cut = f.params().b(periods + 1);
  std::vector<Point> points;
  points.emplace_back(Rational(0), Rational(0));
  points.emplace_back(cut, f.anchors().front().ratio * cut);
  for (std::uint64_t n = periods; n >= 1; --n) {
    for (auto& node : f.period_nodes(n)) points.emplace_back(std::move(node.t), std::move(node.value));
  }
  for (const auto& node : f.head()) points.emplace_back(node.t, node.value);
  return make_pl(std::move(points));
}

RatioBounds ratio_bounds(const TailFunction& f) {
  const auto& anchors = f.anchors();
  RatioBounds rb{anchors[0].ratio, anchors[0].ratio, 0, 0};
  for (std::size_t i = 1; i < anchors.size(); ++i) {
    if (anchors[i].ratio < rb.liminf) {
      rb.liminf = anchors[i].ratio;
      rb.argmin = i;
    }
    if (anchors[i].ratio > rb.limsup) {
      rb.limsup = anchors[i].ratio;
      rb.argmax = i;
    }
  }
  return rb;
}

Rational tail_u_norm(const TailFunction& f) {
  Rational best(0);
  for (const auto& a : f.anchors()) best = max(best, a.ratio.abs());
  for (const auto& node : f.head()) best = max(best, node.value.abs() / node.t);
  return best;
}

namespace {

RefutationCert make_refutation(const TailFunction& f, const RatioBounds& rb) {
  const Rational eps = rb.gap() / Rational(3);
  const Rational& b1 = f.params().b1;
  return RefutationCert{rb.limsup - eps, rb.liminf + eps, eps,
                        f.anchors()[rb.argmin].offset * b1, f.anchors()[rb.argmax].offset * b1};
}

} // namespace

HMembership h_membership(const TailFunction& f) {
  const RatioBounds rb = ratio_bounds(f);
  if (rb.liminf == rb.limsup) return {true, std::nullopt};
  return {false, make_refutation(f, rb)};
}

Rational germ_refutation(const TailFunction& f, const Rational& lambda, const Rational& delta,
                         const Rational& epsilon) {
  if (delta.sign() <= 0) throw Error(ErrorCode::domain_error, "delta must be positive");
  const RatioBounds rb = ratio_bounds(f);
  if (Rational(2) * epsilon >= rb.gap())
    throw Error(ErrorCode::refutation_not_guaranteed,
                "epsilon " + epsilon.str() + " is not below half the ratio gap " + rb.gap().str());

  // lambda lies within epsilon of at most one extreme ratio; use the other.
  const std::size_t pick = (lambda - rb.limsup).abs() > epsilon ? rb.argmax : rb.argmin;
  const Rational& offset = f.anchors()[pick].offset;
  Rational t = offset * f.params().b1;
  while (t >= delta) t *= f.params().rho;

  if (!((lambda * t - f(t)).abs() > epsilon * t))
    throw std::logic_error("refutation node " + t.str() + " does not violate the bound");
  return t;
}

StrictInclusionCert strict_inclusion_certificate(const TailFunction& f, std::uint64_t depth) {
  if (depth == 0) throw Error(ErrorCode::degenerate_input, "depth must be >= 1");
  const HMembership membership = h_membership(f);
  if (membership.member)
    throw Error(ErrorCode::strict_inclusion_not_witnessed,
                "node ratio is constant; f is approximable by germs of the principal ideal");

  const RatioBounds rb = ratio_bounds(f);
  StrictInclusionCert cert{tail_u_norm(f), rb.liminf, rb.limsup, *membership.refutation, depth, true};

  const PLFunction u = builtin::identity();
  const PLFunction zero = builtin::zero();
  const PLFunction bound = scale(cert.ideal_norm, u);
  for (std::uint64_t n = 1; n <= depth; ++n) {
    const PLFunction fn = truncate(f, n);
    if (!leq(abs_val(fn), bound))
      throw std::logic_error("truncation " + std::to_string(n) + " exceeds ideal_norm * u");
    const NormValue norm = e_norm(fn, u).value;
    if (!norm.is_finite() || norm.value() != cert.ideal_norm)
      throw std::logic_error("truncation " + std::to_string(n) + " has a different u-norm");
    cert.sandwiched = cert.sandwiched && leq(zero, fn) && leq(fn, u);
  }
  return cert;
}

StrictInclusionCert strict_inclusion_certificate(const TailParams& params, std::uint64_t depth) {
  return strict_inclusion_certificate(build_counterexample(params), depth);
}

ResidualProfile residual_profile(const TailFunction& f, std::uint64_t periods) {
  const PLFunction fn = truncate(f, periods);
  ResidualProfile p{Rational(0), Rational(0), Rational(0), Rational(0)};
  bool first = true;
  for (const auto& node : f.period_nodes(periods + 1)) {
    const Rational r = (node.value - fn(node.t)).abs();
    const Rational rel = r / node.t;
    if (first || r > p.sup_abs) {
      p.sup_abs = r;
      p.sup_abs_node = node.t;
    }
    if (first || rel > p.sup_relative) {
      p.sup_relative = rel;
      p.sup_relative_node = node.t;
    }
    first = false;
  }
  return p;
}

HWitness h_witness(const TailFunction& f, std::uint64_t n) {
  if (n == 0) throw Error(ErrorCode::degenerate_input, "witness index must be >= 1");
  const RatioBounds rb = ratio_bounds(f);
  if (rb.gap().sign() != 0)
    throw Error(ErrorCode::not_in_h, "node ratios range over [" + rb.liminf.str() + ", " +
                                         rb.limsup.str() + "]; f is not in H");

  // A constant node ratio lambda0 makes f exactly lambda0 * t on [0, b1].
  const Rational& b1 = f.params().b1;
  const Rational& lambda0 = rb.liminf;
  std::vector<Point> exact{{Rational(0), Rational(0)}, {b1, lambda0 * b1}};
  for (const auto& node : f.head()) exact.emplace_back(node.t, node.value);
  const PLFunction f_pl = make_pl(std::move(exact));

  PLFunction phi = truncate(f, 1);
  const PLFunction u = builtin::identity();
  const Rational bound = e_norm(phi - f_pl, u).value.value();
  Rational eps = min(Rational(BigInt(1), BigInt(std::to_string(n))), bound);
  if (!leq(abs_val(phi - f_pl), scale(eps, u)))
    throw std::logic_error("h_witness approximant misses its bound");
  return {std::move(phi), std::move(eps)};
}

} // namespace plru
