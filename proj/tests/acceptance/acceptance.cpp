// Acceptance runner: one line per criterion, nonzero exit if any fails.

#include <chrono>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "plru/cli.hpp"
#include "plru/counterexample.hpp"
#include "plru/dsl/evaluator.hpp"
#include "plru/dsl/parser.hpp"
#include "plru/error.hpp"
#include "plru/ideal_norm.hpp"
#include "plru/pl_function.hpp"
#include "plru/ru_conv.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

using namespace plru;
using plru::testing::Gen;

namespace {

using Clock = std::chrono::steady_clock;

Rational r(long p, long q = 1) { return Rational(p, q); }

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

// Collects the first failure message; later ones are counted.
class Outcome {
public:
  void require(bool ok, const std::string& what) {
    if (ok) return;
    if (failures_++ == 0) first_ = what;
  }
  void note(std::string detail) { detail_ = std::move(detail); }

  bool passed() const { return failures_ == 0; }
  std::string summary() const {
    if (passed()) return detail_;
    return first_ + (failures_ > 1 ? " (+" + std::to_string(failures_ - 1) + " more)" : "");
  }

private:
  std::size_t failures_ = 0;
  std::string first_;
  std::string detail_;
};

struct CliRun {
  int code;
  std::string out;
  std::string err;
};

CliRun cli(std::vector<std::string> args) {
  args.insert(args.begin(), "plru");
  std::ostringstream out, err;
  const int code = cli::run_command(args, out, err);
  return {code, out.str(), err.str()};
}

// 1. Strict inclusion with the default parameters.
void strict_inclusion(Outcome& o) {
  const auto start = Clock::now();
  const CliRun run = cli({"verify", "--format", "json"});
  const double elapsed = seconds_since(start);
  o.require(run.code == 0, "verify exit code " + std::to_string(run.code));
  o.require(elapsed < 1.0, "verify took " + std::to_string(elapsed) + " s");
  const auto j = nlohmann::json::parse(run.out, nullptr, false);
  o.require(!j.is_discarded(), "verify output is not JSON");
  if (j.is_discarded()) return;
  o.require(j.value("verdict", "") == "verified-strict", "verdict");
  o.require(j.value("ideal_norm", "") == "1", "ideal_norm != 1");
  o.require(j.value("ratio_liminf", "") == "0", "ratio_liminf != 0");
  o.require(j.value("ratio_limsup", "") == "1", "ratio_limsup != 1");
  o.require(j.value("epsilon_star", "") == "1/3", "epsilon_star != 1/3");
  o.require(j.value("depth_checked", 0) == 20, "depth_checked != 20");

  const TailParams p{};
  const TailFunction f = build_counterexample(p);
  for (std::uint64_t n = 1; n <= 20; ++n) {
    o.require(f(p.b(n)) == r(0), "f(b_n) != 0 at n = " + std::to_string(n));
    o.require(f(p.a(n)) == p.a(n), "f(a_n) != a_n at n = " + std::to_string(n));
  }
  const StrictInclusionCert cert = strict_inclusion_certificate(p, 20);
  o.require(cert.sandwiched, "0 <= f_N <= u fails");
  o.require(cert.refutation.epsilon_star == r(1, 3), "certificate epsilon_star");
  // |lambda| <= 1/3 and |lambda - 1| <= 1/3 cannot both hold
  o.require(cert.refutation.lambda_high_bound < cert.refutation.lambda_low_bound,
            "lambda bounds overlap");
  std::ostringstream d;
  d << "exact values reproduced in " << elapsed << " s (limit 1 s)";
  o.note(d.str());
}

// 2. Germ refutation for random slopes and shrinking neighbourhoods.
void refutation_sweep(Outcome& o) {
  const TailFunction f = build_counterexample(TailParams{});
  const Rational eps(1, 3);
  const std::vector<Rational> deltas = {r(1), r(1, 10), r(1, 1000)};
  Gen gen(2024);
  std::size_t calls = 0;
  const auto start = Clock::now();
  for (int i = 0; i < 100; ++i) {
    const Rational lambda = gen.in_range(r(-2), r(2));
    for (const Rational& delta : deltas) {
      const Rational t = germ_refutation(f, lambda, delta, eps);
      ++calls;
      const Rational lhs = (lambda * t - f(t)).abs();
      o.require(t > r(0) && t < delta, "node outside (0, delta) for lambda " + lambda.str());
      o.require(lhs > eps * t, "no strict violation for lambda " + lambda.str());
    }
  }
  const double elapsed = seconds_since(start);
  o.require(elapsed < 1.0, "sweep took " + std::to_string(elapsed) + " s");
  std::ostringstream d;
  d << calls << " refutations verified in " << elapsed << " s (limit 1 s)";
  o.note(d.str());
}

// 3. Truncation residuals shrink uniformly but not relative to u.
void residual_gap(Outcome& o) {
  const TailParams p{};
  const TailFunction f = build_counterexample(p);
  Rational previous(2);
  for (std::uint64_t n = 1; n <= 20; ++n) {
    const std::string tag = " at N = " + std::to_string(n);
    const PLFunction fn = truncate(f, n);
    const ResidualProfile rp = residual_profile(f, n);
    o.require(rp.sup_abs <= p.a(n + 1), "sup residual exceeds a_{N+1}" + tag);
    o.require(rp.sup_abs < previous, "sup residual not decreasing" + tag);
    previous = rp.sup_abs;
    o.require(rp.sup_relative == r(1), "relative residual != 1" + tag);
    const Rational t = rp.sup_relative_node;
    o.require((f(t) - eval(fn, t)) / t == r(1), "relative node does not re-evaluate to 1" + tag);
    // independent scan over three further periods
    for (std::uint64_t k = n + 1; k <= n + 3; ++k)
      for (const Breakpoint& b : f.period_nodes(k)) {
        const Rational res = (f(b.t) - eval(fn, b.t)).abs();
        o.require(res <= p.a(n + 1), "node residual exceeds a_{N+1}" + tag);
        o.require(res <= b.t, "node residual exceeds u" + tag);
      }
    o.require(f(p.a(n + 1)) - eval(fn, p.a(n + 1)) == p.a(n + 1), "residual at a_{N+1}" + tag);
  }
  o.note("N = 1..20: sup <= a_{N+1}, relative ratio exactly 1");
}

// 4. Lattice and Riesz-space identities.
void algebraic_laws(Outcome& o) {
  Gen gen(4);
  const auto start = Clock::now();
  for (int i = 0; i < 1000; ++i) {
    const PLFunction f = gen.pl(8, 1000), g = gen.pl(8, 1000), h = gen.pl(8, 1000);
    const std::string tag = " on triple " + std::to_string(i);
    o.require(join(f, g) == join(g, f), "join commutativity" + tag);
    o.require(meet(f, g) == meet(g, f), "meet commutativity" + tag);
    o.require(join(join(f, g), h) == join(f, join(g, h)), "join associativity" + tag);
    o.require(meet(meet(f, g), h) == meet(f, meet(g, h)), "meet associativity" + tag);
    o.require(join(f, meet(f, g)) == f, "absorption f v (f ^ g)" + tag);
    o.require(meet(f, join(f, g)) == f, "absorption f ^ (f v g)" + tag);
    o.require(f + g == join(f, g) + meet(f, g), "f + g = f v g + f ^ g" + tag);
    o.require(abs_val(f) == join(f, negate(f)), "|f| = f v -f" + tag);
  }
  const double elapsed = seconds_since(start);
  o.require(elapsed < 10.0, "laws took " + std::to_string(elapsed) + " s");
  std::ostringstream d;
  d << "1000 triples, 8 laws each, " << elapsed << " s (limit 10 s)";
  o.note(d.str());
}

Rational norm_u(const PLFunction& x) { return e_norm(x, builtin::identity()).value.value(); }

// 5. The u-norm is a Riesz norm with an attained infimum.
void riesz_norm(Outcome& o) {
  Gen gen(5);
  const PLFunction u = builtin::identity();
  const Rational nudge(1, 1000000);
  for (int i = 0; i < 500; ++i) {
    const std::string tag = " on pair " + std::to_string(i);
    const PLFunction x = gen.coin(0.05) ? builtin::zero() : gen.pl_through_origin(8, 1000);
    const PLFunction y = gen.pl_through_origin(8, 1000);
    const Rational nx = norm_u(x), ny = norm_u(y);

    const PLFunction dominating = join(abs_val(x), abs_val(y));
    o.require(leq(abs_val(x), dominating), "dominating element" + tag);
    o.require(nx <= norm_u(dominating), "monotonicity" + tag);

    const Rational c = gen.value(1000);
    o.require(norm_u(scale(c, x)) == c.abs() * nx, "homogeneity" + tag);
    o.require(norm_u(x + y) <= nx + ny, "triangle inequality" + tag);
    o.require((nx == r(0)) == (x == builtin::zero()), "definiteness" + tag);

    o.require(leq(abs_val(x), scale(nx, u)), "norm does not dominate" + tag);
    o.require(!leq(abs_val(x), scale(nx - nudge, u)), "norm minus 1e-6 still dominates" + tag);
  }
  o.note("500 pairs: monotone, homogeneous, subadditive, definite, attained");
}

// 6. Exact extremes agree with floating-point sampling.
void oracle_equivalence(Outcome& o) {
  Gen gen(6);
  double worst = 0.0;
  const std::size_t samples = 20000;
  for (int i = 0; i < 100; ++i) {
    const std::string tag = " on instance " + std::to_string(i);

    // e_norm against a sampled sup of |x|/e
    const PLFunction e = gen.regulator(6, 100);
    const PLFunction x = eval(e, r(0)) == r(0) ? gen.pl_through_origin(8, 100) : gen.pl(8, 100);
    const Rational exact = e_norm(x, e).value.value();
    auto ratio = [&](double t) {
      return std::abs(testing::eval_double(x, t)) / testing::eval_double(e, t);
    };
    const double lo = eval(e, r(0)) == r(0) ? 1e-12 : 0.0;
    auto best = testing::sampled_max(ratio, lo, 1.0, samples, false);
    const auto best_log = testing::sampled_max(ratio, std::max(lo, 1e-12), 1.0, samples, true);
    if (best_log.value > best.value) best = best_log;
    const double err = testing::relative_error(best.value, exact.to_double());
    worst = std::max(worst, err);
    o.require(err <= 1e-6, "e_norm differs from sampling by " + std::to_string(err) + tag);
    const Rational t(mpq_class(best.t));
    o.require(eval(x, t).abs() <= exact * eval(e, t), "exact norm below sampled ratio" + tag);

    // ratio_bounds against sampling a deep stretch of the tail
    const Rational rho = gen.in_range(r(1, 5), r(3, 4), 20);
    const TailParams p = make_tail_params(rho, (rho + r(1)) / r(2));
    std::vector<Anchor> anchors{{r(1), gen.in_range(r(-2), r(2), 50)}};
    const long extra = gen.integer(0, 3);
    for (long k = 0; k < extra; ++k) {
      const Rational last = anchors.back().offset;
      anchors.push_back({gen.in_range(rho + (last - rho) / r(4), last - (last - rho) / r(4), 50),
                         gen.in_range(r(-2), r(2), 50)});
    }
    const TailFunction f(p, anchors);
    const RatioBounds rb = ratio_bounds(f);
    auto tail_ratio = [&](double t) { return testing::eval_tail_double(f, t) / t; };
    const double deep_lo = p.b(12).to_double(), deep_hi = p.b(9).to_double();
    const auto hi = testing::sampled_max(tail_ratio, deep_lo, deep_hi, samples, true);
    const auto lw = testing::sampled_min(tail_ratio, deep_lo, deep_hi, samples, true);
    const double err_hi = testing::relative_error(hi.value, rb.limsup.to_double());
    const double err_lo = testing::relative_error(lw.value, rb.liminf.to_double());
    worst = std::max({worst, err_hi, err_lo});
    o.require(err_hi <= 1e-6, "limsup differs from sampling" + tag);
    o.require(err_lo <= 1e-6, "liminf differs from sampling" + tag);
    const Rational th(mpq_class(hi.t)), tl(mpq_class(lw.t));
    o.require(f(th) <= rb.limsup * th, "limsup below sampled ratio" + tag);
    o.require(f(tl) >= rb.liminf * tl, "liminf above sampled ratio" + tag);
  }
  std::ostringstream d;
  d << "100 instances, worst relative error " << worst << " (limit 1e-6)";
  o.note(d.str());
}

// 7. Membership in the ideal generated by u is vanishing at 0.
void ideal_characterization(Outcome& o) {
  Gen gen(7);
  std::size_t members = 0;
  for (int i = 0; i < 500; ++i) {
    const PLFunction f = gen.coin() ? gen.pl_through_origin(8, 1000) : gen.pl(8, 1000);
    const bool member = in_principal_ideal(f, builtin::identity());
    members += member;
    o.require(member == (eval(f, r(0)) == r(0)), "membership mismatch on case " + std::to_string(i));
  }
  o.require(members > 100 && members < 400, "generator produced a lopsided sample");
  o.note("500 cases, " + std::to_string(members) + " members");
}

bool self_evidencing(const Violation& v) { return v.lhs > v.rhs; }

std::vector<IndexedTerm> scaled_terms(const PLFunction& g, std::uint64_t count) {
  std::vector<IndexedTerm> terms;
  for (std::uint64_t n = 1; n <= count; ++n)
    terms.push_back({n, scale(Rational(1, static_cast<long>(n)), g)});
  return terms;
}

// Random PL h with |h| <= s * u.
PLFunction within(Gen& gen, const Rational& s) {
  const PLFunction h = gen.pl_through_origin(6, 100);
  if (h == builtin::zero()) return h;
  return scale(s / norm_u(h), h);
}

// 8. Convergence checkers.
void convergence_checkers(Outcome& o) {
  const PLFunction u = builtin::identity(), one = builtin::one(), zero = builtin::zero();
  const EpsRule recip = EpsRule::reciprocal();

  o.require(check_ru_cauchy(RegulatedSequence(scaled_terms(u, 10), recip, u)).pass,
            "cauchy (1/n)u should pass");

  const CheckReport c1 = check_ru_cauchy(RegulatedSequence(scaled_terms(one, 10), recip, u));
  o.require(!c1.pass && c1.failure, "cauchy (1/n)one should fail");
  if (c1.failure) {
    const Violation& v = *c1.failure;
    const Rational fn(1, static_cast<long>(v.n)), fm(1, static_cast<long>(*v.m));
    o.require((fn - fm).abs() > recip(v.n) * v.t && self_evidencing(v),
              "cauchy failure node does not re-evaluate");
    o.require(v.t == r(0), "cauchy failure node not at 0");
  }

  std::vector<IndexedTerm> constant;
  for (std::uint64_t n = 1; n <= 5; ++n) constant.push_back({n, one});
  o.require(check_ru_cauchy(RegulatedSequence(constant, EpsRule::geometric(r(1, 2)), u)).pass,
            "constant sequence should pass");

  o.require(check_ru_limit(RegulatedSequence(scaled_terms(u, 10), recip, u), zero).pass,
            "(1/n)u -> 0 should pass");
  const CheckReport l1 = check_ru_limit(RegulatedSequence(scaled_terms(u, 10), recip, u), u);
  o.require(!l1.pass && l1.failure, "(1/n)u -> u should fail");
  if (l1.failure) {
    const Violation& v = *l1.failure;
    // |1/2 - 1| = 1/2 is an equality at n = 2, so the first strict failure is n = 3
    o.require(v.n == 3, "(1/n)u -> u first failure at n = " + std::to_string(v.n));
    const Rational lhs = (eval(scaled_terms(u, v.n).back().f, v.t) - v.t).abs();
    o.require(lhs > recip(v.n) * v.t && self_evidencing(v), "limit failure node does not re-evaluate");
  }
  o.require(check_ru_limit(RegulatedSequence({{1, one}}, recip, u), one).pass,
            "single term equal to limit should pass");

  std::vector<PLFunction> phis, fs;
  for (long n = 1; n <= 8; ++n) {
    phis.push_back(scale(r(1, n), u));
    fs.push_back(scale(r(1, n), u));
  }
  o.require(verify_closure_chain(phis, fs, zero, recip, u).pass, "chain (1/n)u should pass");
  const CheckReport ch = verify_closure_chain({one}, {zero}, zero, recip, u);
  o.require(!ch.pass && ch.failure && ch.failure->inequality == Inequality::approximant_bound &&
                ch.failure->n == 1 && self_evidencing(*ch.failure) &&
                eval(one, ch.failure->t) > ch.failure->t,
            "chain one/zero should fail at hypothesis 1");

  o.require(!uniqueness_breaker(u, u, u, recip).has_value(), "uniqueness: equal");
  o.require(uniqueness_breaker(zero, u, u, recip) == std::optional<std::uint64_t>(3),
            "uniqueness: zero vs u");
  o.require(uniqueness_breaker(zero, one, u, recip) == std::optional<std::uint64_t>(1),
            "uniqueness: zero vs one");

  Gen gen(8);
  std::size_t hypotheses_held = 0, contradictions = 0;
  for (int i = 0; i < 500; ++i) {
    const long k = gen.integer(1, 6);
    const EpsRule eps = gen.coin() ? recip : EpsRule::geometric(gen.in_range(r(1, 10), r(9, 10), 10));
    const PLFunction limit = gen.pl(6, 100);
    std::vector<PLFunction> ph, f;
    for (long n = 1; n <= k; ++n) {
      // occasionally overshoot so both outcomes are exercised
      const Rational s1 = gen.coin(0.9) ? gen.in_range(r(0), r(1), 20) : r(11, 10);
      const Rational s2 = gen.coin(0.9) ? gen.in_range(r(0), r(1), 20) : r(11, 10);
      const PLFunction fn = limit + within(gen, s1 * eps(static_cast<std::uint64_t>(n)));
      f.push_back(fn);
      ph.push_back(fn + within(gen, s2 * r(1, n)));
    }
    try {
      const CheckReport rep = verify_closure_chain(ph, f, limit, eps, u);
      if (rep.pass) {
        ++hypotheses_held;
        for (long n = 1; n <= k; ++n) {
          const Rational bound = r(1, n) + eps(static_cast<std::uint64_t>(n));
          o.require(leq(abs_val(ph[n - 1] - limit), scale(bound, u)), "conclusion recheck failed");
        }
      } else {
        o.require(rep.failure && self_evidencing(*rep.failure), "chain failure not self-evidencing");
      }
    } catch (const std::logic_error&) {
      ++contradictions;
    }
  }
  o.require(contradictions == 0, std::to_string(contradictions) + " hypotheses-pass/conclusion-fail");
  o.require(hypotheses_held >= 100, "too few instances with both hypotheses holding");
  o.note("examples as expected; 500 chains, " + std::to_string(hypotheses_held) +
         " with hypotheses holding, 0 contradictions");
}

// 9. Program corpus and the CLI parameter check.
void cli_and_parser(Outcome& o) {
  std::size_t files = 0, reports = 0;
  for (const auto& entry : std::filesystem::directory_iterator(PLRU_PROGRAMS_DIR)) {
    if (entry.path().extension() != ".plx") continue;
    ++files;
    const std::string name = entry.path().filename().string();
    std::ifstream in(entry.path());
    std::ostringstream src;
    src << in.rdbuf();
    try {
      const dsl::Program prog = dsl::parse(src.str());
      dsl::Environment env;
      reports += dsl::eval_program(prog, env).size();
      const std::string printed = dsl::to_source(prog);
      o.require(dsl::parse(printed) == prog, name + " does not round-trip");
      o.require(dsl::to_source(dsl::parse(printed)) == printed, name + " printing not stable");
    } catch (const std::exception& e) {
      o.require(false, name + ": " + e.what());
    }
  }
  o.require(files >= 5, "program corpus is missing");

  const CliRun run = cli({"verify", "--rho", "1/2", "--alpha", "1/2"});
  o.require(run.code == 3, "verify 1/2 1/2 exit code " + std::to_string(run.code));
  o.require(run.err.find("b_{n+1} < a_n") != std::string::npos, "violated inequality not named");
  o.note(std::to_string(files) + " programs, " + std::to_string(reports) +
         " reports, round-trip stable; boundary exit 3");
}

} // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void(Outcome&)>>> criteria = {
      {"AC1 strict-inclusion verification", strict_inclusion},
      {"AC2 germ refutation sweep", refutation_sweep},
      {"AC3 uniform vs relative residual", residual_gap},
      {"AC4 lattice law suite", algebraic_laws},
      {"AC5 Riesz norm suite", riesz_norm},
      {"AC6 oracle equivalence", oracle_equivalence},
      {"AC7 ideal characterization", ideal_characterization},
      {"AC8 convergence checkers", convergence_checkers},
      {"AC9 CLI and parser", cli_and_parser},
  };
  int failed = 0;
  for (const auto& [name, check] : criteria) {
    Outcome o;
    try {
      check(o);
    } catch (const std::exception& e) {
      o.require(false, std::string("unexpected exception: ") + e.what());
    }
    std::cout << (o.passed() ? "[PASS] " : "[FAIL] ") << name << ": " << o.summary() << '\n';
    failed += !o.passed();
  }
  std::cout << (criteria.size() - failed) << "/" << criteria.size() << " criteria passed\n";
  return failed == 0 ? 0 : 1;
}
