#include "plru/plot.hpp"

#include <algorithm>
#include <fstream>
#include <ostream>

#include <mpfr.h>

#include "plru/decimal.hpp"
#include "plru/error.hpp"

namespace plru {

namespace {

constexpr mpfr_prec_t kLogPrecision = 128;

// lo^(1 - i/(k-1)), correctly rounded to kLogPrecision bits.
Rational log_spaced(const Rational& lo, std::uint64_t i, std::uint64_t last) {
  mpfr_t base, expo, result;
  mpfr_inits2(kLogPrecision, base, expo, result, static_cast<mpfr_ptr>(nullptr));
  mpfr_set_q(base, lo.raw().get_mpq_t(), MPFR_RNDN);
  mpq_class e(static_cast<unsigned long>(last - i), static_cast<unsigned long>(last));
  e.canonicalize();
  mpfr_set_q(expo, e.get_mpq_t(), MPFR_RNDN);
  mpfr_pow(result, base, expo, MPFR_RNDN);
  mpq_class q;
  mpfr_get_q(q.get_mpq_t(), result);
  mpfr_clears(base, expo, result, static_cast<mpfr_ptr>(nullptr));
  return Rational(q);
}

} // namespace

std::vector<Rational> plot_abscissae(const TailFunction& f, const PlotOptions& options) {
  if (options.samples < 2) throw Error(ErrorCode::degenerate_input, "need at least 2 samples");
  if (options.depth == 0) throw Error(ErrorCode::degenerate_input, "depth must be >= 1");

  const Rational lo = f.params().b(options.depth + 1);
  const Rational hi(1);
  const std::uint64_t last = options.samples - 1;

  std::vector<Rational> ts;
  ts.reserve(options.samples + 2 * options.depth * f.anchors().size() + f.head().size());
  for (std::uint64_t i = 0; i <= last; ++i) {
    if (i == 0) {
      ts.push_back(lo);
    } else if (i == last) {
      ts.push_back(hi);
    } else if (options.scale == SampleScale::linear) {
      const Rational frac(BigInt(std::to_string(i)), BigInt(std::to_string(last)));
      ts.push_back(lo + (hi - lo) * frac);
    } else {
      ts.push_back(log_spaced(lo, i, last));
    }
  }
  for (std::uint64_t n = 1; n <= options.depth; ++n) {
    for (auto& node : f.period_nodes(n)) ts.push_back(std::move(node.t));
  }
  for (const auto& node : f.head()) ts.push_back(node.t);

  std::sort(ts.begin(), ts.end());
  ts.erase(std::unique(ts.begin(), ts.end()), ts.end());
  return ts;
}

void emit_plot(const TailFunction& f, const PlotOptions& options, std::ostream& out) {
  out << "t,f,u\n";
  for (const auto& t : plot_abscissae(f, options)) {
    out << to_decimal(t) << ',' << to_decimal(f(t)) << ',' << to_decimal(t) << '\n';
  }
}

void emit_plot(const TailFunction& f, const PlotOptions& options,
               const std::filesystem::path& out) {
  std::ofstream file(out, std::ios::binary | std::ios::trunc);
  if (!file) throw OutputError("cannot open " + out.string() + " for writing");
  emit_plot(f, options, static_cast<std::ostream&>(file));
  file.flush();
  if (!file) throw OutputError("write to " + out.string() + " failed");
}

} // namespace plru
