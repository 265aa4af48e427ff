#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <stdexcept>
#include <vector>

#include "plru/counterexample.hpp"

namespace plru {

enum class SampleScale { linear, log };

struct PlotOptions {
  std::uint64_t samples = 2000;
  SampleScale scale = SampleScale::log;
  std::uint64_t depth = 20;
};

class OutputError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Abscissae of the plot: `samples` points spread over [b_{depth+1}, 1]
/// (log-spaced points are correctly rounded and then taken exactly), merged
/// with every breakpoint of f in that range so the polyline is exact.
std::vector<Rational> plot_abscissae(const TailFunction& f, const PlotOptions& options);

/// Writes "t,f,u" rows with 20-significant-digit decimals. Deterministic.
void emit_plot(const TailFunction& f, const PlotOptions& options, std::ostream& out);

/// Throws OutputError when the file cannot be written.
void emit_plot(const TailFunction& f, const PlotOptions& options, const std::filesystem::path& out);

} // namespace plru
