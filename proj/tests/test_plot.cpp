#include <doctest.h>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "plru/plot.hpp"
#include "plru/decimal.hpp"

using namespace plru;

namespace {

Rational r(long p, long q = 1) { return Rational(p, q); }

std::vector<std::string> lines_of(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream in(s);
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

std::string plot_text(const TailFunction& f, const PlotOptions& o) {
  std::ostringstream os;
  emit_plot(f, o, os);
  return os.str();
}

} // namespace

TEST_CASE("linear plot of one period") {
  const TailFunction f = build_counterexample(TailParams{});
  const auto lines = lines_of(plot_text(f, {5, SampleScale::linear, 1}));
  // Samples 1/4, 7/16, 5/8, 13/16, 1 merged with the period nodes 1/2 and 1.
  const std::vector<std::string> expected = {
      "t,f,u",
      "0.25,0,0.25",
      "0.4375,0.375,0.4375",
      "0.5,0.5,0.5",
      "0.625,0.375,0.625",
      "0.8125,0.1875,0.8125",
      "1,0,1",
  };
  CHECK(lines == expected);
}

TEST_CASE("abscissae cover the range with exact endpoints") {
  const TailFunction f = build_counterexample(TailParams{});
  for (const SampleScale scale : {SampleScale::linear, SampleScale::log}) {
    const auto ts = plot_abscissae(f, {50, scale, 6});
    REQUIRE(ts.size() >= 50);
    CHECK(ts.front() == pow(r(1, 4), 6)); // b_7
    CHECK(ts.back() == r(1));
    for (std::size_t i = 1; i < ts.size(); ++i) CHECK(ts[i - 1] < ts[i]);
    for (std::uint64_t n = 1; n <= 6; ++n)
      for (const Breakpoint& b : f.period_nodes(n))
        CHECK(std::binary_search(ts.begin(), ts.end(), b.t));
  }
}

TEST_CASE("log samples are geometric") {
  const TailFunction f = build_counterexample(TailParams{});
  const auto ts = plot_abscissae(f, {3, SampleScale::log, 2});
  // lo = b_3 = 1/16, mid = 1/4 exactly, hi = 1; plus the nodes 1/8 and 1/2.
  const std::vector<Rational> expected = {r(1, 16), r(1, 8), r(1, 4), r(1, 2), r(1)};
  CHECK(ts == expected);
}

TEST_CASE("plot output is deterministic") {
  const TailFunction f = build_counterexample(TailParams{});
  const PlotOptions o{2000, SampleScale::log, 20};
  const std::string a = plot_text(f, o);
  CHECK(a == plot_text(f, o));
  const auto lines = lines_of(a);
  CHECK(lines.front() == "t,f,u");
  CHECK(lines.size() > 2000);
  CHECK(lines[1] == to_decimal(pow(r(1, 4), 20)) + ",0," + to_decimal(pow(r(1, 4), 20)));
}

TEST_CASE("plot values stay between 0 and u") {
  const TailFunction f = build_counterexample(TailParams{});
  for (const Rational& t : plot_abscissae(f, {200, SampleScale::log, 8})) {
    CHECK(f(t) >= r(0));
    CHECK(f(t) <= t);
  }
}

TEST_CASE("plot to a file") {
  const TailFunction f = build_counterexample(TailParams{});
  const auto path = std::filesystem::temp_directory_path() / "plru_test_plot.csv";
  emit_plot(f, {5, SampleScale::linear, 1}, path);
  std::ifstream in(path);
  std::ostringstream os;
  os << in.rdbuf();
  CHECK(os.str() == plot_text(f, {5, SampleScale::linear, 1}));
  std::filesystem::remove(path);

  CHECK_THROWS_AS(emit_plot(f, {5, SampleScale::linear, 1}, std::filesystem::path("/nonexistent/dir/x.csv")),
                  OutputError);
}
