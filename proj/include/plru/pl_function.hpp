#pragma once

#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "plru/rational.hpp"

namespace plru {

struct Breakpoint {
  Rational t;
  Rational value;

  friend bool operator==(const Breakpoint&, const Breakpoint&) = default;
};

using Point = std::pair<Rational, Rational>;

/// Continuous piecewise-linear function on [0,1] with rational breakpoints.
///
/// Always held in canonical form: breakpoints strictly increasing in t, the
/// first at t = 0 and the last at t = 1, and no interior breakpoint collinear
/// with its neighbours. Two functions are equal iff their breakpoint lists are.
class PLFunction {
public:
  /// The zero function.
  PLFunction();

  const std::vector<Breakpoint>& breakpoints() const noexcept { return nodes_; }

  Rational operator()(const Rational& t) const;

  friend bool operator==(const PLFunction&, const PLFunction&) = default;

private:
  friend PLFunction make_pl(std::vector<Point> points);
  friend PLFunction from_sorted_nodes(std::vector<Breakpoint> nodes);

  explicit PLFunction(std::vector<Breakpoint> nodes) : nodes_(std::move(nodes)) {}

  std::vector<Breakpoint> nodes_;
};

/// Sorts, deduplicates and canonicalizes. Throws MalformedFunction on a
/// repeated t with different values, DomainError on t outside [0,1] or a
/// missing endpoint.
PLFunction make_pl(std::vector<Point> points);

/// Canonicalizes nodes already sorted strictly by t spanning [0,1].
PLFunction from_sorted_nodes(std::vector<Breakpoint> nodes);

/// Throws DomainError for t outside [0,1].
Rational eval(const PLFunction& f, const Rational& t);

PLFunction linear_combine(const Rational& c1, const PLFunction& f, const Rational& c2,
                          const PLFunction& g);
PLFunction scale(const Rational& c, const PLFunction& f);
PLFunction negate(const PLFunction& f);
PLFunction operator+(const PLFunction& f, const PLFunction& g);
PLFunction operator-(const PLFunction& f, const PLFunction& g);

PLFunction join(const PLFunction& f, const PLFunction& g);
PLFunction meet(const PLFunction& f, const PLFunction& g);
PLFunction abs_val(const PLFunction& f);

/// Pointwise f <= g on all of [0,1].
bool leq(const PLFunction& f, const PLFunction& g);

/// Smallest node of the merged grid where f(t) > g(t), if any. Since f - g
/// is linear between merged nodes, no such node means f <= g everywhere.
std::optional<Rational> first_violation(const PLFunction& f, const PLFunction& g);

/// Sorted union of the breakpoint abscissae of both functions.
std::vector<Rational> merged_grid(const PLFunction& f, const PLFunction& g);

namespace builtin {
PLFunction zero();
PLFunction one();
/// u(t) = t.
PLFunction identity();
} // namespace builtin

/// Renders as a DSL literal, e.g. "pl [(0,0),(1/2,1),(1,0)]".
std::string to_string(const PLFunction& f);
std::ostream& operator<<(std::ostream& os, const PLFunction& f);

} // namespace plru
