#include "plru/pl_function.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

#include "plru/error.hpp"

namespace plru {

namespace {

bool collinear(const Breakpoint& a, const Breakpoint& b, const Breakpoint& c) {
  return (b.value - a.value) * (c.t - a.t) == (c.value - a.value) * (b.t - a.t);
}

Rational interpolate(const Breakpoint& a, const Breakpoint& b, const Rational& t) {
  if (t == a.t) return a.value;
  if (t == b.t) return b.value;
  return a.value + (b.value - a.value) * (t - a.t) / (b.t - a.t);
}

// Nodes of f - g where the sign of f - g changes strictly between merged
// nodes are added so that max/min are linear on every resulting segment.
template <typename Pick>
PLFunction envelope(const PLFunction& f, const PLFunction& g, Pick pick) {
  const auto grid = merged_grid(f, g);
  std::vector<Breakpoint> nodes;
  nodes.reserve(grid.size() * 2);

  Rational prev_t, prev_f, prev_g;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const Rational& t = grid[i];
    Rational ft = f(t);
    Rational gt = g(t);
    if (i > 0) {
      const Rational d0 = prev_f - prev_g;
      const Rational d1 = ft - gt;
      if (d0.sign() * d1.sign() < 0) {
        const Rational cross = prev_t + d0 * (t - prev_t) / (d0 - d1);
        nodes.push_back({cross, f(cross)});
      }
    }
    nodes.push_back({t, pick(ft, gt)});
    prev_t = t;
    prev_f = std::move(ft);
    prev_g = std::move(gt);
  }
  return from_sorted_nodes(std::move(nodes));
}

} // namespace

PLFunction::PLFunction() : nodes_{{Rational(0), Rational(0)}, {Rational(1), Rational(0)}} {}

Rational PLFunction::operator()(const Rational& t) const {
  if (t < Rational(0) || t > Rational(1))
    throw Error(ErrorCode::domain_error, "evaluation point " + t.str() + " outside [0,1]");
  auto it = std::lower_bound(nodes_.begin(), nodes_.end(), t,
                             [](const Breakpoint& b, const Rational& x) { return b.t < x; });
  if (it->t == t) return it->value;
  return interpolate(*(it - 1), *it, t);
}

PLFunction from_sorted_nodes(std::vector<Breakpoint> nodes) {
  std::vector<Breakpoint> out;
  out.reserve(nodes.size());
  for (auto& node : nodes) {
    while (out.size() >= 2 && collinear(out[out.size() - 2], out.back(), node)) out.pop_back();
    out.push_back(std::move(node));
  }
  return PLFunction(std::move(out));
}

PLFunction make_pl(std::vector<Point> points) {
  for (const auto& [t, v] : points) {
    if (t < Rational(0) || t > Rational(1))
      throw Error(ErrorCode::domain_error, "breakpoint t = " + t.str() + " outside [0,1]");
  }
  std::sort(points.begin(), points.end(),
            [](const Point& a, const Point& b) { return a.first < b.first; });

  std::vector<Breakpoint> nodes;
  nodes.reserve(points.size());
  for (auto& [t, v] : points) {
    if (!nodes.empty() && nodes.back().t == t) {
      if (nodes.back().value != v)
        throw Error(ErrorCode::malformed_function,
                    "conflicting values " + nodes.back().value.str() + " and " + v.str() +
                        " at t = " + t.str());
      continue;
    }
    nodes.push_back({std::move(t), std::move(v)});
  }
  if (nodes.empty() || nodes.front().t != Rational(0))
    throw Error(ErrorCode::domain_error, "missing breakpoint at t = 0");
  if (nodes.back().t != Rational(1))
    throw Error(ErrorCode::domain_error, "missing breakpoint at t = 1");
  return from_sorted_nodes(std::move(nodes));
}

Rational eval(const PLFunction& f, const Rational& t) { return f(t); }

std::vector<Rational> merged_grid(const PLFunction& f, const PLFunction& g) {
  std::vector<Rational> grid;
  grid.reserve(f.breakpoints().size() + g.breakpoints().size());
  auto a = f.breakpoints().begin();
  auto b = g.breakpoints().begin();
  const auto a_end = f.breakpoints().end();
  const auto b_end = g.breakpoints().end();
  while (a != a_end || b != b_end) {
    if (b == b_end || (a != a_end && a->t < b->t)) {
      grid.push_back((a++)->t);
    } else if (a == a_end || b->t < a->t) {
      grid.push_back((b++)->t);
    } else {
      grid.push_back(a->t);
      ++a;
      ++b;
    }
  }
  return grid;
}

PLFunction linear_combine(const Rational& c1, const PLFunction& f, const Rational& c2,
                          const PLFunction& g) {
  std::vector<Breakpoint> nodes;
  for (auto& t : merged_grid(f, g)) {
    Rational v = c1 * f(t) + c2 * g(t);
    nodes.push_back({std::move(t), std::move(v)});
  }
  return from_sorted_nodes(std::move(nodes));
}

PLFunction scale(const Rational& c, const PLFunction& f) {
  std::vector<Breakpoint> nodes;
  nodes.reserve(f.breakpoints().size());
  for (const auto& b : f.breakpoints()) nodes.push_back({b.t, c * b.value});
  return from_sorted_nodes(std::move(nodes));
}

PLFunction negate(const PLFunction& f) { return scale(Rational(-1), f); }

PLFunction operator+(const PLFunction& f, const PLFunction& g) {
  return linear_combine(Rational(1), f, Rational(1), g);
}

PLFunction operator-(const PLFunction& f, const PLFunction& g) {
  return linear_combine(Rational(1), f, Rational(-1), g);
}

PLFunction join(const PLFunction& f, const PLFunction& g) {
  return envelope(f, g, [](const Rational& a, const Rational& b) { return max(a, b); });
}

PLFunction meet(const PLFunction& f, const PLFunction& g) {
  return envelope(f, g, [](const Rational& a, const Rational& b) { return min(a, b); });
}

PLFunction abs_val(const PLFunction& f) { return join(f, negate(f)); }

std::optional<Rational> first_violation(const PLFunction& f, const PLFunction& g) {
  for (auto& t : merged_grid(f, g)) {
    if (f(t) > g(t)) return std::move(t);
  }
  return std::nullopt;
}

bool leq(const PLFunction& f, const PLFunction& g) { return !first_violation(f, g).has_value(); }

namespace builtin {

PLFunction zero() { return PLFunction(); }

PLFunction one() { return make_pl({{Rational(0), Rational(1)}, {Rational(1), Rational(1)}}); }

PLFunction identity() {
  return make_pl({{Rational(0), Rational(0)}, {Rational(1), Rational(1)}});
}

} // namespace builtin

std::string to_string(const PLFunction& f) {
  std::ostringstream os;
  os << "pl [";
  bool first = true;
  for (const auto& b : f.breakpoints()) {
    if (!first) os << ",";
    first = false;
    os << "(" << b.t << "," << b.value << ")";
  }
  os << "]";
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const PLFunction& f) { return os << to_string(f); }

} // namespace plru
