#include <sstream>

#include "plru/dsl/parser.hpp"

namespace plru::dsl {

namespace {

template <typename... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};

bool is_additive(const Expr& e) {
  return std::holds_alternative<Sum>(e.node) || std::holds_alternative<Diff>(e.node);
}

std::string wrap(const std::string& s) { return "(" + s + ")"; }

// Operand of '*': anything a bare factor cannot express needs parentheses.
std::string factor_source(const Expr& e) {
  if (is_additive(e) || std::holds_alternative<Scale>(e.node)) return wrap(to_source(e));
  return to_source(e);
}

std::string term_source(const Expr& e) {
  return is_additive(e) ? wrap(to_source(e)) : to_source(e);
}

// An argument followed directly by another expression must not start with
// '-', or the sign would be read as a binary minus.
std::string standalone(const Expr& e) {
  std::string s = to_source(e);
  return !s.empty() && s.front() == '-' ? wrap(s) : s;
}

std::string tail_source(const TailSpec& tail) {
  std::string out;
  const TailSpec defaults;
  if (tail.rho != defaults.rho) out += " rho " + tail.rho.str();
  if (tail.alpha != defaults.alpha) out += " alpha " + tail.alpha.str();
  return out;
}

} // namespace

std::string to_source(const Expr& expr) {
  return std::visit(
      overloaded{
          [](const PLLiteral& lit) {
            std::string s = "pl [";
            for (std::size_t i = 0; i < lit.points.size(); ++i) {
              if (i > 0) s += ", ";
              s += "(" + lit.points[i].first.str() + "," + lit.points[i].second.str() + ")";
            }
            return s + "]";
          },
          [](const Var& v) { return v.name; },
          [](const Sum& s) { return to_source(*s.lhs) + " + " + term_source(*s.rhs); },
          [](const Diff& d) { return to_source(*d.lhs) + " - " + term_source(*d.rhs); },
          [](const Scale& s) { return s.factor.str() + "*" + factor_source(*s.operand); },
          [](const Join& j) { return "max(" + to_source(*j.lhs) + ", " + to_source(*j.rhs) + ")"; },
          [](const Meet& m) { return "min(" + to_source(*m.lhs) + ", " + to_source(*m.rhs) + ")"; },
          [](const Abs& a) { return "abs(" + to_source(*a.operand) + ")"; },
          [](const BuiltinU&) { return std::string("u"); },
          [](const BuiltinOne&) { return std::string("one"); },
      },
      expr.node);
}

std::string to_source(const Statement& stmt) {
  return std::visit(
      overloaded{
          [](const Let& l) { return "let " + l.name + " = " + to_source(*l.expr); },
          [](const EvalQuery& q) { return "eval " + to_source(*q.expr) + " at " + q.at.str(); },
          [](const NormQuery& q) {
            return "norm " + to_source(*q.expr) + " wrt " + to_source(*q.wrt);
          },
          [](const LeqQuery& q) { return "leq " + standalone(*q.lhs) + " " + standalone(*q.rhs); },
          [](const InIdealQuery& q) {
            return "in_ideal " + to_source(*q.expr) + " wrt " + to_source(*q.wrt);
          },
          [](const RatioBoundsQuery& q) { return "ratio_bounds" + tail_source(q.tail); },
          [](const VerifyQuery& q) {
            std::string s = "verify" + tail_source(q.tail);
            if (q.depth != VerifyQuery{}.depth) s += " depth " + std::to_string(q.depth);
            return s;
          },
      },
      stmt.node);
}

std::string to_source(const Program& program) {
  std::string out;
  for (const auto& stmt : program) out += to_source(stmt) + "\n";
  return out;
}

} // namespace plru::dsl
