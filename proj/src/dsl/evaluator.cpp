#include "plru/dsl/evaluator.hpp"

#include "plru/counterexample.hpp"
#include "plru/error.hpp"
#include "plru/ideal_norm.hpp"

namespace plru::dsl {

namespace {

template <typename... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};

std::string where(const SourcePos& pos) {
  return std::to_string(pos.line) + ":" + std::to_string(pos.column) + ": ";
}

TailParams tail_params(const TailSpec& spec) { return make_tail_params(spec.rho, spec.alpha); }

} // namespace

PLFunction evaluate(const Expr& expr, const Environment& env) {
  return std::visit(
      overloaded{
          [](const PLLiteral& lit) { return make_pl(lit.points); },
          [&](const Var& v) {
            auto it = env.find(v.name);
            if (it == env.end())
              throw Error(ErrorCode::name_error,
                          where(expr.pos) + "unknown identifier '" + v.name + "'");
            return it->second;
          },
          [&](const Sum& s) { return evaluate(*s.lhs, env) + evaluate(*s.rhs, env); },
          [&](const Diff& d) { return evaluate(*d.lhs, env) - evaluate(*d.rhs, env); },
          [&](const Scale& s) { return scale(s.factor, evaluate(*s.operand, env)); },
          [&](const Join& j) { return join(evaluate(*j.lhs, env), evaluate(*j.rhs, env)); },
          [&](const Meet& m) { return meet(evaluate(*m.lhs, env), evaluate(*m.rhs, env)); },
          [&](const Abs& a) { return abs_val(evaluate(*a.operand, env)); },
          [](const BuiltinU&) { return builtin::identity(); },
          [](const BuiltinOne&) { return builtin::one(); },
      },
      expr.node);
}

std::optional<Report> execute(const Statement& stmt, Environment& env) {
  try {
    return std::visit(
        overloaded{
            [&](const Let& l) -> std::optional<Report> {
              env.insert_or_assign(l.name, evaluate(*l.expr, env));
              return std::nullopt;
            },
            [&](const EvalQuery& q) -> std::optional<Report> {
              return EvalReport{eval(evaluate(*q.expr, env), q.at)};
            },
            [&](const NormQuery& q) -> std::optional<Report> {
              NormCertificate c = e_norm(evaluate(*q.expr, env), evaluate(*q.wrt, env));
              return NormReport{std::move(c.value), std::move(c.witness)};
            },
            [&](const LeqQuery& q) -> std::optional<Report> {
              return LeqReport{leq(evaluate(*q.lhs, env), evaluate(*q.rhs, env))};
            },
            [&](const InIdealQuery& q) -> std::optional<Report> {
              return InIdealReport{in_principal_ideal(evaluate(*q.expr, env), evaluate(*q.wrt, env))};
            },
            [&](const RatioBoundsQuery& q) -> std::optional<Report> {
              const RatioBounds rb = ratio_bounds(build_counterexample(tail_params(q.tail)));
              return RatioBoundsReport{rb.liminf, rb.limsup};
            },
            [&](const VerifyQuery& q) -> std::optional<Report> {
              return verify_report(tail_params(q.tail), q.depth);
            },
        },
        stmt.node);
  } catch (const Error& e) {
    return error_report(e);
  }
}

std::vector<Report> eval_program(const Program& program, Environment& env) {
  std::vector<Report> reports;
  for (const auto& stmt : program) {
    if (auto r = execute(stmt, env)) reports.push_back(std::move(*r));
  }
  return reports;
}

} // namespace plru::dsl
