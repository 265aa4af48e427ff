#include "plru/report.hpp"

#include <sstream>
#include <stdexcept>

namespace plru {

namespace {

template <typename... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};

constexpr const char* kSlopeAtZero = "slope-at-zero";
constexpr const char* kInfinite = "infinite";

Rational rational_field(const nlohmann::json& j, const char* key) {
  const std::string text = j.at(key).get<std::string>();
  auto r = Rational::parse(text);
  if (!r) throw std::invalid_argument(std::string("field '") + key + "' is not a rational: " + text);
  return *r;
}

std::string verdict_name(VerifyReport::Verdict v) {
  return v == VerifyReport::Verdict::verified_strict ? "verified-strict" : "not-witnessed";
}

std::string witness_text(const NormWitness& w) {
  return w.kind == NormWitness::Kind::slope_at_zero ? kSlopeAtZero : w.t.str();
}

} // namespace

ErrorReport error_report(const Error& e) { return {std::string(to_string(e.code())), e.what()}; }

VerifyReport verify_report(const TailFunction& f, std::uint64_t depth) {
  const RatioBounds rb = ratio_bounds(f);
  try {
    const StrictInclusionCert cert = strict_inclusion_certificate(f, depth);
    const Rational lambda = (cert.ratio_liminf + cert.ratio_limsup) / Rational(2);
    return {VerifyReport::Verdict::verified_strict,
            cert.ideal_norm,
            cert.ratio_liminf,
            cert.ratio_limsup,
            cert.refutation.epsilon_star,
            cert.depth_checked,
            RefutationSummary{lambda, cert.refutation.node_low, cert.refutation.node_high}};
  } catch (const Error& e) {
    if (e.code() != ErrorCode::strict_inclusion_not_witnessed) throw;
  }
  return {VerifyReport::Verdict::not_witnessed, tail_u_norm(f), rb.liminf, rb.limsup,
          std::nullopt, depth, std::nullopt};
}

VerifyReport verify_report(const TailParams& params, std::uint64_t depth) {
  return verify_report(build_counterexample(params), depth);
}

nlohmann::json to_json(const Report& report) {
  using nlohmann::json;
  return std::visit(
      overloaded{
          [](const EvalReport& r) { return json{{"kind", "eval"}, {"value", r.value.str()}}; },
          [](const NormReport& r) {
            return json{{"kind", "norm"},
                        {"value", r.value.is_finite() ? r.value.value().str() : kInfinite},
                        {"witness_t", witness_text(r.witness)}};
          },
          [](const LeqReport& r) { return json{{"kind", "leq"}, {"verdict", r.verdict}}; },
          [](const InIdealReport& r) { return json{{"kind", "in_ideal"}, {"verdict", r.verdict}}; },
          [](const RatioBoundsReport& r) {
            return json{{"kind", "ratio_bounds"},
                        {"ratio_liminf", r.ratio_liminf.str()},
                        {"ratio_limsup", r.ratio_limsup.str()}};
          },
          [](const VerifyReport& r) {
            json j{{"kind", "verify"},
                   {"verdict", verdict_name(r.verdict)},
                   {"ideal_norm", r.ideal_norm.str()},
                   {"ratio_liminf", r.ratio_liminf.str()},
                   {"ratio_limsup", r.ratio_limsup.str()},
                   {"depth_checked", r.depth_checked}};
            if (r.epsilon_star) j["epsilon_star"] = r.epsilon_star->str();
            if (r.refutation)
              j["refutation"] = {{"lambda_example", r.refutation->lambda_example.str()},
                                 {"node_low", r.refutation->node_low.str()},
                                 {"node_high", r.refutation->node_high.str()}};
            return j;
          },
          [](const ErrorReport& r) {
            return json{{"kind", "error"}, {"code", r.code}, {"message", r.message}};
          },
      },
      report);
}

Report report_from_json(const nlohmann::json& j) {
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "eval") return EvalReport{rational_field(j, "value")};
  if (kind == "norm") {
    const std::string value = j.at("value").get<std::string>();
    const std::string witness = j.at("witness_t").get<std::string>();
    NormReport r{value == kInfinite ? NormValue::infinite()
                                    : NormValue::finite(rational_field(j, "value")),
                 {}};
    if (witness == kSlopeAtZero) {
      r.witness = {NormWitness::Kind::slope_at_zero, Rational(0)};
    } else {
      r.witness = {NormWitness::Kind::node, rational_field(j, "witness_t")};
    }
    return r;
  }
  if (kind == "leq") return LeqReport{j.at("verdict").get<bool>()};
  if (kind == "in_ideal") return InIdealReport{j.at("verdict").get<bool>()};
  if (kind == "ratio_bounds")
    return RatioBoundsReport{rational_field(j, "ratio_liminf"), rational_field(j, "ratio_limsup")};
  if (kind == "verify") {
    VerifyReport r;
    const std::string verdict = j.at("verdict").get<std::string>();
    if (verdict == "verified-strict") r.verdict = VerifyReport::Verdict::verified_strict;
    else if (verdict == "not-witnessed") r.verdict = VerifyReport::Verdict::not_witnessed;
    else throw std::invalid_argument("unknown verdict " + verdict);
    r.ideal_norm = rational_field(j, "ideal_norm");
    r.ratio_liminf = rational_field(j, "ratio_liminf");
    r.ratio_limsup = rational_field(j, "ratio_limsup");
    r.depth_checked = j.at("depth_checked").get<std::uint64_t>();
    if (j.contains("epsilon_star")) r.epsilon_star = rational_field(j, "epsilon_star");
    if (j.contains("refutation")) {
      const auto& ref = j.at("refutation");
      r.refutation = RefutationSummary{rational_field(ref, "lambda_example"),
                                       rational_field(ref, "node_low"),
                                       rational_field(ref, "node_high")};
    }
    return r;
  }
  if (kind == "error")
    return ErrorReport{j.at("code").get<std::string>(), j.at("message").get<std::string>()};
  throw std::invalid_argument("unknown report kind " + kind);
}

std::string to_text(const Report& report) {
  return std::visit(
      overloaded{
          [](const EvalReport& r) { return r.value.str(); },
          [](const NormReport& r) {
            return (r.value.is_finite() ? r.value.value().str() : std::string(kInfinite)) +
                   " witness=" + witness_text(r.witness);
          },
          [](const LeqReport& r) { return std::string(r.verdict ? "true" : "false"); },
          [](const InIdealReport& r) { return std::string(r.verdict ? "true" : "false"); },
          [](const RatioBoundsReport& r) {
            return "liminf=" + r.ratio_liminf.str() + " limsup=" + r.ratio_limsup.str();
          },
          [](const VerifyReport& r) {
            std::ostringstream os;
            os << "verdict: " << verdict_name(r.verdict) << '\n'
               << "ideal_norm: " << r.ideal_norm << '\n'
               << "ratio_liminf: " << r.ratio_liminf << '\n'
               << "ratio_limsup: " << r.ratio_limsup << '\n';
            if (r.epsilon_star) os << "epsilon_star: " << *r.epsilon_star << '\n';
            os << "depth_checked: " << r.depth_checked;
            if (r.refutation)
              os << "\nrefutation: lambda_example=" << r.refutation->lambda_example
                 << " node_low=" << r.refutation->node_low
                 << " node_high=" << r.refutation->node_high;
            return os.str();
          },
          [](const ErrorReport& r) { return "error: " + r.code + ": " + r.message; },
      },
      report);
}

bool is_error(const Report& report) { return std::holds_alternative<ErrorReport>(report); }

} // namespace plru
