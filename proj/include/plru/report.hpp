#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>

#include <json.hpp>

#include "plru/counterexample.hpp"
#include "plru/error.hpp"
#include "plru/ideal_norm.hpp"
#include "plru/rational.hpp"

namespace plru {

struct EvalReport {
  Rational value;
  friend bool operator==(const EvalReport&, const EvalReport&) = default;
};

struct NormReport {
  NormValue value;
  NormWitness witness;
  friend bool operator==(const NormReport&, const NormReport&) = default;
};

struct LeqReport {
  bool verdict = false;
  friend bool operator==(const LeqReport&, const LeqReport&) = default;
};

struct InIdealReport {
  bool verdict = false;
  friend bool operator==(const InIdealReport&, const InIdealReport&) = default;
};

struct RatioBoundsReport {
  Rational ratio_liminf;
  Rational ratio_limsup;
  friend bool operator==(const RatioBoundsReport&, const RatioBoundsReport&) = default;
};

struct RefutationSummary {
  Rational lambda_example;
  Rational node_low;
  Rational node_high;
  friend bool operator==(const RefutationSummary&, const RefutationSummary&) = default;
};

struct VerifyReport {
  enum class Verdict { verified_strict, not_witnessed };
  Verdict verdict = Verdict::verified_strict;
  Rational ideal_norm;
  Rational ratio_liminf;
  Rational ratio_limsup;
  std::optional<Rational> epsilon_star;       // absent when not witnessed
  std::uint64_t depth_checked = 0;
  std::optional<RefutationSummary> refutation; // absent when not witnessed
  friend bool operator==(const VerifyReport&, const VerifyReport&) = default;
};

struct ErrorReport {
  std::string code;
  std::string message;
  friend bool operator==(const ErrorReport&, const ErrorReport&) = default;
};

using Report = std::variant<EvalReport, NormReport, LeqReport, InIdealReport, RatioBoundsReport,
                            VerifyReport, ErrorReport>;

ErrorReport error_report(const Error& e);

/// Strict-inclusion check for the counterexample built from params. A
/// constant-ratio tail yields a not_witnessed report rather than an error.
VerifyReport verify_report(const TailFunction& f, std::uint64_t depth);
VerifyReport verify_report(const TailParams& params, std::uint64_t depth);

/// JSON object with a "kind" tag; every rational is a "p/q" string.
nlohmann::json to_json(const Report& report);

/// Inverse of to_json; throws nlohmann::json::exception or std::invalid_argument
/// on malformed input.
Report report_from_json(const nlohmann::json& j);

/// Human-readable rendering; may span several lines for verify reports.
std::string to_text(const Report& report);

bool is_error(const Report& report);

} // namespace plru
