#include "plru/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "plru/counterexample.hpp"
#include "plru/dsl/evaluator.hpp"
#include "plru/dsl/parser.hpp"
#include "plru/error.hpp"
#include "plru/ideal_norm.hpp"
#include "plru/plot.hpp"
#include "plru/report.hpp"

namespace plru::cli {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Rational rational_flag(const std::string& name, const std::string& text) {
  auto r = Rational::parse(text);
  if (!r) throw UsageError("--" + name + ": '" + text + "' is not a rational of the form P/Q");
  return *r;
}

void print_report(const Report& r, bool json, std::ostream& out) {
  if (json) out << to_json(r).dump(2) << '\n';
  else out << to_text(r) << '\n';
}

int single_query(const Report& r, bool json, std::ostream& out) {
  print_report(r, json, out);
  return is_error(r) ? query_error : ok;
}

// Parses the expression text and evaluates it with no bindings.
PLFunction expression(const std::string& text) {
  return dsl::evaluate(*dsl::parse_expression(text), dsl::Environment{});
}

std::string indent(const std::string& text) {
  std::string out = "  ";
  for (char c : text) {
    out += c;
    if (c == '\n') out += "  ";
  }
  return out;
}

} // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact piecewise-linear vector lattice toolkit", "plru"};
  app.require_subcommand(1);

  std::string format = "text";
  const auto format_check = CLI::IsMember({"json", "text"});

  std::string rho = "1/4", alpha = "1/2";
  std::uint64_t depth = 20;

  auto* verify = app.add_subcommand("verify", "Certify that the counterexample f separates the two ideals");
  verify->add_option("--rho", rho, "Period ratio b_{n+1}/b_n")->capture_default_str();
  verify->add_option("--alpha", alpha, "Offset ratio a_n/b_n")->capture_default_str();
  verify->add_option("--depth", depth, "Truncation depth for finite checks")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  verify->add_option("--format", format, "Output format")->check(format_check)->capture_default_str();

  std::string file;
  auto* run = app.add_subcommand("run", "Parse and evaluate a .plx program");
  run->add_option("file", file, "Program file")->required();
  run->add_option("--format", format, "Output format")->check(format_check)->capture_default_str();

  std::string expr_text, wrt_text = "u";
  auto* norm = app.add_subcommand("norm", "Compute ||expr||_wrt");
  norm->add_option("--expr", expr_text, "Expression")->required();
  norm->add_option("--wrt", wrt_text, "Regulator expression")->capture_default_str();
  norm->add_option("--format", format, "Output format")->check(format_check)->capture_default_str();

  std::string lhs_text, rhs_text;
  auto* leq_cmd = app.add_subcommand("leq", "Decide lhs <= rhs pointwise");
  leq_cmd->add_option("--lhs", lhs_text, "Left expression")->required();
  leq_cmd->add_option("--rhs", rhs_text, "Right expression")->required();
  leq_cmd->add_option("--format", format, "Output format")->check(format_check)->capture_default_str();

  std::string at_text;
  auto* eval_cmd = app.add_subcommand("eval", "Evaluate an expression at a point");
  eval_cmd->add_option("--expr", expr_text, "Expression")->required();
  eval_cmd->add_option("--at", at_text, "Rational point in [0,1]")->required();
  eval_cmd->add_option("--format", format, "Output format")->check(format_check)->capture_default_str();

  PlotOptions plot_options;
  std::string scale = "log", out_path;
  auto* plot = app.add_subcommand("plot", "Write t,f,u samples of the counterexample as CSV");
  plot->add_option("--rho", rho, "Period ratio")->capture_default_str();
  plot->add_option("--alpha", alpha, "Offset ratio")->capture_default_str();
  plot->add_option("--depth", plot_options.depth, "Periods to cover")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  plot->add_option("--samples", plot_options.samples, "Number of sample points")
      ->check(CLI::Range(std::uint64_t{2}, std::numeric_limits<std::uint64_t>::max()))
      ->capture_default_str();
  plot->add_option("--scale", scale, "Sample spacing")
      ->check(CLI::IsMember({"linear", "log"}))
      ->capture_default_str();
  plot->add_option("--out", out_path, "Output path (stdout when omitted)");

  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const auto& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return ok;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return ok;
  } catch (const CLI::ParseError& e) {
    err << "plru: " << e.what() << "\n\n" << app.help();
    return usage;
  }
  const bool json = format == "json";

  try {
    if (verify->parsed()) {
      TailParams params;
      try {
        params = make_tail_params(rational_flag("rho", rho), rational_flag("alpha", alpha));
      } catch (const Error& e) {
        err << "plru: " << e.what() << '\n';
        return invalid_params;
      }
      const VerifyReport report = verify_report(params, depth);
      print_report(report, json, out);
      return report.verdict == VerifyReport::Verdict::verified_strict ? ok : not_witnessed;
    }

    if (run->parsed()) {
      std::ifstream in(file, std::ios::binary);
      if (!in) {
        err << "plru: cannot read " << file << '\n';
        return no_input;
      }
      std::ostringstream buffer;
      buffer << in.rdbuf();
      if (in.bad()) {
        err << "plru: cannot read " << file << '\n';
        return no_input;
      }

      dsl::Program program;
      try {
        program = dsl::parse(buffer.str());
      } catch (const ParseError& e) {
        print_report(error_report(e), json, out);
        return query_error;
      }

      dsl::Environment env;
      bool failed = false;
      nlohmann::json all = nlohmann::json::array();
      for (const auto& stmt : program) {
        auto report = dsl::execute(stmt, env);
        if (!report) continue;
        failed = failed || is_error(*report);
        if (json) all.push_back(to_json(*report));
        else out << dsl::to_source(stmt) << '\n' << indent(to_text(*report)) << '\n';
      }
      if (json) out << all.dump(2) << '\n';
      return failed ? query_error : ok;
    }

    if (norm->parsed() || leq_cmd->parsed() || eval_cmd->parsed()) {
      Report report;
      try {
        if (norm->parsed()) {
          NormCertificate c = e_norm(expression(expr_text), expression(wrt_text));
          report = NormReport{std::move(c.value), std::move(c.witness)};
        } else if (leq_cmd->parsed()) {
          report = LeqReport{leq(expression(lhs_text), expression(rhs_text))};
        } else {
          report = EvalReport{eval(expression(expr_text), dsl::parse_rational(at_text))};
        }
      } catch (const Error& e) {
        report = error_report(e);
      }
      return single_query(report, json, out);
    }

    if (plot->parsed()) {
      TailParams params;
      try {
        params = make_tail_params(rational_flag("rho", rho), rational_flag("alpha", alpha));
      } catch (const Error& e) {
        err << "plru: " << e.what() << '\n';
        return invalid_params;
      }
      plot_options.scale = scale == "linear" ? SampleScale::linear : SampleScale::log;
      const TailFunction f = build_counterexample(params);
      if (out_path.empty() || out_path == "-") {
        emit_plot(f, plot_options, out);
      } else {
        try {
          emit_plot(f, plot_options, std::filesystem::path(out_path));
        } catch (const OutputError& e) {
          err << "plru: " << e.what() << '\n';
          return cant_create;
        }
      }
      return ok;
    }
  } catch (const UsageError& e) {
    err << "plru: " << e.what() << '\n';
    return usage;
  }
  return usage;
}

} // namespace plru::cli
