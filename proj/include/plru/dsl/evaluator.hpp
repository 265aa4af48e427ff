#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "plru/dsl/ast.hpp"
#include "plru/pl_function.hpp"
#include "plru/report.hpp"

namespace plru::dsl {

using Environment = std::map<std::string, PLFunction, std::less<>>;

/// Throws NameError for an unbound variable, and module errors as raised.
PLFunction evaluate(const Expr& expr, const Environment& env);

/// Runs one statement. A let binds and yields nothing unless it fails;
/// queries yield their report. Module errors become error reports.
std::optional<Report> execute(const Statement& stmt, Environment& env);

/// Executes statements in order and collects their reports.
std::vector<Report> eval_program(const Program& program, Environment& env);

} // namespace plru::dsl
