#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "plru/pl_function.hpp"
#include "plru/rational.hpp"

namespace plru::dsl {

struct SourcePos {
  std::size_t line = 0;
  std::size_t column = 0;
};

struct Expr;

/// Shared immutable child pointer with structural equality.
class ExprRef {
public:
  ExprRef() = default;
  explicit ExprRef(std::shared_ptr<const Expr> p) : p_(std::move(p)) {}

  const Expr& operator*() const { return *p_; }
  const Expr* operator->() const { return p_.get(); }

  friend bool operator==(const ExprRef& a, const ExprRef& b);

private:
  std::shared_ptr<const Expr> p_;
};

struct PLLiteral {
  std::vector<Point> points;
  friend bool operator==(const PLLiteral&, const PLLiteral&) = default;
};
struct Var {
  std::string name;
  friend bool operator==(const Var&, const Var&) = default;
};
struct Sum {
  ExprRef lhs, rhs;
  friend bool operator==(const Sum&, const Sum&) = default;
};
struct Diff {
  ExprRef lhs, rhs;
  friend bool operator==(const Diff&, const Diff&) = default;
};
struct Scale {
  Rational factor;
  ExprRef operand;
  friend bool operator==(const Scale&, const Scale&) = default;
};
struct Join {
  ExprRef lhs, rhs;
  friend bool operator==(const Join&, const Join&) = default;
};
struct Meet {
  ExprRef lhs, rhs;
  friend bool operator==(const Meet&, const Meet&) = default;
};
struct Abs {
  ExprRef operand;
  friend bool operator==(const Abs&, const Abs&) = default;
};
struct BuiltinU {
  friend bool operator==(const BuiltinU&, const BuiltinU&) = default;
};
struct BuiltinOne {
  friend bool operator==(const BuiltinOne&, const BuiltinOne&) = default;
};

using ExprNode =
    std::variant<PLLiteral, Var, Sum, Diff, Scale, Join, Meet, Abs, BuiltinU, BuiltinOne>;

struct Expr {
  ExprNode node;
  SourcePos pos;

  // Positions are not part of the tree's identity.
  friend bool operator==(const Expr& a, const Expr& b) { return a.node == b.node; }
};

template <typename Node>
ExprRef make_expr(Node node, SourcePos pos = {}) {
  return ExprRef(std::make_shared<const Expr>(Expr{ExprNode(std::move(node)), pos}));
}

inline bool operator==(const ExprRef& a, const ExprRef& b) {
  if (a.p_ == b.p_) return true;
  if (!a.p_ || !b.p_) return false;
  return *a.p_ == *b.p_;
}

struct Let {
  std::string name;
  ExprRef expr;
  friend bool operator==(const Let&, const Let&) = default;
};
struct EvalQuery {
  ExprRef expr;
  Rational at;
  friend bool operator==(const EvalQuery&, const EvalQuery&) = default;
};
struct NormQuery {
  ExprRef expr;
  ExprRef wrt;
  friend bool operator==(const NormQuery&, const NormQuery&) = default;
};
struct LeqQuery {
  ExprRef lhs, rhs;
  friend bool operator==(const LeqQuery&, const LeqQuery&) = default;
};
struct InIdealQuery {
  ExprRef expr;
  ExprRef wrt;
  friend bool operator==(const InIdealQuery&, const InIdealQuery&) = default;
};

/// Tail parameters as written; unset fields take the defaults.
struct TailSpec {
  Rational rho{1, 4};
  Rational alpha{1, 2};
  friend bool operator==(const TailSpec&, const TailSpec&) = default;
};
struct RatioBoundsQuery {
  TailSpec tail;
  friend bool operator==(const RatioBoundsQuery&, const RatioBoundsQuery&) = default;
};
struct VerifyQuery {
  TailSpec tail;
  std::uint64_t depth = 20;
  friend bool operator==(const VerifyQuery&, const VerifyQuery&) = default;
};

using StatementNode = std::variant<Let, EvalQuery, NormQuery, LeqQuery, InIdealQuery,
                                   RatioBoundsQuery, VerifyQuery>;

struct Statement {
  StatementNode node;
  SourcePos pos;

  friend bool operator==(const Statement& a, const Statement& b) { return a.node == b.node; }
};

using Program = std::vector<Statement>;

} // namespace plru::dsl
