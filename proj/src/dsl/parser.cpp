#include <charconv>

#include "plru/dsl/parser.hpp"
#include "plru/error.hpp"

namespace plru::dsl {

namespace {

class Parser {
public:
  explicit Parser(std::vector<Token> tokens) : tokens_(std::move(tokens)) {}

  Program program() {
    Program out;
    while (!at_end()) out.push_back(statement());
    return out;
  }

  ExprRef whole_expression() {
    ExprRef e = expr();
    expect_end();
    return e;
  }

  Rational whole_rational() {
    Rational r = rational();
    expect_end();
    return r;
  }

private:
  const Token& peek(std::size_t ahead = 0) const {
    const std::size_t k = std::min(idx_ + ahead, tokens_.size() - 1);
    return tokens_[k];
  }
  bool at_end() const { return peek().kind == TokenKind::end; }
  const Token& next() {
    const Token& t = tokens_[idx_];
    if (t.kind != TokenKind::end) ++idx_;
    return t;
  }

  bool is(TokenKind kind, std::string_view text) const {
    return peek().kind == kind && peek().text == text;
  }
  bool is_punct(std::string_view p) const { return is(TokenKind::punct, p); }
  bool is_keyword(std::string_view k) const { return is(TokenKind::keyword, k); }

  [[noreturn]] void fail(const Token& at, const std::string& message) const {
    throw ParseError(at.pos.line, at.pos.column, at.kind == TokenKind::end ? "<end>" : at.text,
                     message);
  }

  void expect_punct(std::string_view p) {
    if (!is_punct(p)) fail(peek(), "expected '" + std::string(p) + "'");
    next();
  }
  void expect_keyword(std::string_view k) {
    if (!is_keyword(k)) fail(peek(), "expected '" + std::string(k) + "'");
    next();
  }
  void expect_end() {
    if (!at_end()) fail(peek(), "unexpected trailing input");
  }

  Statement statement() {
    const Token& head = peek();
    const SourcePos pos = head.pos;
    if (head.kind != TokenKind::keyword) fail(head, "expected a statement");

    if (head.text == "let") {
      next();
      const Token& name = next();
      if (name.kind != TokenKind::identifier) fail(name, "expected an identifier after 'let'");
      std::string id = name.text;
      expect_punct("=");
      return {Let{std::move(id), expr()}, pos};
    }
    if (head.text == "eval") {
      next();
      ExprRef e = expr();
      expect_keyword("at");
      return {EvalQuery{std::move(e), rational()}, pos};
    }
    if (head.text == "norm" || head.text == "in_ideal") {
      const bool norm = head.text == "norm";
      next();
      ExprRef e = expr();
      expect_keyword("wrt");
      ExprRef wrt = expr();
      if (norm) return {NormQuery{std::move(e), std::move(wrt)}, pos};
      return {InIdealQuery{std::move(e), std::move(wrt)}, pos};
    }
    if (head.text == "leq") {
      next();
      ExprRef lhs = expr();
      ExprRef rhs = expr();
      return {LeqQuery{std::move(lhs), std::move(rhs)}, pos};
    }
    if (head.text == "ratio_bounds") {
      next();
      RatioBoundsQuery q;
      tail_options(q.tail, nullptr);
      return {q, pos};
    }
    if (head.text == "verify") {
      next();
      VerifyQuery q;
      tail_options(q.tail, &q.depth);
      return {q, pos};
    }
    fail(head, "expected a statement");
  }

  // Contextual option words; each may appear once.
  void tail_options(TailSpec& tail, std::uint64_t* depth) {
    bool seen_rho = false, seen_alpha = false, seen_depth = false;
    while (peek().kind == TokenKind::identifier) {
      const Token& word = peek();
      auto once = [&](bool& seen) {
        if (seen) fail(word, "option given twice");
        seen = true;
        next();
      };
      if (word.text == "rho") {
        once(seen_rho);
        tail.rho = rational();
      } else if (word.text == "alpha") {
        once(seen_alpha);
        tail.alpha = rational();
      } else if (word.text == "depth" && depth != nullptr) {
        once(seen_depth);
        const Token& n = next();
        std::uint64_t value = 0;
        const auto* end = n.text.data() + n.text.size();
        if (n.kind != TokenKind::integer ||
            std::from_chars(n.text.data(), end, value).ptr != end || value == 0)
          fail(n, "expected a positive integer depth");
        *depth = value;
      } else {
        fail(word, "unknown option");
      }
    }
  }

  ExprRef expr() {
    ExprRef lhs = term();
    while (is_punct("+") || is_punct("-")) {
      const Token& op = next();
      const SourcePos pos = op.pos;
      const bool plus = op.text == "+";
      ExprRef rhs = term();
      lhs = plus ? make_expr(Sum{std::move(lhs), std::move(rhs)}, pos)
                 : make_expr(Diff{std::move(lhs), std::move(rhs)}, pos);
    }
    return lhs;
  }

  bool rational_ahead() const {
    return peek().kind == TokenKind::integer ||
           (is_punct("-") && peek(1).kind == TokenKind::integer);
  }

  ExprRef term() {
    if (rational_ahead()) {
      const SourcePos pos = peek().pos;
      Rational c = rational();
      expect_punct("*");
      return make_expr(Scale{std::move(c), factor()}, pos);
    }
    return factor();
  }

  ExprRef factor() {
    const Token& t = peek();
    const SourcePos pos = t.pos;
    if (t.kind == TokenKind::keyword) {
      if (t.text == "max" || t.text == "min") {
        const bool is_max = t.text == "max";
        next();
        expect_punct("(");
        ExprRef a = expr();
        expect_punct(",");
        ExprRef b = expr();
        expect_punct(")");
        return is_max ? make_expr(Join{std::move(a), std::move(b)}, pos)
                      : make_expr(Meet{std::move(a), std::move(b)}, pos);
      }
      if (t.text == "abs") {
        next();
        expect_punct("(");
        ExprRef a = expr();
        expect_punct(")");
        return make_expr(Abs{std::move(a)}, pos);
      }
      if (t.text == "pl") {
        next();
        expect_punct("[");
        PLLiteral lit;
        lit.points.push_back(point());
        while (is_punct(",")) {
          next();
          lit.points.push_back(point());
        }
        expect_punct("]");
        return make_expr(std::move(lit), pos);
      }
      if (t.text == "u") {
        next();
        return make_expr(BuiltinU{}, pos);
      }
      if (t.text == "one") {
        next();
        return make_expr(BuiltinOne{}, pos);
      }
      fail(t, "expected an expression");
    }
    if (t.kind == TokenKind::identifier) {
      std::string name = next().text;
      return make_expr(Var{std::move(name)}, pos);
    }
    if (is_punct("(")) {
      next();
      ExprRef e = expr();
      expect_punct(")");
      return e;
    }
    fail(t, "expected an expression");
  }

  Point point() {
    expect_punct("(");
    Rational t = rational();
    expect_punct(",");
    Rational v = rational();
    expect_punct(")");
    return {std::move(t), std::move(v)};
  }

  Rational rational() {
    std::string text;
    if (is_punct("-")) {
      next();
      text = "-";
    }
    const Token& num = next();
    if (num.kind != TokenKind::integer) fail(num, "expected an integer");
    text += num.text;
    if (is_punct("/") && peek(1).kind == TokenKind::integer) {
      next();
      const Token& den = next();
      if (Rational::parse(den.text)->is_zero()) fail(den, "denominator must be positive");
      text += "/" + den.text;
    }
    return *Rational::parse(text);
  }

  std::vector<Token> tokens_;
  std::size_t idx_ = 0;
};

} // namespace

Program parse(std::string_view source) { return Parser(tokenize(source)).program(); }

ExprRef parse_expression(std::string_view source) {
  return Parser(tokenize(source)).whole_expression();
}

Rational parse_rational(std::string_view source) {
  return Parser(tokenize(source)).whole_rational();
}

} // namespace plru::dsl
