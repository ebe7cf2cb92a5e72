#include "model/expr.hpp"

#include <cctype>
#include <cmath>
#include <limits>
#include <numbers>

namespace covspec::model {

namespace {

bool is_number(const Expr& e) { return e->op == Op::kNumber; }
bool is_number(const Expr& e, long v) { return e->op == Op::kNumber && e->number == v; }

double to_double(const Rational& q) { return q.convert_to<double>(); }

bool is_small_integer(const Rational& q, long& out) {
  if (boost::multiprecision::denominator(q) != 1) return false;
  auto n = boost::multiprecision::numerator(q);
  if (abs(n) > 64) return false;
  out = n.convert_to<long>();
  return true;
}

long small_exponent(Op op, const Expr& b) {
  long k = 0;
  if (op == Op::kPow && b && is_number(b) && is_small_integer(b->number, k)) return k;
  return 0;
}

Expr make(Op op, Expr a = nullptr, Expr b = nullptr) {
  long k = small_exponent(op, b);
  return std::make_shared<const Node>(Node{op, Rational(0), std::move(a), std::move(b), 0.0, k});
}

}  // namespace

Expr number(const Rational& q) {
  auto n = std::make_shared<Node>(Node{Op::kNumber, q, nullptr, nullptr, to_double(q), 0});
  return n;
}
Expr pi_const() { return make(Op::kPi); }
Expr variable() { return make(Op::kVar); }

Expr add(Expr a, Expr b) {
  if (is_number(a) && is_number(b)) return number(a->number + b->number);
  if (is_number(a, 0)) return b;
  if (is_number(b, 0)) return a;
  return make(Op::kAdd, std::move(a), std::move(b));
}

Expr sub(Expr a, Expr b) {
  if (is_number(a) && is_number(b)) return number(a->number - b->number);
  if (is_number(b, 0)) return a;
  if (is_number(a, 0)) return neg(std::move(b));
  return make(Op::kSub, std::move(a), std::move(b));
}

Expr mul(Expr a, Expr b) {
  if (is_number(a) && is_number(b)) return number(a->number * b->number);
  if (is_number(a, 0) || is_number(b, 0)) return number(0);
  if (is_number(a, 1)) return b;
  if (is_number(b, 1)) return a;
  if (is_number(a, -1)) return neg(std::move(b));
  if (is_number(b, -1)) return neg(std::move(a));
  return make(Op::kMul, std::move(a), std::move(b));
}

Expr divide(Expr a, Expr b) {
  if (is_number(b, 0)) throw std::domain_error("division by literal zero");
  if (is_number(a) && is_number(b)) return number(a->number / b->number);
  if (is_number(a, 0)) return number(0);
  if (is_number(b, 1)) return a;
  return make(Op::kDiv, std::move(a), std::move(b));
}

Expr power(Expr a, Expr b) {
  long k = 0;
  if (is_number(b) && is_small_integer(b->number, k)) {
    if (k == 0) return number(1);
    if (k == 1) return a;
    if (is_number(a) && k > 0) {
      Rational r = 1;
      for (long i = 0; i < k; ++i) r *= a->number;
      return number(r);
    }
  }
  return make(Op::kPow, std::move(a), std::move(b));
}

Expr neg(Expr a) {
  if (is_number(a)) return number(-a->number);
  if (a->op == Op::kNeg) return a->lhs;
  return make(Op::kNeg, std::move(a));
}

Expr apply(Op fn, Expr a) { return make(fn, std::move(a)); }

// ---------------------------------------------------------------- parser

namespace {

class Parser {
 public:
  explicit Parser(std::string_view s) : s_(s) {}

  Expr parse_all() {
    Expr e = parse_expr();
    skip_ws();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, pos_ + 1); }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool eat(char c) {
    skip_ws();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Expr parse_expr() {
    Expr e = parse_term();
    while (true) {
      if (eat('+')) {
        e = make(Op::kAdd, e, parse_term());
      } else if (eat('-')) {
        e = make(Op::kSub, e, parse_term());
      } else {
        return e;
      }
    }
  }

  Expr parse_term() {
    Expr e = parse_unary();
    while (true) {
      if (eat('*')) {
        e = make(Op::kMul, e, parse_unary());
      } else if (eat('/')) {
        e = make(Op::kDiv, e, parse_unary());
      } else {
        return e;
      }
    }
  }

  Expr parse_unary() {
    if (eat('-')) return make(Op::kNeg, parse_unary());
    if (eat('+')) return parse_unary();
    return parse_power();
  }

  Expr parse_power() {
    Expr base = parse_primary();
    if (eat('^')) return make(Op::kPow, base, parse_unary());
    return base;
  }

  Expr parse_primary() {
    skip_ws();
    if (pos_ >= s_.size()) fail("unexpected end of expression");
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      Expr e = parse_expr();
      if (!eat(')')) fail("expected ')'");
      return e;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return parse_number();
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isalnum(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      std::string id(s_.substr(start, pos_ - start));
      if (id == "pi") return make(Op::kPi);
      if (id == "r" || id == "x" || id == "z") return make(Op::kVar);
      Op fn;
      if (id == "exp") {
        fn = Op::kExp;
      } else if (id == "cos") {
        fn = Op::kCos;
      } else if (id == "sin") {
        fn = Op::kSin;
      } else if (id == "sqrt") {
        fn = Op::kSqrt;
      } else {
        pos_ = start;
        fail("unknown identifier '" + id + "'");
      }
      if (!eat('(')) fail("expected '(' after " + id);
      Expr arg = parse_expr();
      if (!eat(')')) fail("expected ')'");
      return make(fn, arg);
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  Expr parse_number() {
    std::size_t start = pos_;
    while (pos_ < s_.size() && (std::isdigit(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '.')) ++pos_;
    if (pos_ < s_.size() && (s_[pos_] == 'e' || s_[pos_] == 'E')) {
      std::size_t save = pos_;
      ++pos_;
      if (pos_ < s_.size() && (s_[pos_] == '-' || s_[pos_] == '+')) ++pos_;
      if (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      } else {
        pos_ = save;
      }
    }
    std::string text(s_.substr(start, pos_ - start));
    try {
      return number(rational_from_decimal(text));
    } catch (const std::exception&) {
      pos_ = start;
      fail("malformed number '" + text + "'");
    }
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

int precedence(const Expr& e) {
  switch (e->op) {
    case Op::kAdd:
    case Op::kSub:
      return 1;
    case Op::kMul:
    case Op::kDiv:
      return 2;
    case Op::kNeg:
      return 3;
    case Op::kPow:
      return 4;
    case Op::kNumber:
      // Negative and fractional literals print with a sign or slash.
      if (e->number < 0) return 3;
      if (boost::multiprecision::denominator(e->number) != 1) return 2;
      return 5;
    default:
      return 5;
  }
}

std::string wrap(const Expr& e, int min_prec) {
  std::string s = to_string(e);
  return precedence(e) < min_prec ? "(" + s + ")" : s;
}

const char* fn_name(Op op) {
  switch (op) {
    case Op::kExp:
      return "exp";
    case Op::kCos:
      return "cos";
    case Op::kSin:
      return "sin";
    case Op::kSqrt:
      return "sqrt";
    default:
      return "?";
  }
}

}  // namespace

Expr parse(std::string_view text) { return Parser(text).parse_all(); }

std::string to_string(const Expr& e) {
  switch (e->op) {
    case Op::kNumber: {
      if (e->number < 0) return "-" + to_string(number(-e->number));
      return e->number.str();
    }
    case Op::kPi:
      return "pi";
    case Op::kVar:
      return "r";
    case Op::kAdd:
      return wrap(e->lhs, 1) + "+" + wrap(e->rhs, 2);
    case Op::kSub:
      return wrap(e->lhs, 1) + "-" + wrap(e->rhs, 2);
    case Op::kMul:
      return wrap(e->lhs, 2) + "*" + wrap(e->rhs, 3);
    case Op::kDiv:
      return wrap(e->lhs, 2) + "/" + wrap(e->rhs, 3);
    case Op::kNeg:
      return "-" + wrap(e->lhs, 3);
    case Op::kPow:
      return wrap(e->lhs, 5) + "^" + wrap(e->rhs, 3);
    default:
      return std::string(fn_name(e->op)) + "(" + to_string(e->lhs) + ")";
  }
}

double evaluate(const Expr& e, double r) {
  switch (e->op) {
    case Op::kNumber:
      return e->value;
    case Op::kPi:
      return std::numbers::pi;
    case Op::kVar:
      return r;
    case Op::kAdd:
      return evaluate(e->lhs, r) + evaluate(e->rhs, r);
    case Op::kSub:
      return evaluate(e->lhs, r) - evaluate(e->rhs, r);
    case Op::kMul:
      return evaluate(e->lhs, r) * evaluate(e->rhs, r);
    case Op::kDiv:
      return evaluate(e->lhs, r) / evaluate(e->rhs, r);
    case Op::kNeg:
      return -evaluate(e->lhs, r);
    case Op::kPow: {
      long k = e->small_power;
      double b = evaluate(e->lhs, r);
      if (k != 0) {
        double out = 1;
        for (long i = 0; i < std::abs(k); ++i) out *= b;
        return k < 0 ? 1 / out : out;
      }
      return std::pow(b, evaluate(e->rhs, r));
    }
    case Op::kExp:
      return std::exp(evaluate(e->lhs, r));
    case Op::kCos:
      return std::cos(evaluate(e->lhs, r));
    case Op::kSin:
      return std::sin(evaluate(e->lhs, r));
    case Op::kSqrt:
      return std::sqrt(evaluate(e->lhs, r));
  }
  return std::nan("");
}

bool depends_on_variable(const Expr& e) {
  if (!e) return false;
  if (e->op == Op::kVar) return true;
  return depends_on_variable(e->lhs) || depends_on_variable(e->rhs);
}

Expr derivative(const Expr& e) {
  switch (e->op) {
    case Op::kNumber:
    case Op::kPi:
      return number(0);
    case Op::kVar:
      return number(1);
    case Op::kAdd:
      return add(derivative(e->lhs), derivative(e->rhs));
    case Op::kSub:
      return sub(derivative(e->lhs), derivative(e->rhs));
    case Op::kMul:
      return add(mul(derivative(e->lhs), e->rhs), mul(e->lhs, derivative(e->rhs)));
    case Op::kDiv:
      if (!depends_on_variable(e->rhs)) return divide(derivative(e->lhs), e->rhs);
      return divide(sub(mul(derivative(e->lhs), e->rhs), mul(e->lhs, derivative(e->rhs))),
                    power(e->rhs, number(2)));
    case Op::kNeg:
      return neg(derivative(e->lhs));
    case Op::kPow: {
      const Expr& u = e->lhs;
      const Expr& v = e->rhs;
      if (!depends_on_variable(v)) {
        // d(u^c) = c * u^(c-1) * u'
        Expr exponent = is_number(v) ? number(v->number - 1) : sub(v, number(1));
        return mul(mul(v, power(u, exponent)), derivative(u));
      }
      // d(u^v) = u^v * (v' ln u + v u'/u); ln u = ln(exp-free) is not in the
      // grammar, so the general case is rejected.
      throw std::domain_error("variable exponents are not differentiable in this grammar");
    }
    case Op::kExp:
      return mul(e, derivative(e->lhs));
    case Op::kCos:
      return neg(mul(apply(Op::kSin, e->lhs), derivative(e->lhs)));
    case Op::kSin:
      return mul(apply(Op::kCos, e->lhs), derivative(e->lhs));
    case Op::kSqrt:
      return divide(derivative(e->lhs), mul(number(2), e));
  }
  throw std::logic_error("unhandled node");
}

Expr substitute(const Expr& e, const Expr& replacement) {
  switch (e->op) {
    case Op::kNumber:
    case Op::kPi:
      return e;
    case Op::kVar:
      return replacement;
    case Op::kAdd:
      return add(substitute(e->lhs, replacement), substitute(e->rhs, replacement));
    case Op::kSub:
      return sub(substitute(e->lhs, replacement), substitute(e->rhs, replacement));
    case Op::kMul:
      return mul(substitute(e->lhs, replacement), substitute(e->rhs, replacement));
    case Op::kDiv:
      return divide(substitute(e->lhs, replacement), substitute(e->rhs, replacement));
    case Op::kPow:
      return power(substitute(e->lhs, replacement), substitute(e->rhs, replacement));
    case Op::kNeg:
      return neg(substitute(e->lhs, replacement));
    default:
      return apply(e->op, substitute(e->lhs, replacement));
  }
}

bool structurally_equal(const Expr& a, const Expr& b) {
  if (!a || !b) return !a && !b;
  if (a->op != b->op) return false;
  if (a->op == Op::kNumber && a->number != b->number) return false;
  return structurally_equal(a->lhs, b->lhs) && structurally_equal(a->rhs, b->rhs);
}

std::optional<ExactLength> try_exact(const Expr& e) {
  switch (e->op) {
    case Op::kNumber:
      return ExactLength(e->number);
    case Op::kPi:
      return ExactLength::pi();
    case Op::kAdd:
    case Op::kSub: {
      auto a = try_exact(e->lhs), b = try_exact(e->rhs);
      if (!a || !b) return std::nullopt;
      return e->op == Op::kAdd ? *a + *b : *a - *b;
    }
    case Op::kNeg: {
      auto a = try_exact(e->lhs);
      if (!a) return std::nullopt;
      return -*a;
    }
    case Op::kMul: {
      auto a = try_exact(e->lhs), b = try_exact(e->rhs);
      if (!a || !b) return std::nullopt;
      if (a->is_rational()) return *b * a->rational_part();
      if (b->is_rational()) return *a * b->rational_part();
      return std::nullopt;
    }
    case Op::kDiv: {
      auto a = try_exact(e->lhs), b = try_exact(e->rhs);
      if (!a || !b || b->is_zero()) return std::nullopt;
      if (b->is_rational()) return *a / b->rational_part();
      // (q*pi) / (s*pi) is rational.
      if (b->rational_part() == 0 && a->rational_part() == 0) return ExactLength(a->pi_part() / b->pi_part());
      return std::nullopt;
    }
    case Op::kPow: {
      auto a = try_exact(e->lhs);
      long k = 0;
      if (!a || !a->is_rational() || !is_number(e->rhs) || !is_small_integer(e->rhs->number, k)) return std::nullopt;
      if (a->is_zero() && k < 0) return std::nullopt;
      Rational r = 1;
      for (long i = 0; i < std::abs(k); ++i) r *= a->rational_part();
      return ExactLength(k < 0 ? Rational(1) / r : r);
    }
    default:
      return std::nullopt;
  }
}

Length parse_length(std::string_view text) {
  Expr e = parse(text);
  if (depends_on_variable(e)) throw ParseError("length expression must be constant", 1);
  if (auto exact = try_exact(e)) return Length(*exact);
  return Length(evaluate(e, 0.0));
}

WarpFunction::WarpFunction(Expr e) : f_(std::move(e)) {
  df_ = derivative(f_);
  ddf_ = derivative(df_);
}

WarpFunction WarpFunction::rescaled(double factor) const {
  Expr c = number(Rational(factor));
  return WarpFunction(mul(c, substitute(f_, divide(variable(), c))));
}

double WarpFunction::min_on_grid(double lo, double hi, int samples) const {
  double best = std::numeric_limits<double>::infinity();
  for (int i = 0; i < samples; ++i) {
    double r = lo + (hi - lo) * i / (samples - 1);
    best = std::min(best, (*this)(r));
  }
  return best;
}

}  // namespace covspec::model
