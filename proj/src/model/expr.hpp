#pragma once

#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "core/exact_length.hpp"

namespace covspec::model {

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& msg, std::size_t column)
      : std::runtime_error(msg + " at column " + std::to_string(column)), column_(column) {}
  std::size_t column() const { return column_; }

 private:
  std::size_t column_;
};

enum class Op { kNumber, kPi, kVar, kAdd, kSub, kMul, kDiv, kPow, kNeg, kExp, kCos, kSin, kSqrt };

struct Node;
using Expr = std::shared_ptr<const Node>;

struct Node {
  Op op;
  Rational number;  // kNumber only
  Expr lhs;         // unary argument or left operand
  Expr rhs;
  double value = 0.0;  // kNumber: cached double of `number`
  long small_power = 0;  // kPow: integer exponent when nonzero
};

// Smart constructors fold constants and drop neutral elements.
Expr number(const Rational& q);
Expr pi_const();
Expr variable();
Expr add(Expr a, Expr b);
Expr sub(Expr a, Expr b);
Expr mul(Expr a, Expr b);
Expr divide(Expr a, Expr b);
Expr power(Expr a, Expr b);
Expr neg(Expr a);
Expr apply(Op fn, Expr a);

/// Parses the warp grammar: numbers, `pi`, the variable (`r`, `x` or `z`),
/// + - * / ^, unary minus, and exp cos sin sqrt. `^` binds tighter than unary
/// minus and is right associative, so `-r^2` is `-(r^2)`.
Expr parse(std::string_view text);

std::string to_string(const Expr& e);
double evaluate(const Expr& e, double r);
Expr derivative(const Expr& e);
Expr substitute(const Expr& e, const Expr& replacement);
bool structurally_equal(const Expr& a, const Expr& b);
bool depends_on_variable(const Expr& e);

/// Exact value in Q + Q*pi for constant expressions built from rationals,
/// pi, sums, rational scalings and integer powers of rationals.
std::optional<ExactLength> try_exact(const Expr& e);

/// Parses a constant expression into a Length, exact when possible.
Length parse_length(std::string_view text);

/// Warp/profile function f(r) with cached symbolic derivatives.
class WarpFunction {
 public:
  WarpFunction() : WarpFunction(number(1)) {}
  explicit WarpFunction(Expr e);
  static WarpFunction parse(std::string_view text) { return WarpFunction(model::parse(text)); }

  double operator()(double r) const { return evaluate(f_, r); }
  double d1(double r) const { return evaluate(df_, r); }
  double d2(double r) const { return evaluate(ddf_, r); }

  const Expr& expr() const { return f_; }
  const Expr& first_derivative() const { return df_; }
  const Expr& second_derivative() const { return ddf_; }
  std::string text() const { return to_string(f_); }

  /// The same warping seen after multiplying every length by `factor`:
  /// r -> factor*r, f -> factor * f(r / factor).
  WarpFunction rescaled(double factor) const;

  /// Smallest value of f on a uniform grid over [lo, hi]; positivity check.
  double min_on_grid(double lo, double hi, int samples = 2001) const;

 private:
  Expr f_, df_, ddf_;
};

}  // namespace covspec::model
