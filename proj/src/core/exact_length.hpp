#pragma once

#include <compare>
#include <optional>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace covspec {

using Rational = boost::multiprecision::cpp_rational;

/// A length of the form a + b*pi with rational a, b.
///
/// Every preset length in this project (circle circumferences, edge lengths
/// entered as `2*pi*(1+1/j)`, torus diameters) lies in Q + Q*pi, so keeping
/// the two coordinates separate gives exact comparisons. Since pi is
/// transcendental, a + b*pi == c + d*pi iff a == c and b == d.
class ExactLength {
 public:
  ExactLength() = default;
  explicit ExactLength(Rational rational, Rational pi_coeff = 0)
      : rational_(std::move(rational)), pi_coeff_(std::move(pi_coeff)) {}

  static ExactLength pi() { return ExactLength(0, 1); }

  const Rational& rational_part() const { return rational_; }
  const Rational& pi_part() const { return pi_coeff_; }

  bool is_zero() const { return rational_ == 0 && pi_coeff_ == 0; }
  bool is_rational() const { return pi_coeff_ == 0; }
  int sign() const;

  double to_double() const;

  ExactLength operator+(const ExactLength& o) const;
  ExactLength operator-(const ExactLength& o) const;
  ExactLength operator-() const;
  ExactLength operator*(const Rational& s) const;
  ExactLength operator/(const Rational& s) const;
  ExactLength& operator+=(const ExactLength& o);

  bool operator==(const ExactLength& o) const {
    return rational_ == o.rational_ && pi_coeff_ == o.pi_coeff_;
  }
  std::strong_ordering operator<=>(const ExactLength& o) const;

  /// Human readable form, e.g. "3", "4/3*pi", "1+pi/2".
  std::string to_string() const;

 private:
  Rational rational_{0};
  Rational pi_coeff_{0};
};

/// A positive length with an optional exact representation.
struct Length {
  double value = 0.0;
  std::optional<ExactLength> exact;

  Length() = default;
  explicit Length(double v) : value(v) {}
  explicit Length(const ExactLength& e) : value(e.to_double()), exact(e) {}

  Length operator+(const Length& o) const;
  Length operator*(long long n) const;
};

/// Three-way comparison that is exact when both sides carry exact values and
/// falls back to a relative epsilon otherwise.
int compare_lengths(const Length& a, const Length& b, double eps = 1e-9);

Rational rational_from_decimal(const std::string& text);

}  // namespace covspec
