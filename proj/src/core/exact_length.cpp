#include "core/exact_length.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace covspec {

namespace {

long double to_long_double(const Rational& q) {
  return boost::multiprecision::numerator(q).convert_to<long double>() /
         boost::multiprecision::denominator(q).convert_to<long double>();
}

std::string rational_string(const Rational& q) {
  return q.str();
}

}  // namespace

int ExactLength::sign() const {
  if (pi_coeff_ == 0) return rational_ == 0 ? 0 : (rational_ > 0 ? 1 : -1);
  if (rational_ == 0) return pi_coeff_ > 0 ? 1 : -1;
  if ((rational_ > 0) == (pi_coeff_ > 0)) return rational_ > 0 ? 1 : -1;
  // Opposite signs: a + b*pi is never zero, so long double resolves it
  // unless the coefficients are astronomically large.
  long double v = to_long_double(rational_) +
                  to_long_double(pi_coeff_) * std::numbers::pi_v<long double>;
  return v > 0 ? 1 : -1;
}

double ExactLength::to_double() const {
  return static_cast<double>(to_long_double(rational_) +
                             to_long_double(pi_coeff_) * std::numbers::pi_v<long double>);
}

ExactLength ExactLength::operator+(const ExactLength& o) const {
  return ExactLength(rational_ + o.rational_, pi_coeff_ + o.pi_coeff_);
}
ExactLength ExactLength::operator-(const ExactLength& o) const {
  return ExactLength(rational_ - o.rational_, pi_coeff_ - o.pi_coeff_);
}
ExactLength ExactLength::operator-() const { return ExactLength(-rational_, -pi_coeff_); }
ExactLength ExactLength::operator*(const Rational& s) const {
  return ExactLength(rational_ * s, pi_coeff_ * s);
}
ExactLength ExactLength::operator/(const Rational& s) const {
  if (s == 0) throw std::domain_error("division of exact length by zero");
  return ExactLength(rational_ / s, pi_coeff_ / s);
}
ExactLength& ExactLength::operator+=(const ExactLength& o) {
  rational_ += o.rational_;
  pi_coeff_ += o.pi_coeff_;
  return *this;
}

std::strong_ordering ExactLength::operator<=>(const ExactLength& o) const {
  int s = (*this - o).sign();
  if (s < 0) return std::strong_ordering::less;
  if (s > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::string ExactLength::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  if (rational_ != 0) out = rational_string(rational_);
  if (pi_coeff_ != 0) {
    std::string pi_term;
    if (pi_coeff_ == 1) {
      pi_term = "pi";
    } else if (pi_coeff_ == -1) {
      pi_term = "-pi";
    } else {
      auto num = boost::multiprecision::numerator(pi_coeff_);
      auto den = boost::multiprecision::denominator(pi_coeff_);
      if (den == 1) {
        pi_term = num.str() + "*pi";
      } else if (num == 1) {
        pi_term = "pi/" + den.str();
      } else if (num == -1) {
        pi_term = "-pi/" + den.str();
      } else {
        pi_term = num.str() + "*pi/" + den.str();
      }
    }
    if (!out.empty() && pi_term.front() != '-') out += "+";
    out += pi_term;
  }
  return out;
}

Length Length::operator+(const Length& o) const {
  Length r(value + o.value);
  if (exact && o.exact) {
    r.exact = *exact + *o.exact;
    r.value = r.exact->to_double();
  }
  return r;
}

Length Length::operator*(long long n) const {
  Length r(value * static_cast<double>(n));
  if (exact) {
    r.exact = *exact * Rational(n);
    r.value = r.exact->to_double();
  }
  return r;
}

int compare_lengths(const Length& a, const Length& b, double eps) {
  if (a.exact && b.exact) {
    auto c = *a.exact <=> *b.exact;
    return c < 0 ? -1 : (c > 0 ? 1 : 0);
  }
  double scale = std::max({1.0, std::abs(a.value), std::abs(b.value)});
  if (std::abs(a.value - b.value) <= eps * scale) return 0;
  return a.value < b.value ? -1 : 1;
}

Rational rational_from_decimal(const std::string& text) {
  // Accepts digits with an optional fractional part and exponent, e.g.
  // "12", "0.125", "1e-3". Exactness matters: 0.1 becomes 1/10.
  std::size_t pos = 0;
  std::string mantissa;
  long long frac_digits = 0;
  bool seen_dot = false;
  while (pos < text.size() && (std::isdigit(static_cast<unsigned char>(text[pos])) || text[pos] == '.')) {
    if (text[pos] == '.') {
      if (seen_dot) throw std::invalid_argument("malformed number: " + text);
      seen_dot = true;
    } else {
      mantissa.push_back(text[pos]);
      if (seen_dot) ++frac_digits;
    }
    ++pos;
  }
  if (mantissa.empty()) throw std::invalid_argument("malformed number: " + text);
  long long exponent = 0;
  if (pos < text.size() && (text[pos] == 'e' || text[pos] == 'E')) {
    ++pos;
    std::size_t used = 0;
    exponent = std::stoll(text.substr(pos), &used);
    pos += used;
  }
  if (pos != text.size()) throw std::invalid_argument("malformed number: " + text);
  // cpp_int treats a leading 0 as an octal prefix.
  std::size_t nz = mantissa.find_first_not_of('0');
  mantissa = nz == std::string::npos ? "0" : mantissa.substr(nz);
  boost::multiprecision::cpp_int num(mantissa);
  long long shift = exponent - frac_digits;
  boost::multiprecision::cpp_int ten_pow = boost::multiprecision::pow(
      boost::multiprecision::cpp_int(10), static_cast<unsigned>(shift < 0 ? -shift : shift));
  if (shift >= 0) return Rational(num * ten_pow);
  return Rational(num, ten_pow);
}

}  // namespace covspec
