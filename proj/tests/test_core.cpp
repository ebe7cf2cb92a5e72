#include <cmath>
#include <functional>
#include <numbers>
#include <random>

#include "core/exact_length.hpp"
#include "core/lattice.hpp"
#include "core/spectrum.hpp"
#include "core/word.hpp"
#include "doctest.h"
#include "model/expr.hpp"

using namespace covspec;

TEST_CASE("reduce_word cancels adjacent inverse pairs") {
  CHECK(reduce_word(parse_word("a A b")) == parse_word("b"));
  CHECK(reduce_word(Word()).empty());
  CHECK(reduce_word(parse_word("a b B a")) == parse_word("a a"));
}

TEST_CASE("cyclic_reduce splits conjugator") {
  auto r = cyclic_reduce(parse_word("b a B"));
  CHECK(r.core == parse_word("a"));
  CHECK(r.conjugator == parse_word("b"));
  r = cyclic_reduce(parse_word("a b"));
  CHECK(r.core == parse_word("a b"));
  CHECK(r.conjugator.empty());
  r = cyclic_reduce(parse_word("b a a B"));
  CHECK(r.core == parse_word("a a"));
  CHECK(r.conjugator == parse_word("b"));
}

TEST_CASE("word properties on random words") {
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> gen(0, 2), sgn(0, 1), len(0, 12);
  auto random_word = [&] {
    std::vector<Letter> ls;
    int n = len(rng);
    for (int i = 0; i < n; ++i) ls.push_back({gen(rng), sgn(rng) ? 1 : -1});
    return Word(ls);
  };
  for (int t = 0; t < 200; ++t) {
    Word w = random_word(), u = random_word();
    Word r = reduce_word(w);
    CHECK(reduce_word(r) == r);
    CHECK(r.size() <= w.size());
    CHECK(reduce_word(w * w.inverse()).empty());
    auto c = cyclic_reduce(w);
    CHECK(c.core.size() <= r.size());
    CHECK(same_element(c.conjugator * c.core * c.conjugator.inverse(), w));
    CHECK(conjugacy_normal_form(u * w * u.inverse()) == conjugacy_normal_form(w));
  }
}

TEST_CASE("exact lengths") {
  ExactLength a(Rational(1, 3), 2), b(Rational(2, 3), -1);
  CHECK((a + b) == ExactLength(1, 1));
  CHECK(ExactLength(0, 1) > ExactLength(3));
  CHECK(ExactLength(0, 1) < ExactLength(Rational(315, 100)));
  CHECK(ExactLength(0, Rational(4, 3)).to_string() == "4*pi/3");
  CHECK(rational_from_decimal("2.5e-1") == Rational(1, 4));
}

TEST_CASE("lattice shift length") {
  CHECK(lattice_shift_length({1, 0}, {3, 2}) == doctest::Approx(6));
  CHECK(lattice_shift_length({0, 0}, {3, 2}) == 0);
  CHECK(lattice_shift_length({1, 1}, {3, 2}) == doctest::Approx(std::sqrt(52.0)));
  CHECK_THROWS_AS(lattice_shift_length({1}, {3, 2}), std::invalid_argument);
}

TEST_CASE("lattice shift length equals brute-force translate distance") {
  // Distance between a point and its image in the universal cover, minimized
  // over translates of the fundamental domain, for the flat torus.
  std::vector<double> r{3, 2};
  for (int a = -2; a <= 2; ++a) {
    for (int b = -2; b <= 2; ++b) {
      double best = 1e300;
      for (double x = 0; x < 6; x += 0.5) {
        for (double y = 0; y < 4; y += 0.5) {
          double dx = (x + 6 * a) - x, dy = (y + 4 * b) - y;
          best = std::min(best, std::hypot(dx, dy));
        }
      }
      CHECK(lattice_shift_length({a, b}, r) == doctest::Approx(best));
    }
  }
}

TEST_CASE("lattice norm properties") {
  std::vector<double> r{1.5, 0.7, 2.0};
  std::mt19937 rng(5);
  std::uniform_int_distribution<int> c(-3, 3);
  for (int t = 0; t < 100; ++t) {
    LatticeElement u{c(rng), c(rng), c(rng)}, v{c(rng), c(rng), c(rng)}, s(3);
    for (int i = 0; i < 3; ++i) s[i] = u[i] + v[i];
    CHECK(lattice_shift_length(s, r) <= lattice_shift_length(u, r) + lattice_shift_length(v, r) + 1e-12);
    LatticeElement u3{3 * u[0], 3 * u[1], 3 * u[2]};
    CHECK(lattice_shift_length(u3, r) == doctest::Approx(3 * lattice_shift_length(u, r)));
  }
}

namespace {

// Independent filtration oracle: at each test delta, the sublattice spanned by
// short vectors, compared by index of the spanned lattice.
std::vector<double> brute_force_torus_spectrum(const std::vector<double>& r) {
  auto span_at = [&](double delta) {
    std::vector<LatticeElement> gens;
    int k = static_cast<int>(r.size());
    std::vector<int> box(k);
    for (int i = 0; i < k; ++i) box[i] = static_cast<int>(std::ceil(delta / r[i])) + 1;
    LatticeElement v(k);
    std::function<void(int)> rec = [&](int i) {
      if (i == k) {
        if (lattice_shift_length(v, r) < 2 * delta - 1e-12) gens.push_back(v);
        return;
      }
      for (long long x = -box[i]; x <= box[i]; ++x) {
        v[i] = x;
        rec(i + 1);
      }
    };
    rec(0);
    return hermite_normal_form(gens, r.size());
  };
  std::vector<double> out;
  for (double d = 0.05; d < 10; d += 0.05) {
    if (span_at(d) != span_at(d + 0.05 - 1e-9) || span_at(d) != span_at(d + 1e-7)) {
      // Refine the change point by bisection.
      double lo = d, hi = d + 0.05;
      for (int it = 0; it < 60; ++it) {
        double mid = (lo + hi) / 2;
        if (span_at(mid) == span_at(lo)) lo = mid; else hi = mid;
      }
      if (out.empty() || std::abs(out.back() - lo) > 1e-6) out.push_back(lo);
    }
  }
  return out;
}

}  // namespace

TEST_CASE("torus covering spectrum") {
  auto s = lattice_covering_spectrum({ExactLength(3), ExactLength(2), ExactLength(1)});
  REQUIRE(s.size() == 3);
  CHECK(*s.values()[0].exact == ExactLength(1));
  CHECK(*s.values()[1].exact == ExactLength(2));
  CHECK(*s.values()[2].exact == ExactLength(3));
  auto one = lattice_covering_spectrum({ExactLength(5)});
  REQUIRE(one.size() == 1);
  CHECK(*one.values()[0].exact == ExactLength(5));
  auto equal = lattice_covering_spectrum({ExactLength(2), ExactLength(2)});
  REQUIRE(equal.size() == 1);
  CHECK(*equal.values()[0].exact == ExactLength(2));
  auto bf = brute_force_torus_spectrum({2, 2});
  REQUIRE(bf.size() == 1);
  CHECK(bf[0] == doctest::Approx(2.0).epsilon(1e-6));
  CHECK(lattice_covering_spectrum({}).empty());
  CHECK_THROWS(lattice_covering_spectrum({ExactLength(0)}));
}

TEST_CASE("torus spectrum matches brute force and scales") {
  std::vector<std::vector<double>> cases{{1.5, 0.5}, {1, 1, 3}, {2.5}, {0.75, 2.25}};
  for (const auto& r : cases) {
    std::vector<ExactLength> ex;
    for (double x : r) ex.emplace_back(rational_from_decimal(std::to_string(x)));
    auto s = lattice_covering_spectrum(ex).as_doubles();
    auto bf = brute_force_torus_spectrum(r);
    REQUIRE(s.size() == bf.size());
    for (std::size_t i = 0; i < s.size(); ++i) CHECK(s[i] == doctest::Approx(bf[i]).epsilon(1e-6));
    std::vector<ExactLength> scaled;
    for (auto& e : ex) scaled.push_back(e * Rational(7, 3));
    auto t = lattice_covering_spectrum(scaled);
    auto orig = lattice_covering_spectrum(ex);
    REQUIRE(t.size() == orig.size());
    for (std::size_t i = 0; i < t.size(); ++i) CHECK(*t.values()[i].exact == *orig.values()[i].exact * Rational(7, 3));
  }
}

TEST_CASE("accumulation detector") {
  std::vector<double> v;
  for (int j = 50; j >= 1; --j) v.push_back(std::numbers::pi * (1 + 1.0 / j));
  auto acc = detect_lower_accumulation(v);
  REQUIRE(acc);
  CHECK(std::abs(acc->value - std::numbers::pi) < 1e-6);
  CHECK_FALSE(detect_lower_accumulation({1, 2, 3, 4, 5, 6}));
}

TEST_CASE("expression parser") {
  using namespace covspec::model;
  CHECK(evaluate(parse("-r^2"), 3) == doctest::Approx(-9));
  CHECK(evaluate(parse("2^3^2"), 0) == doctest::Approx(512));
  CHECK(evaluate(parse("1+exp(-r^2)"), 0) == doctest::Approx(2));
  CHECK(evaluate(parse("sqrt(z^2+1)"), 0) == doctest::Approx(1));
  auto len = parse_length("2*pi*(1+1/3)");
  REQUIRE(len.exact);
  CHECK(*len.exact == ExactLength(0, Rational(8, 3)));
  try {
    parse("1 + foo(r)");
    FAIL("expected parse error");
  } catch (const ParseError& e) {
    CHECK(e.column() == 5);
  }
  CHECK_THROWS_AS(parse("(1+r"), ParseError);
  for (const char* s : {"1+exp(-r^2)", "exp(r)", "(1+r^2)^(-1/4)", "r/(1+r)", "-r^2+cos(2*r)/3", "2^-1"}) {
    auto e = parse(s);
    auto back = parse(to_string(e));
    for (double r : {0.3, 1.1, 2.7}) CHECK(evaluate(back, r) == doctest::Approx(evaluate(e, r)));
  }
}

TEST_CASE("symbolic derivatives agree with finite differences") {
  using namespace covspec::model;
  for (const char* s : {"1+exp(-r^2)", "exp(r)", "sqrt(r^2+1)", "1+exp(-r)", "(1+r^2)^(-1/4)", "sin(r)*r",
                        "1+1/(1+r)", "r", "2*r+1", "sqrt(r)"}) {
    WarpFunction f = WarpFunction::parse(s);
    for (double r : {0.5, 1.0, 1.7, 3.2}) {
      double h = 1e-6;
      double fd1 = (f(r + h) - f(r - h)) / (2 * h);
      double fd2 = (f.d1(r + h) - f.d1(r - h)) / (2 * h);
      CHECK(f.d1(r) == doctest::Approx(fd1).epsilon(1e-5));
      CHECK(f.d2(r) == doctest::Approx(fd2).epsilon(1e-5));
    }
  }
}
