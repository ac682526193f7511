#include <doctest.h>

#include "oracles.hpp"
#include "vachar/free_fields.hpp"
#include "vachar/graded_series.hpp"
#include "vachar/scalar.hpp"

#include <random>

using namespace vachar;

namespace {

Rational R(const char* text) { return parse_rational(text); }

GradedSeries q_series(std::initializer_list<std::pair<const char*, int>> terms, const char* cutoff) {
  GradedSeries s(0, R(cutoff));
  for (auto [e, c] : terms) s.add_term(R(e), {}, c);
  return s;
}

// Sparse random series of arity 1 with half-integer exponents in [0, cutoff].
GradedSeries random_series(std::mt19937& rng, const Rational& cutoff) {
  std::uniform_int_distribution<int> count(0, 5), coeff(-4, 4), charge(-2, 2);
  int twice_cut = static_cast<int>(floor_of(cutoff * 2));
  std::uniform_int_distribution<int> exp2(0, twice_cut);
  GradedSeries s(1, cutoff);
  for (int k = count(rng); k > 0; --k) s.add_term(Rational(exp2(rng), 2), {charge(rng)}, coeff(rng));
  return s;
}

}  // namespace

TEST_CASE("rational parsing and formatting") {
  CHECK(parse_rational("-3/6") == Rational(-1, 2));
  CHECK(parse_rational("7") == 7);
  CHECK(format_rational(Rational(4)) == "4/1");
  CHECK(format_rational(Rational(-1, 3)) == "-1/3");
  CHECK(format_rational_short(Rational(4)) == "4");
  CHECK_THROWS(parse_rational("0.5"));
  CHECK_THROWS(parse_rational("1/0"));
  CHECK(ratio(1, -3) == Rational(-1, 3));
  CHECK(floor_of(Rational(-1, 3)) == -1);
  CHECK(frac_of(Rational(-1, 3)) == Rational(2, 3));
}

TEST_CASE("scalar arithmetic in Q(mu)") {
  Rational mu2(1, 6);
  Scalar mu = Scalar::mu(mu2);
  Scalar x = Scalar(2) + Scalar(3) * mu;  // 2 + 3mu
  Scalar y = Scalar(1) - mu;
  // (2+3mu)(1-mu) = 2 - 3/6 + (3 - 2) mu
  CHECK(x * y == Scalar(Rational(3, 2), 1, mu2));
  CHECK((x / y) * y == x);
  CHECK(x.norm() == 4 - 9 * mu2);
  CHECK(x.conjugate() == Scalar(2) - Scalar(3) * mu);
  CHECK((mu * mu).is_rational());
  CHECK((mu * mu).as_rational() == mu2);
  CHECK_THROWS_AS(mu.as_rational(), std::domain_error);
  CHECK(Scalar(Rational(5, 7)) == Scalar(Rational(5, 7)));

  // negative mu^2 is allowed
  Scalar lam = Scalar::mu(Rational(-2, 3));
  CHECK((lam * lam).as_rational() == Rational(-2, 3));
  CHECK(parse_scalar(x.to_string(), mu2) == x);
  CHECK(parse_scalar("-1/3", mu2) == Scalar(Rational(-1, 3)));
}

TEST_CASE("scalar contexts must agree") {
  Scalar a = Scalar::mu(Rational(1, 6));
  Scalar b = Scalar::mu(Rational(1, 4));
  CHECK_THROWS(a + b);
  CHECK_NOTHROW(a + Scalar(1));
}

TEST_CASE("series addition and cancellation") {
  GradedSeries one = GradedSeries::one(0, 3);
  CHECK(series_add(one, GradedSeries(0, 3)) == one);
  GradedSeries h = GradedSeries::monomial(Rational(1, 2), {1}, 1, 3);
  GradedSeries doubled = series_add(h, h);
  CHECK(doubled.coefficient(Rational(1, 2), {1}) == 2);
  CHECK(doubled.size() == 1);
  CHECK(series_add(q_series({{"1", 1}}, "3"), q_series({{"1", -1}}, "3")).empty());
  CHECK(series_add(GradedSeries(0, 2), GradedSeries(0, 5)).cutoff() == 2);
  CHECK_THROWS(series_add(GradedSeries(0, 2), GradedSeries(1, 2)));
}

TEST_CASE("series multiplication certificates") {
  GradedSeries p = q_series({{"0", 1}, {"1", 1}}, "4");
  GradedSeries m = q_series({{"0", 1}, {"1", -1}}, "4");
  GradedSeries prod = series_mul(p, m);
  CHECK(prod == q_series({{"0", 1}, {"2", -1}}, "4"));

  GradedSeries a = GradedSeries::monomial(Rational(1, 2), {1}, 1, 3);
  GradedSeries b = GradedSeries::monomial(Rational(1, 2), {-1}, 1, 3);
  GradedSeries ab = series_mul(a, b);
  CHECK(ab.coefficient(1, {0}) == 1);
  // min(c_a + e_b, c_b + e_a) = 3 + 1/2
  CHECK(ab.cutoff() == Rational(7, 2));

  // (sum q^k)(1 - q) = 1 up to the cutoff
  GradedSeries geo(0, 6);
  for (int k = 0; k <= 6; ++k) geo.add_term(k, {}, 1);
  CHECK(series_mul(geo, m) == GradedSeries::one(0, 4));
}

TEST_CASE("series inversion") {
  GradedSeries inv = series_invert(q_series({{"0", 1}, {"1", -1}}, "5"));
  for (int k = 0; k <= 5; ++k) CHECK(inv.coefficient(k) == 1);

  GradedSeries u = GradedSeries::monomial(Rational(1, 2), {1}, 1, 3);
  GradedSeries ui = series_invert(u);
  CHECK(ui.coefficient(Rational(-1, 2), {-1}) == 1);
  CHECK(ui.size() == 1);

  // 1/prod(1-q^k) against brute-force partition counts
  GradedSeries parts = series_invert(euler_power(1, 10));
  for (int k = 0; k <= 10; ++k) CHECK(parts.coefficient(k) == oracle::partitions(k));

  CHECK_THROWS(series_invert(q_series({{"0", 2}}, "3")));
  CHECK_THROWS(series_invert(GradedSeries(0, 3)));
}

TEST_CASE("euler powers match coloured partition counts") {
  for (int d : {1, 3, 8, 15}) {
    GradedSeries e = euler_power(-d, 7);
    auto expect = oracle::coloured_partitions(d, 7);
    for (int k = 0; k <= 7; ++k) CHECK(e.coefficient(k) == expect[k]);
  }
  // q^2 coefficient of prod(1-q^k)^{-d} is d(d+3)/2
  CHECK(euler_power(-8, 3).coefficient(2) == 44);
}

TEST_CASE("charge components") {
  GradedSeries s(1, 2);
  s.add_term(0, {0}, 1);
  s.add_term(Rational(1, 2), {1}, 1);
  s.add_term(Rational(1, 2), {-1}, 1);
  GradedSeries zero = charge_component(s, {std::optional<std::int64_t>(0)});
  CHECK(zero == GradedSeries::one(0, 2));
  CHECK(charge_component(s, {std::optional<std::int64_t>(-2)}).empty());
  CHECK(s.forget_charges().coefficient(Rational(1, 2)) == 2);
  CHECK(with_charge(zero, {3}).coefficient(0, {3}) == 1);
}

TEST_CASE("coefficients above the cutoff are unknown") {
  GradedSeries s = GradedSeries::one(0, 2);
  CHECK_THROWS_AS(s.coefficient(3), std::out_of_range);
  CHECK(s.coefficient(Rational(3, 2)) == 0);
  s.add_term(5, {}, 7);
  CHECK(s.size() == 1);
  CHECK(s.truncated(1).cutoff() == 1);
  CHECK(s.shifted(Rational(1, 3), {}).cutoff() == Rational(7, 3));
  CHECK_THROWS(s.scaled(3).divided_exactly(2));
  CHECK(first_mismatch(s, s, 2) == std::nullopt);
  CHECK_THROWS(first_mismatch(s, s, 3));
}

TEST_CASE("first mismatch reports the lowest differing entry") {
  GradedSeries a = q_series({{"0", 1}, {"1", 3}, {"2", 5}}, "3");
  GradedSeries b = q_series({{"0", 1}, {"1", 4}, {"2", 6}}, "3");
  auto mm = first_mismatch(a, b, 3);
  REQUIRE(mm);
  CHECK(mm->exponent == 1);
  CHECK(mm->expected == 3);
  CHECK(mm->actual == 4);
}

TEST_CASE("property: ring axioms on random sparse series") {
  std::mt19937 rng(20240611);
  for (int trial = 0; trial < 150; ++trial) {
    Rational c(4);
    GradedSeries a = random_series(rng, c), b = random_series(rng, c), d = random_series(rng, c);
    CHECK(series_add(a, b) == series_add(b, a));
    CHECK(series_add(series_add(a, b), d) == series_add(a, series_add(b, d)));
    CHECK(series_sub(a, a).empty());

    GradedSeries ab = series_mul(a, b);
    CHECK(ab == series_mul(b, a));

    GradedSeries left = series_mul(series_mul(a, b), d);
    GradedSeries right = series_mul(a, series_mul(b, d));
    Rational cut = std::min(left.cutoff(), right.cutoff());
    CHECK(left.truncated(cut) == right.truncated(cut));

    GradedSeries dl = series_mul(a, series_add(b, d));
    GradedSeries dr = series_add(series_mul(a, b), series_mul(a, d));
    cut = std::min(dl.cutoff(), dr.cutoff());
    CHECK(dl.truncated(cut) == dr.truncated(cut));

    for (const auto& t : ab.terms()) {
      CHECK(t.coefficient != 0);
      CHECK(t.exponent <= ab.cutoff());
      CHECK(t.charge.size() == 1);
    }
  }
}

TEST_CASE("property: inverse times series is one") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> coeff(-3, 3);
  for (int trial = 0; trial < 60; ++trial) {
    GradedSeries a(1, 5);
    a.add_term(0, {0}, trial % 2 ? 1 : -1);
    for (int k = 1; k <= 10; ++k) a.add_term(Rational(k, 2), {k % 3 - 1}, coeff(rng));
    GradedSeries prod = series_mul(a, series_invert(a));
    CHECK(prod == GradedSeries::one(1, prod.cutoff()));
    CHECK(prod.cutoff() == 5);
  }
}
