#include "vachar/free_fields.hpp"

#include <stdexcept>

namespace vachar {

namespace {

Integer binomial(std::int64_t n, std::int64_t k) {
  if (k < 0 || k > n) return 0;
  Integer out = 1;
  for (std::int64_t i = 1; i <= k; ++i) out = out * (n - k + i) / i;
  return out;
}

Charge scaled_charge(const Charge& c, std::int64_t j) {
  Charge out(c.size());
  for (std::size_t i = 0; i < c.size(); ++i) out[i] = c[i] * j;
  return out;
}

Charge negated(const Charge& c) { return scaled_charge(c, -1); }

// (1 - x)^{-rank} with x = u^charge q^weight, truncated at cutoff.
GradedSeries bosonic_factor(int rank, const Rational& weight, const Charge& charge, const Rational& cutoff) {
  GradedSeries f(charge.size(), cutoff);
  for (std::int64_t j = 0; weight * j <= cutoff; ++j)
    f.add_term(weight * j, scaled_charge(charge, j), binomial(rank - 1 + j, j));
  return f;
}

// (1 + x)^{rank}
GradedSeries fermionic_factor(int rank, const Rational& weight, const Charge& charge, const Rational& cutoff) {
  GradedSeries f(charge.size(), cutoff);
  for (std::int64_t j = 0; j <= rank && weight * j <= cutoff; ++j)
    f.add_term(weight * j, scaled_charge(charge, j), binomial(rank, j));
  return f;
}

void require_cutoff(const Rational& cutoff) {
  if (cutoff < 0) throw std::invalid_argument("negative cutoff " + format_rational(cutoff));
}

}  // namespace

GradedSeries euler_power(int power, const Rational& cutoff) {
  require_cutoff(cutoff);
  GradedSeries out = GradedSeries::one(0, cutoff);
  for (std::int64_t k = 1; k <= cutoff; ++k) {
    GradedSeries f(0, cutoff);
    if (power >= 0) {
      for (std::int64_t j = 0; j <= power && k * j <= cutoff; ++j)
        f.add_term(Rational(k * j), {}, (j % 2 ? -1 : 1) * binomial(power, j));
    } else {
      for (std::int64_t j = 0; k * j <= cutoff; ++j) f.add_term(Rational(k * j), {}, binomial(-power - 1 + j, j));
    }
    out = multiply_capped(out, f, cutoff);
  }
  return out;
}

GradedSeries char_betagamma(int m, const Rational& cutoff) { return char_betagamma(m, cutoff, Charge{1}); }

GradedSeries char_betagamma(int m, const Rational& cutoff, const Charge& beta_charge) {
  if (m < 1) throw std::invalid_argument("beta-gamma rank must be >= 1");
  require_cutoff(cutoff);
  GradedSeries out = GradedSeries::one(beta_charge.size(), cutoff);
  for (Rational w(1, 2); w <= cutoff; w += 1) {
    out = multiply_capped(out, bosonic_factor(m, w, beta_charge, cutoff), cutoff);
    out = multiply_capped(out, bosonic_factor(m, w, negated(beta_charge), cutoff), cutoff);
  }
  return out;
}

GradedSeries char_bc(int n, const Rational& cutoff) { return char_bc(n, cutoff, Charge{1}); }

GradedSeries char_bc(int n, const Rational& cutoff, const Charge& b_charge) {
  if (n < 1) throw std::invalid_argument("bc rank must be >= 1");
  require_cutoff(cutoff);
  GradedSeries out = GradedSeries::one(b_charge.size(), cutoff);
  for (Rational w(1, 2); w <= cutoff; w += 1) {
    out = multiply_capped(out, fermionic_factor(n, w, b_charge, cutoff), cutoff);
    out = multiply_capped(out, fermionic_factor(n, w, negated(b_charge), cutoff), cutoff);
  }
  return out;
}

FockSpec FockSpec::integral(const Rational& kappa, std::int64_t s) {
  return FockSpec{kappa, s, Rational(s) * s};
}

Rational FockSpec::top_weight() const {
  if (kappa == 0) throw std::invalid_argument("Heisenberg generator of norm zero");
  return lambda_squared / (2 * kappa);
}

GradedSeries fock_q_series(const Rational& top_weight, const Rational& cutoff) {
  if (cutoff < top_weight) return GradedSeries(0, cutoff);
  return euler_power(-1, cutoff - top_weight).shifted(top_weight, {});
}

GradedSeries char_fock(const FockSpec& spec, const Rational& cutoff) {
  Rational top = spec.top_weight();
  if (cutoff < top) return GradedSeries(1, cutoff);
  return with_charge(euler_power(-1, cutoff - top), {spec.charge}).shifted(top, {0});
}

GradedSeries divide_by_fock(const GradedSeries& a, const Rational& top_weight) {
  Rational floor = a.min_exponent().value_or(a.cutoff());
  Charge zero(a.arity(), 0);
  GradedSeries inverse = with_charge(euler_power(1, std::max(Rational(0), a.cutoff() - floor)), zero);
  return series_mul(a, inverse).shifted(-top_weight, zero);
}

}  // namespace vachar
