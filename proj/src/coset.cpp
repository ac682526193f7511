#include "vachar/coset.hpp"

#include "vachar/free_fields.hpp"

#include <cstdlib>
#include <stdexcept>

namespace vachar {

namespace {

std::int64_t residue(std::int64_t a, int n) {
  std::int64_t r = a % n;
  return r < 0 ? r + n : r;
}

void require_reaches(const Rational& cutoff, const Rational& lead, const std::string& what) {
  if (cutoff < lead)
    throw std::invalid_argument("cutoff " + format_rational(cutoff) + " is below the leading exponent " +
                                format_rational(lead) + " of " + what);
}

}  // namespace

DominantWeight lambda_s(int m, std::int64_t s) {
  if (s >= 0) return DominantWeight::multiple_of_fundamental(m, 1, static_cast<int>(s));
  return DominantWeight::multiple_of_fundamental(m, m - 1, static_cast<int>(-s));
}

Rational h_w_minus_one(int m, std::int64_t s) {
  std::int64_t abs_s = std::llabs(s);
  return Rational(abs_s * (m + abs_s), 2 * m);
}

Rational h_l_one(int n, std::int64_t a) {
  std::int64_t r = residue(a, n);
  return Rational(r * (n - r), 2 * n);
}

CosetCharacter char_W(int m, std::int64_t s, const Rational& cutoff) {
  if (m < 2) throw std::invalid_argument("char_W needs m >= 2");
  std::string what = "W_{-1}(lambda_" + std::to_string(s) + ") of rank " + std::to_string(m);
  require_reaches(cutoff, h_w_minus_one(m, s), what);
  Rational top = FockSpec::integral(-m, s).top_weight();
  GradedSeries free_field = char_betagamma(m, cutoff + top);
  GradedSeries component = charge_component(free_field, {s});
  return {CosetFamily::WMinusOne, m, s, divide_by_fock(component, top)};
}

CosetCharacter char_L1(int n, std::int64_t a, const Rational& cutoff) {
  if (n < 1) throw std::invalid_argument("char_L1 needs n >= 1");
  std::string what = "L_1(omega_" + std::to_string(a) + ") of rank " + std::to_string(n);
  require_reaches(cutoff, h_l_one(n, a), what);
  Rational top = FockSpec::integral(n, -a).top_weight();
  GradedSeries free_field = char_bc(n, cutoff + top);
  GradedSeries component = charge_component(free_field, {-a});
  return {CosetFamily::LOne, n, a, divide_by_fock(component, top)};
}

GradedSeries verma_char_oracle(int m, std::int64_t s, const Rational& cutoff) {
  if (m < 2) throw std::invalid_argument("verma_char_oracle needs m >= 2");
  DominantWeight w = lambda_s(m, s);
  Rational h = sugawara_h(m, -1, w);
  if (cutoff < h) return GradedSeries(0, cutoff);
  return euler_power(-(m * m - 1), cutoff - h).shifted(h, {}).scaled(weyl_dim(w));
}

VerificationReport verify_coset_identity(int m, std::int64_t s, const Rational& cutoff) {
  VerificationReport report;
  report.cutoff = cutoff;
  GradedSeries expected(0, cutoff);
  if (m >= 3) {
    report.identity = "char_W(" + std::to_string(m) + "," + std::to_string(s) + ") = verma(" +
                      std::to_string(m) + "," + std::to_string(s) + ")";
    expected = verma_char_oracle(m, s, cutoff);
  } else if (m == 2) {
    report.identity = "char_W(2," + std::to_string(s) + ") = sum_i verma(2,|s|+2i)";
    for (std::int64_t sp = std::llabs(s); h_w_minus_one(2, sp) <= cutoff; sp += 2) {
      expected = series_add(expected, verma_char_oracle(2, sp, cutoff));
      report.notes.push_back("summand s'=" + std::to_string(sp) + " at h=" +
                             format_rational_short(h_w_minus_one(2, sp)));
    }
  } else {
    throw std::invalid_argument("verify_coset_identity needs m >= 2");
  }
  GradedSeries actual = char_W(m, s, cutoff).series;
  report.first_mismatch = first_mismatch(expected, actual, cutoff);
  report.passed = !report.first_mismatch.has_value();
  return report;
}

}  // namespace vachar
