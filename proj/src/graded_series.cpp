#include "vachar/graded_series.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace vachar {

namespace {

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t out;
  if (__builtin_mul_overflow(a, b, &out)) throw std::overflow_error("series exponent overflow");
  return out;
}

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t out;
  if (__builtin_add_overflow(a, b, &out)) throw std::overflow_error("series exponent overflow");
  return out;
}

std::int64_t lcm64(std::int64_t a, std::int64_t b) { return to_int64(lcm_of(Integer(a), Integer(b))); }

Charge add_charges(const Charge& a, const Charge& b) {
  Charge out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = checked_add(a[i], b[i]);
  return out;
}

void require_same_arity(const GradedSeries& a, const GradedSeries& b) {
  if (a.arity() != b.arity())
    throw std::invalid_argument("charge arity mismatch: " + std::to_string(a.arity()) + " vs " +
                                std::to_string(b.arity()));
}

// Lower bound for every exponent the series may carry (stored or unknown).
Rational exponent_floor(const GradedSeries& s) {
  auto e = s.min_exponent();
  return e ? *e : s.cutoff();
}

}  // namespace

GradedSeries::GradedSeries(std::size_t arity, Rational cutoff) : arity_(arity), cutoff_(std::move(cutoff)) {}

GradedSeries GradedSeries::one(std::size_t arity, const Rational& cutoff) {
  return monomial(0, Charge(arity, 0), 1, cutoff);
}

GradedSeries GradedSeries::monomial(const Rational& exponent, Charge charge, const Integer& coefficient,
                                    const Rational& cutoff) {
  GradedSeries s(charge.size(), cutoff);
  s.add_term(exponent, charge, coefficient);
  return s;
}

void GradedSeries::check_charge(const Charge& charge) const {
  if (charge.size() != arity_)
    throw std::invalid_argument("charge tuple of arity " + std::to_string(charge.size()) +
                                " in a series of arity " + std::to_string(arity_));
}

std::int64_t GradedSeries::numerator_for(const Rational& exponent) {
  std::int64_t d = to_int64(denominator(exponent));
  if (den_ % d != 0) {
    std::int64_t new_den = lcm64(den_, d);
    std::int64_t factor = new_den / den_;
    std::map<Key, Integer> rescaled;
    for (auto& [key, value] : entries_)
      rescaled.emplace(Key{checked_mul(key.first, factor), key.second}, std::move(value));
    entries_ = std::move(rescaled);
    den_ = new_den;
  }
  return checked_mul(to_int64(numerator(exponent)), den_ / d);
}

void GradedSeries::add_term(const Rational& exponent, const Charge& charge, const Integer& coefficient) {
  check_charge(charge);
  if (exponent > cutoff_ || coefficient == 0) return;
  std::int64_t num = numerator_for(exponent);
  auto [it, inserted] = entries_.try_emplace(Key{num, charge}, coefficient);
  if (!inserted) {
    it->second += coefficient;
    if (it->second == 0) entries_.erase(it);
  }
}

Integer GradedSeries::coefficient(const Rational& exponent, const Charge& charge) const {
  check_charge(charge);
  if (exponent > cutoff_)
    throw std::out_of_range("exponent " + format_rational(exponent) + " above cutoff " +
                            format_rational(cutoff_));
  Rational scaled = exponent * den_;
  if (!is_integer(scaled)) return 0;
  auto it = entries_.find(Key{to_int64(numerator(scaled)), charge});
  return it == entries_.end() ? Integer(0) : it->second;
}

std::optional<Rational> GradedSeries::min_exponent() const {
  if (entries_.empty()) return std::nullopt;
  return exponent_of(entries_.begin()->first.first);
}

std::vector<SeriesTerm> GradedSeries::terms() const {
  std::vector<SeriesTerm> out;
  out.reserve(entries_.size());
  for (const auto& [key, value] : entries_) out.push_back({exponent_of(key.first), key.second, value});
  return out;
}

GradedSeries GradedSeries::truncated(const Rational& new_cutoff) const {
  if (new_cutoff > cutoff_)
    throw std::invalid_argument("cannot raise a cutoff from " + format_rational(cutoff_) + " to " +
                                format_rational(new_cutoff));
  GradedSeries out(arity_, new_cutoff);
  out.den_ = den_;
  for (const auto& [key, value] : entries_)
    if (exponent_of(key.first) <= new_cutoff) out.entries_.emplace(key, value);
  return out;
}

GradedSeries GradedSeries::shifted(const Rational& exponent, const Charge& charge) const {
  check_charge(charge);
  GradedSeries out(arity_, cutoff_ + exponent);
  for (const auto& [key, value] : entries_)
    out.add_term(exponent_of(key.first) + exponent, add_charges(key.second, charge), value);
  return out;
}

GradedSeries GradedSeries::scaled(const Integer& factor) const {
  GradedSeries out(arity_, cutoff_);
  if (factor == 0) return out;
  out.den_ = den_;
  for (const auto& [key, value] : entries_) out.entries_.emplace(key, value * factor);
  return out;
}

GradedSeries GradedSeries::divided_exactly(const Integer& divisor) const {
  if (divisor == 0) throw std::domain_error("division of a series by zero");
  GradedSeries out(arity_, cutoff_);
  out.den_ = den_;
  for (const auto& [key, value] : entries_) {
    if (value % divisor != 0)
      throw std::domain_error("inexact division of coefficient " + value.str() + " by " + divisor.str());
    out.entries_.emplace(key, value / divisor);
  }
  return out;
}

GradedSeries GradedSeries::forget_charges() const {
  GradedSeries out(0, cutoff_);
  for (const auto& [key, value] : entries_) out.add_term(exponent_of(key.first), {}, value);
  return out;
}

bool operator==(const GradedSeries& lhs, const GradedSeries& rhs) {
  if (lhs.arity_ != rhs.arity_ || lhs.cutoff_ != rhs.cutoff_ || lhs.size() != rhs.size()) return false;
  auto a = lhs.terms();
  auto b = rhs.terms();
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].exponent != b[i].exponent || a[i].charge != b[i].charge ||
        a[i].coefficient != b[i].coefficient)
      return false;
  }
  return true;
}

std::string GradedSeries::to_text() const {
  std::ostringstream os;
  for (const auto& term : terms()) {
    os << format_rational(term.exponent) << '\t';
    for (std::size_t i = 0; i < term.charge.size(); ++i) os << (i ? "," : "") << term.charge[i];
    os << '\t' << term.coefficient << '\n';
  }
  return os.str();
}

GradedSeries series_add(const GradedSeries& a, const GradedSeries& b) {
  require_same_arity(a, b);
  GradedSeries out(a.arity(), std::min(a.cutoff(), b.cutoff()));
  for (const auto& t : a.terms()) out.add_term(t.exponent, t.charge, t.coefficient);
  for (const auto& t : b.terms()) out.add_term(t.exponent, t.charge, t.coefficient);
  return out;
}

GradedSeries series_sub(const GradedSeries& a, const GradedSeries& b) {
  return series_add(a, b.scaled(-1));
}

GradedSeries multiply_capped(const GradedSeries& a, const GradedSeries& b, const Rational& cap) {
  require_same_arity(a, b);
  GradedSeries out(a.arity(), cap);
  if (a.empty() || b.empty()) return out;

  std::int64_t den = lcm64(a.den_, b.den_);
  std::int64_t fa = den / a.den_;
  std::int64_t fb = den / b.den_;
  Rational cap_scaled = cap * den;
  std::int64_t cap_num = to_int64(floor_of(cap_scaled));

  std::vector<std::pair<std::int64_t, const std::pair<const GradedSeries::Key, Integer>*>> bs;
  bs.reserve(b.entries_.size());
  for (const auto& entry : b.entries_) bs.emplace_back(checked_mul(entry.first.first, fb), &entry);

  out.den_ = den;
  for (const auto& [ka, va] : a.entries_) {
    std::int64_t ea = checked_mul(ka.first, fa);
    for (const auto& [eb, entry] : bs) {
      std::int64_t e = checked_add(ea, eb);
      if (e > cap_num) break;  // b entries are sorted by exponent
      GradedSeries::Key key{e, add_charges(ka.second, entry->first.second)};
      auto [it, inserted] = out.entries_.try_emplace(std::move(key), va * entry->second);
      if (!inserted) it->second += va * entry->second;
    }
  }
  for (auto it = out.entries_.begin(); it != out.entries_.end();) {
    if (it->second == 0)
      it = out.entries_.erase(it);
    else
      ++it;
  }
  return out;
}

GradedSeries series_mul(const GradedSeries& a, const GradedSeries& b) {
  Rational cap = std::min(a.cutoff() + exponent_floor(b), b.cutoff() + exponent_floor(a));
  return multiply_capped(a, b, cap);
}

GradedSeries series_invert(const GradedSeries& a) {
  auto terms = a.terms();
  if (terms.empty()) throw std::domain_error("cannot invert an empty series");
  const SeriesTerm& lead = terms.front();
  if (terms.size() > 1 && terms[1].exponent == lead.exponent)
    throw std::domain_error("leading exponent " + format_rational(lead.exponent) +
                            " carries several charges; no unit leading term");
  if (lead.coefficient != 1 && lead.coefficient != -1)
    throw std::domain_error("leading coefficient " + lead.coefficient.str() + " is not a unit");

  // a = lead * (1 + r) with r supported at positive relative exponents.
  Rational relative_cutoff = a.cutoff() - lead.exponent;
  Charge zero(a.arity(), 0);
  GradedSeries minus_r(a.arity(), relative_cutoff);
  for (std::size_t i = 1; i < terms.size(); ++i) {
    Charge c(a.arity());
    for (std::size_t k = 0; k < c.size(); ++k) c[k] = terms[i].charge[k] - lead.charge[k];
    minus_r.add_term(terms[i].exponent - lead.exponent, c, -terms[i].coefficient * lead.coefficient);
  }

  GradedSeries sum = GradedSeries::one(a.arity(), relative_cutoff);
  GradedSeries power = sum;
  while (true) {
    power = multiply_capped(power, minus_r, relative_cutoff);
    if (power.empty()) break;
    sum = series_add(sum, power);
  }

  Charge neg_lead(a.arity());
  for (std::size_t k = 0; k < neg_lead.size(); ++k) neg_lead[k] = -lead.charge[k];
  return sum.shifted(-lead.exponent, neg_lead).scaled(lead.coefficient);
}

GradedSeries charge_component(const GradedSeries& a,
                              const std::vector<std::optional<std::int64_t>>& selector) {
  if (selector.size() != a.arity())
    throw std::invalid_argument("selector arity " + std::to_string(selector.size()) +
                                " does not match series arity " + std::to_string(a.arity()));
  std::size_t kept = 0;
  for (const auto& s : selector) kept += s ? 0 : 1;
  GradedSeries out(kept, a.cutoff());
  out.den_ = a.den_;
  for (const auto& [key, value] : a.entries_) {
    Charge projected;
    projected.reserve(kept);
    bool match = true;
    for (std::size_t i = 0; i < selector.size(); ++i) {
      if (!selector[i]) {
        projected.push_back(key.second[i]);
      } else if (*selector[i] != key.second[i]) {
        match = false;
        break;
      }
    }
    if (match) out.entries_.emplace(GradedSeries::Key{key.first, std::move(projected)}, value);
  }
  return out;
}

GradedSeries with_charge(const GradedSeries& a, const Charge& charge) {
  if (a.arity() != 0) throw std::invalid_argument("with_charge expects a pure q-series");
  GradedSeries out(charge.size(), a.cutoff());
  out.den_ = a.den_;
  for (const auto& [key, value] : a.entries_) out.entries_.emplace(GradedSeries::Key{key.first, charge}, value);
  return out;
}

std::optional<SeriesMismatch> first_mismatch(const GradedSeries& expected, const GradedSeries& actual,
                                             const Rational& up_to) {
  require_same_arity(expected, actual);
  if (expected.cutoff() < up_to || actual.cutoff() < up_to)
    throw std::invalid_argument("comparison up to " + format_rational(up_to) +
                                " exceeds a certified cutoff (" + format_rational(expected.cutoff()) +
                                ", " + format_rational(actual.cutoff()) + ")");
  GradedSeries diff = series_sub(actual, expected).truncated(up_to);
  if (diff.empty()) return std::nullopt;
  SeriesTerm t = diff.terms().front();
  return SeriesMismatch{t.exponent, t.charge, expected.coefficient(t.exponent, t.charge),
                        actual.coefficient(t.exponent, t.charge)};
}

}  // namespace vachar
