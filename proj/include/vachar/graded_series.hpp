#pragma once

#include "vachar/scalar.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace vachar {

using Charge = std::vector<std::int64_t>;

struct SeriesTerm {
  Rational exponent;
  Charge charge;
  Integer coefficient;
};

/*
 * A truncated formal series  sum c(e, k) q^e u^k  with rational exponents e,
 * integer charge tuples k of fixed arity and integer coefficients.
 *
 * The cutoff is a certificate: every coefficient with e <= cutoff is known
 * exactly (absent entries are zero), nothing above the cutoff is stored.
 * Exponents are kept as int64 numerators over one common denominator per
 * series.
 */
class GradedSeries {
 public:
  GradedSeries(std::size_t arity, Rational cutoff);

  static GradedSeries one(std::size_t arity, const Rational& cutoff);
  static GradedSeries monomial(const Rational& exponent, Charge charge, const Integer& coefficient,
                               const Rational& cutoff);

  std::size_t arity() const { return arity_; }
  const Rational& cutoff() const { return cutoff_; }
  bool empty() const { return entries_.empty(); }
  std::size_t size() const { return entries_.size(); }

  /// Throws std::out_of_range for exponents above the cutoff (not known).
  Integer coefficient(const Rational& exponent, const Charge& charge) const;
  /// Coefficient of q^exponent for arity-0 series.
  Integer coefficient(const Rational& exponent) const { return coefficient(exponent, {}); }

  std::optional<Rational> min_exponent() const;
  /// Terms sorted by exponent, then charge (lexicographic).
  std::vector<SeriesTerm> terms() const;

  /// Accumulates into the entry; exponents above the cutoff are dropped.
  void add_term(const Rational& exponent, const Charge& charge, const Integer& coefficient);

  GradedSeries truncated(const Rational& new_cutoff) const;
  /// Multiplies by q^exponent u^charge; the cutoff moves with it.
  GradedSeries shifted(const Rational& exponent, const Charge& charge) const;
  GradedSeries scaled(const Integer& factor) const;
  /// Divides every coefficient by `divisor`; throws if any division is inexact.
  GradedSeries divided_exactly(const Integer& divisor) const;
  /// Sums over all charges, giving an arity-0 series.
  GradedSeries forget_charges() const;

  friend bool operator==(const GradedSeries& lhs, const GradedSeries& rhs);

  /// One line per entry: "num/den<TAB>k1,k2,...<TAB>coefficient".
  std::string to_text() const;

 private:
  using Key = std::pair<std::int64_t, Charge>;

  friend GradedSeries series_add(const GradedSeries&, const GradedSeries&);
  friend GradedSeries series_mul(const GradedSeries&, const GradedSeries&);
  friend GradedSeries multiply_capped(const GradedSeries&, const GradedSeries&, const Rational&);
  friend GradedSeries charge_component(const GradedSeries&,
                                       const std::vector<std::optional<std::int64_t>>&);
  friend GradedSeries with_charge(const GradedSeries&, const Charge&);

  Rational exponent_of(std::int64_t numerator) const { return Rational(numerator, den_); }
  /// Rescales the stored numerators so that `exponent` is representable.
  std::int64_t numerator_for(const Rational& exponent);
  void check_charge(const Charge& charge) const;

  std::size_t arity_;
  Rational cutoff_;
  std::int64_t den_ = 1;
  std::map<Key, Integer> entries_;
};

/// Pointwise sum; cutoff = min of the cutoffs.
GradedSeries series_add(const GradedSeries& a, const GradedSeries& b);
GradedSeries series_sub(const GradedSeries& a, const GradedSeries& b);

/// Convolution, certified up to min(c_a + e_b, c_b + e_a) where e are the
/// minimal stored exponents (an empty series counts its cutoff as minimum).
GradedSeries series_mul(const GradedSeries& a, const GradedSeries& b);

/// Convolution keeping only exponents <= cap. The caller vouches that both
/// factors are complete up to the cap's requirements.
GradedSeries multiply_capped(const GradedSeries& a, const GradedSeries& b, const Rational& cap);

/// Multiplicative inverse. Requires a unique entry of minimal exponent whose
/// coefficient is +1 or -1. The result is certified up to c - 2 e_min.
GradedSeries series_invert(const GradedSeries& a);

/// Entries whose charge matches every fixed coordinate of `selector`; the
/// fixed coordinates are projected out of the result.
GradedSeries charge_component(const GradedSeries& a,
                              const std::vector<std::optional<std::int64_t>>& selector);

/// Gives an arity-0 series the constant charge tuple `charge`.
GradedSeries with_charge(const GradedSeries& a, const Charge& charge);

struct SeriesMismatch {
  Rational exponent;
  Charge charge;
  Integer expected;
  Integer actual;
};

/// First (in canonical order) differing entry with exponent <= up_to.
/// Throws if either series is not certified up to `up_to`.
std::optional<SeriesMismatch> first_mismatch(const GradedSeries& expected, const GradedSeries& actual,
                                             const Rational& up_to);

}  // namespace vachar
