#pragma once

// Characters of the free-field building blocks: beta-gamma systems,
// bc systems and Heisenberg Fock modules.

#include "vachar/graded_series.hpp"

namespace vachar {

/// prod_{k>=1} (1 - q^k)^power, arity 0. Negative powers give partition-type
/// generating functions.
GradedSeries euler_power(int power, const Rational& cutoff);

/// prod_i prod_{k>=0} (1 - u q^{k+1/2})^{-1} (1 - u^{-1} q^{k+1/2})^{-1}.
/// Each beta mode carries `beta_charge` (default (+1)); gamma modes carry its negative.
GradedSeries char_betagamma(int m, const Rational& cutoff);
GradedSeries char_betagamma(int m, const Rational& cutoff, const Charge& beta_charge);

/// prod_i prod_{k>=0} (1 + u q^{k+1/2}) (1 + u^{-1} q^{k+1/2}), b modes carry `b_charge`.
GradedSeries char_bc(int n, const Rational& cutoff);
GradedSeries char_bc(int n, const Rational& cutoff, const Charge& b_charge);

/// Fock module of a Heisenberg generator of norm kappa, with eigenvalue of
/// square lambda_squared on the top vector. The top weight is
/// lambda_squared / (2 kappa). The integer charge only labels the series.
struct FockSpec {
  Rational kappa = 1;
  std::int64_t charge = 0;
  Rational lambda_squared = 0;

  /// Integer eigenvalue s on a generator of norm kappa: lambda^2 = s^2.
  static FockSpec integral(const Rational& kappa, std::int64_t s);
  Rational top_weight() const;
};

/// q^{top} u^{charge} prod (1 - q^k)^{-1}, arity 1. A cutoff below the top
/// weight gives an empty (but certified) series.
GradedSeries char_fock(const FockSpec& spec, const Rational& cutoff);

/// Same without the charge key, arity 0.
GradedSeries fock_q_series(const Rational& top_weight, const Rational& cutoff);

/// Divides by q^{top} prod(1-q^k)^{-1} (charges untouched); the cutoff drops by `top_weight`.
GradedSeries divide_by_fock(const GradedSeries& a, const Rational& top_weight);

}  // namespace vachar
