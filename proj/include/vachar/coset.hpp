#pragma once

// Commutant characters extracted from free fields, and their Verma-module oracles.

#include "vachar/graded_series.hpp"
#include "vachar/root_systems.hpp"

#include <optional>
#include <string>
#include <vector>

namespace vachar {

enum class CosetFamily { WMinusOne, LOne };

struct CosetCharacter {
  CosetFamily family;
  int rank;
  std::int64_t label;
  GradedSeries series;  // pure q-series, arity 0

  const Rational& cutoff() const { return series.cutoff(); }
};

/// sw_1 for s >= 0, |s| w_{m-1} for s < 0.
DominantWeight lambda_s(int m, std::int64_t s);

/// |s|(m + |s|) / (2m): lowest weight of W_{-1}(lambda_s).
Rational h_w_minus_one(int m, std::int64_t s);
/// a(n - a) / (2n) for the residue a of `a` mod n.
Rational h_l_one(int n, std::int64_t a);

/// Charge-s part of the rank-m beta-gamma character divided by the Fock
/// character of norm -m and charge s.
CosetCharacter char_W(int m, std::int64_t s, const Rational& cutoff);

/// Charge -a part of the rank-n bc character divided by the Fock character
/// of norm n and charge -a.
CosetCharacter char_L1(int n, std::int64_t a, const Rational& cutoff);

/// dim E^{lambda_s} q^{h} prod (1 - q^k)^{-(m^2 - 1)}.
GradedSeries verma_char_oracle(int m, std::int64_t s, const Rational& cutoff);

struct VerificationReport {
  std::string identity;
  Rational cutoff;
  bool passed = false;
  std::optional<SeriesMismatch> first_mismatch;
  std::vector<std::string> notes;
};

/// m >= 3: char_W(m,s) against the Verma oracle.
/// m = 2: against the sum of Verma oracles over s' = |s|, |s|+2, ... with h_{s'} <= cutoff.
VerificationReport verify_coset_identity(int m, std::int64_t s, const Rational& cutoff);

}  // namespace vachar
