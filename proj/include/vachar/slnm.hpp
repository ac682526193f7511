#pragma once

// Simple modules M_{s,a,t} of W_{-1}(rank m) x L_1(sl_n) x Heisenberg, their
// orbits under the odd simple current, and the resulting L_1(sl(n|m)) modules.

#include "vachar/coset.hpp"
#include "vachar/graded_series.hpp"
#include "vachar/root_systems.hpp"

#include <optional>
#include <string>
#include <vector>

namespace vachar {

/// Label (s, a, t) with t = lambda * mu, mu^2 = (m - n)/(m n), m > n >= 1, 0 <= a < n.
struct TripleLabel {
  int n = 1;
  int m = 2;
  std::int64_t s = 0;
  std::int64_t a = 0;
  Rational t = 0;

  static TripleLabel make(int n, int m, std::int64_t s, std::int64_t a, Rational t);

  Rational mu_squared() const { return slnm_mu_squared(n, m); }
  /// lambda^2 = t^2 m n / (m - n).
  Rational lambda_squared() const;
  /// (-s, -a mod n, -t).
  TripleLabel dual() const;
  /// (s + i, a + i mod n, t + i mu^2).
  TripleLabel shifted(std::int64_t i) const;
  std::string to_string() const;
  friend bool operator==(const TripleLabel&, const TripleLabel&) = default;
};

/// |s|(m+|s|)/(2m) + a(n-a)/(2n) + lambda^2/2.
Rational h_triple(const TripleLabel& label);

struct Locality {
  bool local = false;
  std::int64_t z = 0;     // t = a/n + z - s/m when local
  Rational defect = 0;    // (t - a/n + s/m) mod 1
};
Locality locality(const TripleLabel& label);

/// s - a - z n for a local label. Throws for non-local labels.
std::int64_t orbit_charge(const TripleLabel& label);

struct MinimumResult {
  Rational minimum;
  std::vector<std::int64_t> shifts;  // orbit shifts attaining the minimum, ascending
  bool boundary = false;             // s - a - z n = 0: both closed forms apply
};

/// Closed-form lowest weight over the orbit, with the attaining shifts from
/// the case analysis over the residue of the shift mod n.
MinimumResult min_conformal_weight(const TripleLabel& label);

/// Lower bound for h over the orbit that is convex in the shift:
/// the W and Heisenberg parts of h_triple(label.shifted(i)).
Rational orbit_convex_bound(const TripleLabel& label, std::int64_t i);

std::vector<TripleLabel> orbit(const TripleLabel& label, const std::vector<std::int64_t>& window);

struct TopLevelSummand {
  DominantWeight sl_m;
  DominantWeight sl_n;
  Rational t;
  std::int64_t shift;  // orbit shift of the label carrying this summand
  Integer dimension;
};

struct TopLevel {
  std::vector<TopLevelSummand> summands;
  bool dualized = false;   // computed through the dual label
  bool boundary = false;
  Integer total_dimension() const;
};

TopLevel top_level(const TripleLabel& label);

struct Identification {
  std::int64_t r = 0;
  std::vector<Scalar> nu_labels;      // highest weight on the even fundamental weights
  std::vector<Scalar> omega_labels;   // converted; equals (0, ..., 0, r)
};

/// r = s - a - z n, checked against n(mu^2 s - t). For s - a - z n < 0 the
/// highest weight is read off the dual label and negated.
Identification identify_induced(const TripleLabel& label);

/// |r|(|r| + m - n) / (2(m - n)).
Rational h_top_formula(int n, int m, std::int64_t r);

/// Canonical orbit representative (r, 0, -r/m).
TripleLabel orbit_representative(int n, int m, std::int64_t r);

/// Character of L_1(r omega_{n+m-1}) as the orbit sum of
/// char_W(m, s) char_L1(n, a) q^{lambda^2/2} prod(1-q^k)^{-1}; arity 1,
/// charge x = n s + m (r - s).
GradedSeries char_L1_slnm(int n, int m, std::int64_t r, const Rational& cutoff);

struct BigDecompositionReport {
  int n = 0, m = 0;
  Rational cutoff;
  std::vector<std::pair<std::int64_t, VerificationReport>> per_r;
  bool passed() const;
};

/// Free-field route (beta-gamma x bc, h-charge r, divided by the h Fock
/// module of norm n - m) against char_L1_slnm, for r_lo <= r <= r_hi.
BigDecompositionReport verify_big_decomposition(int n, int m, std::int64_t r_lo, std::int64_t r_hi,
                                                const Rational& cutoff);

/// char_W(n, s) char_L1(n, s mod n).
GradedSeries char_psl_component(int n, std::int64_t s, const Rational& cutoff);

/// h-charge 0, x-charge 2s part of beta-gamma(n) x bc(n) (x = h_bg - h_bc)
/// times prod(1-q^k)^2, against char_psl_component.
VerificationReport verify_psl(int n, std::int64_t s, const Rational& cutoff);

}  // namespace vachar
