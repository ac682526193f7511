#pragma once

// Characters assembled from branching rules: sums over s of products of
// coset, Fock, Ising and explicitly supplied factor characters.

#include "vachar/graded_series.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace vachar {

/// Ising model characters, h in {0, 1/2, 1/16}.
GradedSeries ising_character(const Rational& h, const Rational& cutoff);

struct BranchingFactor {
  enum class Kind { W, L1, Fock, Ising, Explicit };
  Kind kind = Kind::W;
  int rank = 0;                  // W: m, L1: n
  std::int64_t label = 0;        // W: s, L1: a, Fock: charge
  Rational value = 0;            // Fock: kappa, Ising: h
  std::optional<GradedSeries> series;  // Explicit

  /// Lowest exponent this factor can contribute.
  Rational lead() const;
  std::string describe() const;
};

struct BranchingTerm {
  std::int64_t s = 0;
  std::vector<BranchingFactor> factors;
};

struct BranchingTemplate {
  std::string name;
  std::vector<BranchingTerm> terms;
};

/// Sum over terms of the product of their factors, certified up to cutoff.
/// Throws if an explicit factor is not certified far enough.
GradedSeries assemble_branching(const BranchingTemplate& tmpl, const Rational& cutoff);

/// Family template: sum_s W(w_rank, s) Fock(kappa, s) X_s, where X_s is
/// absent, an Ising character of h = (s mod 2)/2, or explicit series keyed by s mod `modulus`.
struct BranchingFamily {
  std::string name;
  int w_rank = 3;
  Rational kappa = 1;
  enum class Extra { None, Ising, Explicit } extra = Extra::None;
  std::int64_t modulus = 1;
  std::map<std::int64_t, GradedSeries> explicit_series;  // residue -> series
};

/// Expands a family into the finitely many terms that reach the cutoff.
BranchingTemplate expand_family(const BranchingFamily& family, const Rational& cutoff);

/// W_{-2}(sl_5, theta) = sum_s W(3,s) Fock(3/5,s).
BranchingFamily sl5_minimal_family();
/// W_{-2}(sl_6, theta) = sum_s W(4,s) Fock(4/3,s) Ising((s mod 2)/2).
BranchingFamily sl6_minimal_family();
/// W_{-2}(sl_{n+2}, theta) = sum_s W(n,s) Fock(n(n-2)/(n+2),s) L_ell(omega_{s mod n}); the last factor is
/// trivial for n = 3, Ising for n = 4, and must be supplied otherwise.
BranchingFamily minimal_w_family(int n, const std::map<std::int64_t, GradedSeries>& extra = {});

/// Either {"family": {...}} or {"terms": [...]}; see the README for the schema.
BranchingTemplate template_from_json(const nlohmann::json& spec, const Rational& cutoff);

GradedSeries series_from_json(const nlohmann::json& spec);
nlohmann::json series_to_json(const GradedSeries& series);

}  // namespace vachar
