#pragma once

// Weight data for sl(n|m) in the distinguished simple root system and for
// the finite sl_N factors of its even part.

#include "vachar/scalar.hpp"

#include <span>
#include <string>
#include <vector>

namespace vachar {

/// mu^2 = (m - n) / (m n).
Rational slnm_mu_squared(int n, int m);

/// Element of the eps/delta weight space of sl(n|m),
/// with (eps_i, eps_j) = delta_ij, (delta_i, delta_j) = -delta_ij.
struct SuperWeight {
  int n = 0;
  int m = 0;
  std::vector<Scalar> eps;
  std::vector<Scalar> delta;

  static SuperWeight zero(int n, int m);
  static SuperWeight eps_unit(int n, int m, int i);    // eps_i, 1-based
  static SuperWeight delta_unit(int n, int m, int j);  // delta_j, 1-based

  /// Sum of all coordinates; zero on the root lattice.
  Scalar coordinate_sum() const;

  SuperWeight& operator+=(const SuperWeight& rhs);
  SuperWeight& operator-=(const SuperWeight& rhs);
  SuperWeight& operator*=(const Scalar& factor);
  friend SuperWeight operator+(SuperWeight a, const SuperWeight& b) { return a += b; }
  friend SuperWeight operator-(SuperWeight a, const SuperWeight& b) { return a -= b; }
  friend SuperWeight operator*(const Scalar& c, SuperWeight w) { return w *= c; }
  friend bool operator==(const SuperWeight&, const SuperWeight&) = default;
};

Scalar inner_product_super(const SuperWeight& u, const SuperWeight& v);

/// alpha_i, 1 <= i <= n+m-1: eps_i - eps_{i+1} (i < n), eps_n - delta_1,
/// delta_{m+n-i} - delta_{m+n+1-i} (i > n).
SuperWeight simple_root_super(int n, int m, int i);

/// omega_i with (omega_i, alpha_j) = delta_ij; requires n != m.
SuperWeight fundamental_weight_super(int n, int m, int i);

/// Fundamental weights of the even part, written through the omega_i:
/// nu_i = omega_i - (i/n) omega_n, nu_n = -mu omega_n,
/// nu_{n+j} = omega_{n+m-j} - (j/m) omega_n.
SuperWeight nu_weight_super(int n, int m, int i);

/// Labels a_i on the nu basis to labels b_i on the omega basis:
/// b_i = a_i (i < n), b_{n+m-j} = a_{n+j},
/// b_n = -mu a_n - (1/n) sum_i i a_i - (1/m) sum_j j a_{n+j}.
std::vector<Scalar> convert_nu_to_omega(int n, int m, std::span<const Scalar> nu_labels);

/// b_j = (w, alpha_j): the omega-basis labels of an arbitrary weight.
std::vector<Scalar> omega_labels(const SuperWeight& w);

/// Dominant integral weight of sl_rank in the fundamental-weight basis.
struct DominantWeight {
  int rank = 1;
  std::vector<int> labels;  // rank - 1 entries

  static DominantWeight zero(int rank);
  /// k * omega_i (i = 0 or i = rank gives the zero weight).
  static DominantWeight multiple_of_fundamental(int rank, int i, int k);

  bool is_zero() const;
  friend bool operator==(const DominantWeight&, const DominantWeight&) = default;
  std::string to_string() const;
};

/// Dimension of the irreducible sl_rank module with this highest weight.
Integer weyl_dim(const DominantWeight& w);

/// (lambda, lambda + 2 rho) / (2 (k + rank)).
Rational sugawara_h(int rank, const Rational& level, const DominantWeight& w);

}  // namespace vachar
