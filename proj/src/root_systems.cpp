#include "vachar/root_systems.hpp"

#include <sstream>
#include <stdexcept>

namespace vachar {

namespace {

void require_shape(int n, int m) {
  if (n < 1 || m < 1) throw std::invalid_argument("sl(n|m) needs n, m >= 1");
}

void require_nondegenerate(int n, int m) {
  require_shape(n, m);
  if (n == m) throw std::invalid_argument("fundamental weights of sl(n|n) are not defined (n = m)");
}

void require_index(int n, int m, int i) {
  if (i < 1 || i > n + m - 1)
    throw std::invalid_argument("simple root index " + std::to_string(i) + " outside 1.." +
                                std::to_string(n + m - 1));
}

SuperWeight eps_sum(int n, int m, int count) {
  SuperWeight w = SuperWeight::zero(n, m);
  for (int i = 0; i < count; ++i) w.eps[i] = 1;
  return w;
}

// delta_{from} + ... + delta_m
SuperWeight delta_tail(int n, int m, int from) {
  SuperWeight w = SuperWeight::zero(n, m);
  for (int j = from; j <= m; ++j) w.delta[j - 1] = 1;
  return w;
}

// delta - eps
SuperWeight supertrace_direction(int n, int m) {
  SuperWeight w = SuperWeight::zero(n, m);
  for (auto& e : w.eps) e = -1;
  for (auto& d : w.delta) d = 1;
  return w;
}

void require_matching(const SuperWeight& u, const SuperWeight& v) {
  if (u.n != v.n || u.m != v.m)
    throw std::invalid_argument("weights of sl(" + std::to_string(u.n) + "|" + std::to_string(u.m) +
                                ") and sl(" + std::to_string(v.n) + "|" + std::to_string(v.m) + ")");
}

}  // namespace

Rational slnm_mu_squared(int n, int m) { return Rational(m - n, m * n); }

SuperWeight SuperWeight::zero(int n, int m) {
  require_shape(n, m);
  return SuperWeight{n, m, std::vector<Scalar>(n), std::vector<Scalar>(m)};
}

SuperWeight SuperWeight::eps_unit(int n, int m, int i) {
  SuperWeight w = zero(n, m);
  w.eps.at(i - 1) = 1;
  return w;
}

SuperWeight SuperWeight::delta_unit(int n, int m, int j) {
  SuperWeight w = zero(n, m);
  w.delta.at(j - 1) = 1;
  return w;
}

Scalar SuperWeight::coordinate_sum() const {
  Scalar s;
  for (const auto& e : eps) s += e;
  for (const auto& d : delta) s += d;
  return s;
}

SuperWeight& SuperWeight::operator+=(const SuperWeight& rhs) {
  require_matching(*this, rhs);
  for (int i = 0; i < n; ++i) eps[i] += rhs.eps[i];
  for (int j = 0; j < m; ++j) delta[j] += rhs.delta[j];
  return *this;
}

SuperWeight& SuperWeight::operator-=(const SuperWeight& rhs) {
  require_matching(*this, rhs);
  for (int i = 0; i < n; ++i) eps[i] -= rhs.eps[i];
  for (int j = 0; j < m; ++j) delta[j] -= rhs.delta[j];
  return *this;
}

SuperWeight& SuperWeight::operator*=(const Scalar& factor) {
  for (auto& e : eps) e *= factor;
  for (auto& d : delta) d *= factor;
  return *this;
}

Scalar inner_product_super(const SuperWeight& u, const SuperWeight& v) {
  require_matching(u, v);
  Scalar s;
  for (int i = 0; i < u.n; ++i) s += u.eps[i] * v.eps[i];
  for (int j = 0; j < u.m; ++j) s -= u.delta[j] * v.delta[j];
  return s;
}

SuperWeight simple_root_super(int n, int m, int i) {
  require_shape(n, m);
  require_index(n, m, i);
  if (i < n) return SuperWeight::eps_unit(n, m, i) - SuperWeight::eps_unit(n, m, i + 1);
  if (i == n) return SuperWeight::eps_unit(n, m, n) - SuperWeight::delta_unit(n, m, 1);
  return SuperWeight::delta_unit(n, m, m + n - i) - SuperWeight::delta_unit(n, m, m + n + 1 - i);
}

SuperWeight fundamental_weight_super(int n, int m, int i) {
  require_nondegenerate(n, m);
  require_index(n, m, i);
  SuperWeight dir = supertrace_direction(n, m);
  if (i < n) return Scalar(ratio(i, n - m)) * dir + eps_sum(n, m, i);
  if (i == n) return Scalar(ratio(n, n - m)) * dir + eps_sum(n, m, n);
  int j = i - n;
  return Scalar(ratio(j, n - m)) * dir + delta_tail(n, m, m - j + 1);
}

SuperWeight nu_weight_super(int n, int m, int i) {
  require_nondegenerate(n, m);
  require_index(n, m, i);
  SuperWeight omega_n = fundamental_weight_super(n, m, n);
  if (i < n) return fundamental_weight_super(n, m, i) - Scalar(Rational(i, n)) * omega_n;
  if (i == n) return -Scalar::mu(slnm_mu_squared(n, m)) * omega_n;
  int j = i - n;
  return fundamental_weight_super(n, m, n + m - j) - Scalar(Rational(j, m)) * omega_n;
}

std::vector<Scalar> convert_nu_to_omega(int n, int m, std::span<const Scalar> a) {
  require_nondegenerate(n, m);
  if (static_cast<int>(a.size()) != n + m - 1)
    throw std::invalid_argument("expected " + std::to_string(n + m - 1) + " nu labels, got " +
                                std::to_string(a.size()));
  std::vector<Scalar> b(a.size());
  Scalar bn = -Scalar::mu(slnm_mu_squared(n, m)) * a[n - 1];
  for (int i = 1; i < n; ++i) {
    b[i - 1] = a[i - 1];
    bn -= Scalar(Rational(i, n)) * a[i - 1];
  }
  for (int j = 1; j < m; ++j) {
    b[n + m - j - 1] = a[n + j - 1];
    bn -= Scalar(Rational(j, m)) * a[n + j - 1];
  }
  b[n - 1] = bn;
  return b;
}

std::vector<Scalar> omega_labels(const SuperWeight& w) {
  std::vector<Scalar> b;
  for (int j = 1; j < w.n + w.m; ++j) b.push_back(inner_product_super(w, simple_root_super(w.n, w.m, j)));
  return b;
}

DominantWeight DominantWeight::zero(int rank) {
  if (rank < 1) throw std::invalid_argument("sl_rank needs rank >= 1");
  return DominantWeight{rank, std::vector<int>(rank - 1, 0)};
}

DominantWeight DominantWeight::multiple_of_fundamental(int rank, int i, int k) {
  DominantWeight w = zero(rank);
  if (k < 0) throw std::invalid_argument("dominant weights have nonnegative labels");
  if (i < 0 || i > rank) throw std::invalid_argument("fundamental weight index out of range");
  if (i > 0 && i < rank) w.labels[i - 1] = k;
  return w;
}

bool DominantWeight::is_zero() const {
  for (int l : labels)
    if (l != 0) return false;
  return true;
}

std::string DominantWeight::to_string() const {
  std::ostringstream os;
  os << "sl" << rank << "(";
  for (std::size_t i = 0; i < labels.size(); ++i) os << (i ? "," : "") << labels[i];
  os << ")";
  return os.str();
}

Integer weyl_dim(const DominantWeight& w) {
  if (static_cast<int>(w.labels.size()) != w.rank - 1)
    throw std::invalid_argument("weight " + w.to_string() + " has the wrong number of labels");
  // prod_{i<j} (lambda + rho, e_i - e_j) / (rho, e_i - e_j)
  Rational dim = 1;
  for (int i = 0; i < w.rank; ++i) {
    int partial = 0;
    for (int j = i + 1; j < w.rank; ++j) {
      if (w.labels[j - 1] < 0) throw std::invalid_argument("weight " + w.to_string() + " is not dominant");
      partial += w.labels[j - 1] + 1;
      dim *= Rational(partial, j - i);
    }
  }
  return numerator(dim);
}

Rational sugawara_h(int rank, const Rational& level, const DominantWeight& w) {
  if (w.rank != rank) throw std::invalid_argument("weight rank does not match algebra rank");
  if (level + rank == 0) throw std::domain_error("critical level k = -" + std::to_string(rank));
  // (omega_i, omega_j) = min(i,j) (N - max(i,j)) / N, (omega_i, 2 rho) = i (N - i).
  Rational norm = 0;
  Rational with_rho = 0;
  for (int i = 1; i < rank; ++i) {
    with_rho += Rational(w.labels[i - 1]) * i * (rank - i);
    for (int j = 1; j < rank; ++j)
      norm += Rational(w.labels[i - 1] * w.labels[j - 1]) * std::min(i, j) * (rank - std::max(i, j)) / rank;
  }
  return (norm + with_rho) / (2 * (level + rank));
}

}  // namespace vachar
