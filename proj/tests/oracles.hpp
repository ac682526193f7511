#pragma once

// Independent oracles: brute-force counts that share no code with the
// series machinery they check.

#include "vachar/scalar.hpp"

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <map>
#include <utility>
#include <vector>

namespace oracle {

using vachar::Integer;
using vachar::Rational;

// Number of partitions of k, by direct enumeration of non-increasing parts.
inline Integer partitions(int k, int max_part = -1) {
  if (max_part < 0) max_part = k;
  if (k == 0) return 1;
  Integer total = 0;
  for (int p = std::min(k, max_part); p >= 1; --p) total += partitions(k - p, p);
  return total;
}

// Coefficients of prod (1-q^k)^{-d} up to q^N: d-coloured partitions via
// c(n) = (1/n) sum_k d sigma(k) c(n-k).
inline std::vector<Integer> coloured_partitions(int d, int N) {
  std::vector<Integer> c(N + 1, 0);
  c[0] = 1;
  for (int n = 1; n <= N; ++n) {
    Integer acc = 0;
    for (int k = 1; k <= n; ++k) {
      int sigma = 0;
      for (int j = 1; j <= k; ++j)
        if (k % j == 0) sigma += j;
      acc += Integer(d) * sigma * c[n - k];
    }
    c[n] = acc / n;
  }
  return c;
}

// Free-field states counted by (2 * weight, charge). Modes of weight
// (2k+1)/2 come in `copies` copies with charge +1 and -1; bosons take any
// multiplicity, fermions at most one.
inline std::map<std::pair<int, int>, Integer> free_field_states(int copies, bool fermionic, int twice_cutoff) {
  struct Mode {
    int twice_weight;
    int charge;
  };
  std::vector<Mode> modes;
  for (int w = 1; w <= twice_cutoff; w += 2)
    for (int c = 0; c < copies; ++c) {
      modes.push_back({w, 1});
      modes.push_back({w, -1});
    }
  std::map<std::pair<int, int>, Integer> out;
  std::function<void(std::size_t, int, int)> walk = [&](std::size_t i, int w, int ch) {
    if (i == modes.size()) {
      out[{w, ch}] += 1;
      return;
    }
    int max_mult = fermionic ? 1 : (twice_cutoff - w) / modes[i].twice_weight;
    for (int k = 0; k <= max_mult && w + k * modes[i].twice_weight <= twice_cutoff; ++k)
      walk(i + 1, w + k * modes[i].twice_weight, ch + k * modes[i].charge);
  };
  walk(0, 0, 0);
  return out;
}

// Semistandard tableaux of the shape given by sl_N fundamental-weight labels,
// entries 1..N, counted by brute force.
inline Integer ssyt_count(int N, const std::vector<int>& labels) {
  std::vector<int> rows;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    int len = 0;
    for (std::size_t j = i; j < labels.size(); ++j) len += labels[j];
    if (len > 0) rows.push_back(len);
  }
  std::vector<std::pair<int, int>> cells;
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (int c = 0; c < rows[r]; ++c) cells.push_back({static_cast<int>(r), c});
  std::map<std::pair<int, int>, int> fill;
  Integer count = 0;
  std::function<void(std::size_t)> place = [&](std::size_t k) {
    if (k == cells.size()) {
      count += 1;
      return;
    }
    auto [r, c] = cells[k];
    int lo = 1;
    if (c > 0) lo = std::max(lo, fill[{r, c - 1}]);
    if (r > 0) lo = std::max(lo, fill[{r - 1, c}] + 1);
    for (int v = lo; v <= N; ++v) {
      fill[{r, c}] = v;
      place(k + 1);
    }
  };
  place(0);
  return count;
}

// Clebsch-Gordan decomposition of V_s x V_t for sl_2 by peeling highest weights.
inline std::map<std::int64_t, std::int64_t> sl2_tensor(std::int64_t s, std::int64_t t) {
  std::map<std::int64_t, std::int64_t> weights;
  for (std::int64_t a = -s; a <= s; a += 2)
    for (std::int64_t b = -t; b <= t; b += 2) weights[a + b] += 1;
  std::map<std::int64_t, std::int64_t> out;
  while (!weights.empty()) {
    std::int64_t top = weights.rbegin()->first;
    std::int64_t mult = weights.rbegin()->second;
    out[top] += mult;
    for (std::int64_t w = -top; w <= top; w += 2) {
      weights[w] -= mult;
      if (weights[w] == 0) weights.erase(w);
    }
  }
  return out;
}

// (lambda, lambda + 2 rho) / (2(k + N)) in orthonormal coordinates of R^N
// projected to the trace-zero hyperplane.
inline Rational sugawara_by_coordinates(int N, const Rational& k, const std::vector<int>& labels) {
  std::vector<Rational> lam(N, 0);
  for (int i = 0; i < N; ++i)
    for (int j = i; j < N - 1; ++j) lam[i] += labels[j];
  Rational mean = 0;
  for (auto& x : lam) mean += x;
  mean /= N;
  for (auto& x : lam) x -= mean;
  Rational val = 0;
  for (int i = 0; i < N; ++i) {
    Rational rho_i = Rational(N - 1, 2) - i;  // rho = ((N-1)/2, (N-3)/2, ...)
    val += lam[i] * (lam[i] + 2 * rho_i);
  }
  return val / (2 * (k + N));
}

// h of the label (s, a, t) straight from its definition.
inline Rational h_label(int n, int m, std::int64_t s, std::int64_t a, const Rational& t) {
  std::int64_t as = std::llabs(s);
  std::int64_t ar = ((a % n) + n) % n;
  return Rational(as * (m + as), 2 * m) + Rational(ar * (n - ar), 2 * n) + t * t * m * n / (2 * (m - n));
}

struct OrbitMinimum {
  Rational minimum;
  std::vector<std::int64_t> shifts;
};

// Scans shifts outward from 0. The W and Heisenberg parts of h form a convex
// lower bound f(i); a direction stops once f exceeds the running minimum and increases.
inline OrbitMinimum orbit_scan(int n, int m, std::int64_t s, std::int64_t a, const Rational& t) {
  Rational mu2(m - n, m * n);
  auto h = [&](std::int64_t i) { return h_label(n, m, s + i, a + i, t + mu2 * i); };
  auto f = [&](std::int64_t i) {
    std::int64_t as = std::llabs(s + i);
    Rational ti = t + mu2 * i;
    return Rational(as * (m + as), 2 * m) + ti * ti * m * n / (2 * (m - n));
  };
  std::map<std::int64_t, Rational> values{{0, h(0)}};
  Rational best = values[0];
  for (int dir : {-1, 1})
    for (std::int64_t i = dir;; i += dir) {
      values[i] = h(i);
      best = std::min(best, values[i]);
      if (f(i) > best && f(i) >= f(i - dir)) break;
    }
  OrbitMinimum out{best, {}};
  for (const auto& [i, v] : values)
    if (v == best) out.shifts.push_back(i);
  return out;
}

}  // namespace oracle
