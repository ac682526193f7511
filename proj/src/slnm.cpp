#include "vachar/slnm.hpp"

#include "vachar/free_fields.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>
#include <stdexcept>

namespace vachar {

namespace {

std::int64_t mod_pos(std::int64_t a, std::int64_t n) {
  std::int64_t r = a % n;
  return r < 0 ? r + n : r;
}

void require_orientation(int n, int m) {
  if (n < 1 || m <= n)
    throw std::invalid_argument("sl(" + std::to_string(n) + "|" + std::to_string(m) +
                                "): this pipeline needs m > n >= 1");
}

Locality require_local(const TripleLabel& label) {
  Locality loc = locality(label);
  if (!loc.local)
    throw std::invalid_argument("label " + label.to_string() + " is not local (defect " +
                                format_rational(loc.defect) + ")");
  return loc;
}

// Shift candidates r for residue value v = tbar + a, per the two cases.
std::vector<std::int64_t> branch(int which_case, std::int64_t v, std::int64_t z, int n) {
  if (which_case == 1) {
    if (v == 0) return {-z, -z - 1};
    if (v < n) return {-z - 1};
    if (v == n) return {-z - 1, -z - 2};
    return {-z - 2};
  }
  if (v == 0) return {-z, -z + 1};
  if (v < n) return {-z};
  if (v == n) return {-z - 1, -z};
  return {-z - 1};
}

DominantWeight reversed(const DominantWeight& w) {
  DominantWeight out = w;
  std::reverse(out.labels.begin(), out.labels.end());
  return out;
}

}  // namespace

TripleLabel TripleLabel::make(int n, int m, std::int64_t s, std::int64_t a, Rational t) {
  require_orientation(n, m);
  if (a < 0 || a >= n)
    throw std::invalid_argument("residue a = " + std::to_string(a) + " outside 0.." + std::to_string(n - 1));
  return TripleLabel{n, m, s, a, std::move(t)};
}

Rational TripleLabel::lambda_squared() const { return t * t * m * n / (m - n); }

TripleLabel TripleLabel::dual() const { return TripleLabel{n, m, -s, mod_pos(-a, n), -t}; }

TripleLabel TripleLabel::shifted(std::int64_t i) const {
  return TripleLabel{n, m, s + i, mod_pos(a + i, n), t + mu_squared() * i};
}

std::string TripleLabel::to_string() const {
  return "sl(" + std::to_string(n) + "|" + std::to_string(m) + ")[" + std::to_string(s) + "," +
         std::to_string(a) + "," + format_rational_short(t) + "]";
}

Rational h_triple(const TripleLabel& label) {
  require_orientation(label.n, label.m);
  return h_w_minus_one(label.m, label.s) + h_l_one(label.n, label.a) + label.lambda_squared() / 2;
}

Locality locality(const TripleLabel& label) {
  require_orientation(label.n, label.m);
  Rational v = label.t - Rational(label.a, label.n) + Rational(label.s, label.m);
  Locality out;
  out.defect = frac_of(v);
  out.local = out.defect == 0;
  if (out.local) out.z = to_int64(numerator(v));
  return out;
}

std::int64_t orbit_charge(const TripleLabel& label) {
  Locality loc = require_local(label);
  return label.s - label.a - loc.z * label.n;
}

Rational orbit_convex_bound(const TripleLabel& label, std::int64_t i) {
  TripleLabel x = label.shifted(i);
  return h_w_minus_one(x.m, x.s) + x.lambda_squared() / 2;
}

MinimumResult min_conformal_weight(const TripleLabel& label) {
  Locality loc = require_local(label);
  const int n = label.n, m = label.m;
  const std::int64_t s = label.s, a = label.a, z = loc.z;
  const std::int64_t d = s - a - z * n;
  Rational common = Rational(a * (n - a), 2 * n) + label.lambda_squared() / 2;
  Rational z1 = z + 1;
  Rational case1 = Rational(n, 2) * z1 * z1 - n * (Rational(a, n) + Rational(1, 2) + z) * z1 +
                   Rational(s * (s + m), 2 * m) + common;
  Rational case2 = Rational(n, 2) * z * z - Rational(z * n) * (Rational(a, n) - Rational(1, 2) + z) +
                   Rational(s * (s - m), 2 * m) + common;

  MinimumResult out;
  out.boundary = d == 0;
  if (d == 0 && case1 != case2)
    throw std::logic_error("closed forms disagree on the boundary for " + label.to_string() + ": " +
                           format_rational(case1) + " vs " + format_rational(case2));
  out.minimum = d >= 0 ? case1 : case2;

  std::set<std::int64_t> candidates;
  for (int which_case : {1, 2}) {
    if ((which_case == 1 && d < 0) || (which_case == 2 && d > 0)) continue;
    for (std::int64_t tbar = 0; tbar < n; ++tbar)
      for (std::int64_t r : branch(which_case, tbar + a, z, n)) {
        std::int64_t shift = r * n + tbar;
        bool valid = which_case == 1 ? s + shift >= 0 : s + shift <= 0;
        if (valid) candidates.insert(shift);
      }
  }
  for (std::int64_t shift : candidates)
    if (h_triple(label.shifted(shift)) == out.minimum) out.shifts.push_back(shift);
  if (out.shifts.empty())
    throw std::logic_error("no case-analysis shift attains the closed-form minimum for " + label.to_string());
  return out;
}

std::vector<TripleLabel> orbit(const TripleLabel& label, const std::vector<std::int64_t>& window) {
  require_local(label);
  std::vector<TripleLabel> out;
  for (std::int64_t i : window) out.push_back(label.shifted(i));
  return out;
}

Integer TopLevel::total_dimension() const {
  Integer total = 0;
  for (const auto& s : summands) total += s.dimension;
  return total;
}

TopLevel top_level(const TripleLabel& label) {
  Locality loc = require_local(label);
  const int n = label.n, m = label.m;
  const std::int64_t d = label.s - label.a - loc.z * n;
  if (d < 0) {
    TopLevel dual = top_level(label.dual());
    TopLevel out;
    out.dualized = true;
    out.boundary = dual.boundary;
    for (const auto& x : dual.summands)
      out.summands.push_back({reversed(x.sl_m), reversed(x.sl_n), -x.t, -x.shift, x.dimension});
    return out;
  }
  TopLevel out;
  out.boundary = d == 0;
  const std::int64_t base = (loc.z + 1) * n;
  for (std::int64_t i = std::max(base - label.s, -label.a); i <= n - label.a; ++i) {
    std::int64_t shift = i - base;
    TopLevelSummand x;
    x.sl_m = DominantWeight::multiple_of_fundamental(m, 1, static_cast<int>(label.s + shift));
    x.sl_n = DominantWeight::multiple_of_fundamental(n, static_cast<int>(label.a + i), 1);
    x.t = label.t + label.mu_squared() * shift;
    x.shift = shift;
    x.dimension = weyl_dim(x.sl_m) * weyl_dim(x.sl_n);
    out.summands.push_back(std::move(x));
  }
  return out;
}

Identification identify_induced(const TripleLabel& label) {
  Locality loc = require_local(label);
  const int n = label.n, m = label.m;
  Identification out;
  out.r = label.s - label.a - loc.z * n;
  Rational check = n * (label.mu_squared() * label.s - label.t);
  if (check != out.r)
    throw std::logic_error("r = " + std::to_string(out.r) + " but n(mu^2 s - t) = " + format_rational(check));

  if (out.r < 0) {
    Identification dual = identify_induced(label.dual());
    for (auto& x : dual.nu_labels) out.nu_labels.push_back(-x);
    for (auto& x : dual.omega_labels) out.omega_labels.push_back(-x);
    return out;
  }
  TopLevel top = top_level(label);
  std::int64_t highest_shift = -label.a - loc.z * n;
  auto it = std::find_if(top.summands.begin(), top.summands.end(),
                         [&](const TopLevelSummand& x) { return x.shift == highest_shift; });
  if (it == top.summands.end())
    throw std::logic_error("top level of " + label.to_string() + " misses its highest summand");

  Rational mu2 = label.mu_squared();
  out.nu_labels.assign(n + m - 1, Scalar());
  for (int i = 1; i < n; ++i) out.nu_labels[i - 1] = it->sl_n.labels[i - 1];
  out.nu_labels[n - 1] = Scalar(0, it->t / mu2, mu2);  // lambda = t / mu
  for (int j = 1; j < m; ++j) out.nu_labels[n + j - 1] = it->sl_m.labels[j - 1];
  out.omega_labels = convert_nu_to_omega(n, m, out.nu_labels);
  return out;
}

Rational h_top_formula(int n, int m, std::int64_t r) {
  require_orientation(n, m);
  std::int64_t a = std::llabs(r);
  return Rational(a * (a + m - n), 2 * (m - n));
}

TripleLabel orbit_representative(int n, int m, std::int64_t r) {
  return TripleLabel::make(n, m, r, 0, Rational(-r, m));
}

GradedSeries char_L1_slnm(int n, int m, std::int64_t r, const Rational& cutoff) {
  require_orientation(n, m);
  if (cutoff < h_top_formula(n, m, r))
    throw std::invalid_argument("cutoff " + format_rational(cutoff) + " is below the lowest weight " +
                                format_rational(h_top_formula(n, m, r)) + " of L_1(" + std::to_string(r) +
                                " omega)");
  TripleLabel rep = orbit_representative(n, m, r);
  GradedSeries out(1, cutoff);

  auto add_term = [&](std::int64_t i) {
    TripleLabel x = rep.shifted(i);
    if (h_triple(x) > cutoff) return;
    Rational hw = h_w_minus_one(m, x.s), hl = h_l_one(n, x.a), hy = x.lambda_squared() / 2;
    GradedSeries w = char_W(m, x.s, cutoff - hl - hy).series;
    GradedSeries l = char_L1(n, x.a, cutoff - hw - hy).series;
    GradedSeries y = fock_q_series(hy, cutoff - hw - hl);
    GradedSeries term = series_mul(series_mul(w, l), y);
    out = series_add(out, with_charge(term, {n * x.s + m * (r - x.s)}));
  };

  add_term(0);
  for (int dir : {-1, 1}) {
    for (std::int64_t i = dir;; i += dir) {
      Rational bound = orbit_convex_bound(rep, i);
      if (bound > cutoff && bound >= orbit_convex_bound(rep, i - dir)) break;
      add_term(i);
    }
  }
  return out;
}

bool BigDecompositionReport::passed() const {
  return std::all_of(per_r.begin(), per_r.end(), [](const auto& p) { return p.second.passed; });
}

BigDecompositionReport verify_big_decomposition(int n, int m, std::int64_t r_lo, std::int64_t r_hi,
                                                const Rational& cutoff) {
  require_orientation(n, m);
  if (r_lo > r_hi) throw std::invalid_argument("empty r range");
  BigDecompositionReport report{n, m, cutoff, {}};

  // The h-charge r part needs the free fields up to cutoff - r^2/(2(m-n)).
  auto needed = [&](std::int64_t r) { return cutoff - Rational(r * r, 2 * (m - n)); };
  Rational top_cutoff = needed(r_lo);
  for (std::int64_t r = r_lo; r <= r_hi; ++r) top_cutoff = std::max(top_cutoff, needed(r));
  if (top_cutoff < 0) top_cutoff = 0;

  // charges (h, x) with h = u_bg + u_bc and x = n u_bg + m u_bc
  GradedSeries free_fields =
      series_mul(char_betagamma(m, top_cutoff, {1, n}), char_bc(n, top_cutoff, {1, m}));

  for (std::int64_t r = r_lo; r <= r_hi; ++r) {
    VerificationReport rep;
    rep.identity = "beta-gamma(" + std::to_string(m) + ") x bc(" + std::to_string(n) + ") at h-charge " +
                   std::to_string(r) + " = Fock(" + std::to_string(n - m) + "," + std::to_string(r) +
                   ") x L_1(" + std::to_string(r) + " omega_" + std::to_string(n + m - 1) + ")";
    rep.cutoff = cutoff;
    Rational fock_top = ratio(r * r, 2 * (n - m));
    GradedSeries actual(1, cutoff);
    if (needed(r) >= 0) {
      GradedSeries component = charge_component(free_fields, {r, std::nullopt}).truncated(needed(r));
      actual = divide_by_fock(component, fock_top);
    }
    GradedSeries expected(1, cutoff);
    if (cutoff >= h_top_formula(n, m, r))
      expected = char_L1_slnm(n, m, r, cutoff);
    else
      rep.notes.push_back("cutoff below the lowest weight; both sides must vanish");
    rep.first_mismatch = first_mismatch(expected, actual, cutoff);
    rep.passed = !rep.first_mismatch;
    report.per_r.emplace_back(r, std::move(rep));
  }
  return report;
}

GradedSeries char_psl_component(int n, std::int64_t s, const Rational& cutoff) {
  if (n < 2) throw std::invalid_argument("psl(n|n) needs n >= 2");
  Rational hw = h_w_minus_one(n, s), hl = h_l_one(n, s);
  if (cutoff < hw + hl)
    throw std::invalid_argument("cutoff " + format_rational(cutoff) + " is below the lowest weight " +
                                format_rational(hw + hl));
  GradedSeries w = char_W(n, s, cutoff - hl).series;
  GradedSeries l = char_L1(n, mod_pos(s, n), cutoff - hw).series;
  return series_mul(w, l);
}

VerificationReport verify_psl(int n, std::int64_t s, const Rational& cutoff) {
  VerificationReport rep;
  rep.identity = "beta-gamma(" + std::to_string(n) + ") x bc(" + std::to_string(n) + ") at (h,x) = (0," +
                 std::to_string(2 * s) + ") = W_{-1}(lambda_" + std::to_string(s) + ") x L_1(omega_" +
                 std::to_string(mod_pos(s, n)) + ") x Fock^2";
  rep.cutoff = cutoff;
  // b modes carry (1, -1) so that x = u_bg - u_bc
  GradedSeries free_fields = series_mul(char_betagamma(n, cutoff, {1, 1}), char_bc(n, cutoff, {1, -1}));
  GradedSeries component = charge_component(free_fields, {0, 2 * s});
  GradedSeries actual = series_mul(component, euler_power(2, cutoff));
  GradedSeries expected(0, cutoff);
  if (cutoff >= h_w_minus_one(n, s) + h_l_one(n, s)) expected = char_psl_component(n, s, cutoff);
  rep.first_mismatch = first_mismatch(expected, actual, cutoff);
  rep.passed = !rep.first_mismatch;
  return rep;
}

}  // namespace vachar
