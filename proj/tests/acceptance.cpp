// Acceptance run: one PASS/FAIL line per criterion.
//   acceptance            all criteria
//   acceptance --only 5   a single criterion

#include "oracles.hpp"
#include "vachar/branching.hpp"
#include "vachar/coset.hpp"
#include "vachar/free_fields.hpp"
#include "vachar/simple_currents.hpp"
#include "vachar/slnm.hpp"

#include <chrono>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

using namespace vachar;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;

  void fail(const std::string& why) {
    if (pass) detail = why;
    pass = false;
  }
};

std::string mismatch_text(const VerificationReport& r) {
  if (!r.first_mismatch) return r.identity + ": ok";
  const auto& mm = *r.first_mismatch;
  return r.identity + ": q^" + format_rational_short(mm.exponent) + " expected " + mm.expected.str() + ", got " +
         mm.actual.str();
}

const std::vector<std::pair<int, int>> kGrid{{1, 2}, {2, 3}, {2, 4}, {3, 4}, {2, 5}};

template <class F>
void for_each_local(F f) {
  for (auto [n, m] : kGrid)
    for (int s = -4; s <= 4; ++s)
      for (int a = 0; a < n; ++a)
        for (int z = -2; z <= 2; ++z) f(TripleLabel::make(n, m, s, a, Rational(a, n) + z - Rational(s, m)), z);
}

Outcome coset_suite() {
  Outcome o;
  int failed = 0;
  std::string first;
  for (int m : {3, 4})
    for (int s = -2; s <= 2; ++s) {
      VerificationReport r = verify_coset_identity(m, s, 6);
      if (!r.passed) {
        if (failed++ == 0) first = mismatch_text(r);
      }
    }
  if (failed) o.fail(std::to_string(failed) + "/10 identities fail; first " + first);
  else o.detail = "10 identities to q^6";
  return o;
}

Outcome rank_two_branching() {
  Outcome o;
  for (int s = -2; s <= 2; ++s) {
    VerificationReport r = verify_coset_identity(2, s, 8);
    if (!r.passed) o.fail(mismatch_text(r));
  }
  Integer c = char_W(2, 0, 2).series.coefficient(2);
  if (c != 12) o.fail("s=0 coefficient of q^2 is " + c.str() + ", expected 12");
  if (o.pass) o.detail = "|s| <= 2 to q^8, s=0 q^2 coefficient 12";
  return o;
}

Outcome minimization() {
  Outcome o;
  int labels = 0, double_attained = 0;
  for_each_local([&](const TripleLabel& x, int) {
    ++labels;
    MinimumResult r = min_conformal_weight(x);
    oracle::OrbitMinimum b = oracle::orbit_scan(x.n, x.m, x.s, x.a, x.t);
    if (r.minimum != b.minimum || r.shifts != b.shifts) o.fail(x.to_string() + ": closed form disagrees with scan");
    if (b.shifts.size() > 1) ++double_attained;
  });
  if (o.pass)
    o.detail = std::to_string(labels) + " labels, " + std::to_string(double_attained) + " with several attaining shifts";
  return o;
}

Outcome identification() {
  Outcome o;
  int labels = 0;
  for_each_local([&](const TripleLabel& x, int z) {
    ++labels;
    Identification id = identify_induced(x);
    if (id.r != x.s - x.a - z * x.n) o.fail(x.to_string() + ": r is not s - a - zn");
    if (Rational(id.r) != x.n * (x.mu_squared() * x.s - x.t)) o.fail(x.to_string() + ": r != n(mu^2 s - t)");
    std::vector<Scalar> expect(x.n + x.m - 1, Scalar(0));
    expect.back() = Scalar(id.r);
    if (id.omega_labels != expect) o.fail(x.to_string() + ": highest weight is not r omega_{n+m-1}");
  });
  TripleLabel ex = TripleLabel::make(2, 3, 1, 0, Rational(-1, 3));
  if (identify_induced(ex).r != 1) o.fail("(2,3),(1,0,-1/3): r != 1");
  Integer dim = top_level(ex).total_dimension();
  if (dim != 5) o.fail("(2,3),(1,0,-1/3): top dimension " + dim.str() + ", expected 5");
  if (o.pass) o.detail = std::to_string(labels) + " labels; (2,3),(1,0,-1/3): r=1, top dimension 5";
  return o;
}

Outcome big_decomposition() {
  Outcome o;
  for (auto [n, m] : std::vector<std::pair<int, int>>{{1, 2}, {2, 3}, {2, 4}}) {
    BigDecompositionReport rep = verify_big_decomposition(n, m, -2, 2, 3);
    for (const auto& [r, v] : rep.per_r)
      if (!v.passed)
        o.fail("(" + std::to_string(n) + "," + std::to_string(m) + ") r=" + std::to_string(r) + " " + mismatch_text(v));
  }
  if (o.pass) o.detail = "(1,2),(2,3),(2,4), |r| <= 2, to q^3";
  return o;
}

Outcome extension_types() {
  Outcome o;
  auto probe = IndexGroup{}.box(6);
  auto check = [&](const SimpleCurrentFamily& f, ExtensionType want) {
    ExtensionType got = extension_type(f, {1}, probe);
    if (got != want) o.fail(f.name + ": " + to_string(got) + ", expected " + to_string(want));
  };
  check(betagamma_family(3), ExtensionType::HalfIntegerGraded);
  check(bc_family(3), ExtensionType::Superalgebra);
  check(j_family(), ExtensionType::HalfIntegerGraded);
  if (o.pass) o.detail = "betagamma half-integer-graded, bc superalgebra, J half-integer-graded";
  return o;
}

Outcome induction_monoidal() {
  Outcome o;
  for (int s = 0; s <= 6; ++s)
    for (int t = 0; t <= 6; ++t)
      if (induce_c2(cg_fuse_sl2(s, t)) != group_ring_product(induce_c2(s), induce_c2(t)))
        o.fail("s=" + std::to_string(s) + ", t=" + std::to_string(t));
  if (o.pass) o.detail = "0 <= s,t <= 6";
  return o;
}

Outcome branching_spot_values() {
  Outcome o;
  Rational w(3, 2);
  Integer a = assemble_branching(expand_family(sl5_minimal_family(), w), w).coefficient(w);
  Integer b = assemble_branching(expand_family(sl6_minimal_family(), w), w).coefficient(w);
  if (a != 6) o.fail("first template q^{3/2} coefficient " + a.str() + ", expected 6");
  if (b != 8) o.fail("second template q^{3/2} coefficient " + b.str() + ", expected 8");

  // Structure: the weight-3/2 space of the second template is two copies of
  // E^{lambda_1} (s = +-1) tensored with one-dimensional Fock and Ising tops.
  Integer structural = 0;
  for (int s : {-1, 1}) {
    Rational h = h_w_minus_one(4, s) + Rational(s * s) / (2 * sl6_minimal_family().kappa) + Rational(1, 2);
    if (h == w) structural += weyl_dim(lambda_s(4, s));
  }
  if (structural != 8) o.fail("top-level description gives " + structural.str());
  if (o.pass) o.detail = "q^{3/2} coefficients 6 and 8";
  return o;
}

Outcome property_suites() {
  Outcome o;
  std::mt19937 rng(42);
  std::uniform_int_distribution<int> coeff(-3, 3), ch(-2, 2), ex(0, 8), cnt(0, 5);
  auto random_series = [&] {
    GradedSeries s(1, 4);
    for (int k = cnt(rng); k > 0; --k) s.add_term(Rational(ex(rng), 2), {ch(rng)}, coeff(rng));
    return s;
  };
  for (int trial = 0; trial < 200; ++trial) {
    GradedSeries a = random_series(), b = random_series(), c = random_series();
    if (series_add(a, b) != series_add(b, a) || series_mul(a, b) != series_mul(b, a)) o.fail("commutativity");
    GradedSeries l = series_mul(series_mul(a, b), c), r = series_mul(a, series_mul(b, c));
    Rational cut = std::min(l.cutoff(), r.cutoff());
    if (l.truncated(cut) != r.truncated(cut)) o.fail("associativity");
    GradedSeries dl = series_mul(a, series_add(b, c)), dr = series_add(series_mul(a, b), series_mul(a, c));
    cut = std::min(dl.cutoff(), dr.cutoff());
    if (dl.truncated(cut) != dr.truncated(cut)) o.fail("distributivity");
  }

  auto flip = [](const GradedSeries& s) {
    GradedSeries out(s.arity(), s.cutoff());
    for (const auto& t : s.terms()) out.add_term(t.exponent, {-t.charge[0]}, t.coefficient);
    return out;
  };
  for (int r = 1; r <= 3; ++r) {
    if (flip(char_betagamma(r, 3)) != char_betagamma(r, 3)) o.fail("beta-gamma charge symmetry");
    if (flip(char_bc(r, 3)) != char_bc(r, 3)) o.fail("bc charge symmetry");
  }

  for_each_local([&](const TripleLabel& x, int) {
    for (int i = -4; i <= 4; ++i)
      if (!locality(x.shifted(i)).local) o.fail(x.to_string() + ": locality not orbit invariant");
  });

  std::vector<SimpleCurrentFamily> fams{betagamma_family(3), bc_family(2), w_minus_one_family(3), j_family(),
                                        l_minus_two_family(4)};
  for (const auto& f : fams)
    for (const auto& g : f.group.box(8))
      if (f.h(g) != f.h(f.group.negate(g))) o.fail(f.name + ": h(g) != h(-g)");
  if (o.pass) o.detail = "ring axioms (200 random triples), charge symmetry, locality, duality";
  return o;
}

struct Criterion {
  int id;
  std::string name;
  std::function<Outcome()> run;
};

}  // namespace

int main(int argc, char** argv) {
  int only = 0;
  for (int i = 1; i < argc; ++i) {
    std::string arg = argv[i];
    if (arg == "--only" && i + 1 < argc) {
      only = std::atoi(argv[++i]);
    } else {
      std::cerr << "usage: acceptance [--only N]\n";
      return 1;
    }
  }

  std::vector<Criterion> criteria{
      {1, "coset identity suite (m = 3, 4)", coset_suite},
      {2, "rank-2 branching", rank_two_branching},
      {3, "orbit minimization", minimization},
      {4, "induced-module identification", identification},
      {5, "bigraded decomposition", big_decomposition},
      {6, "extension types", extension_types},
      {7, "induction monoidality", induction_monoidal},
      {8, "branching spot values", branching_spot_values},
      {9, "property suites", property_suites},
  };

  bool all = true;
  for (const auto& c : criteria) {
    if (only && c.id != only) continue;
    auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::ostringstream line;
    line.precision(2);
    line << std::fixed << "criterion " << c.id << ": " << (o.pass ? "PASS" : "FAIL") << "  " << c.name << " -- "
         << o.detail << " (" << secs << "s)";
    std::cout << line.str() << std::endl;
    all = all && o.pass;
  }
  return all ? 0 : 1;
}
