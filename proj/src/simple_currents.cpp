#include "vachar/simple_currents.hpp"

#include "vachar/root_systems.hpp"

#include <cstdlib>
#include <sstream>
#include <stdexcept>

namespace vachar {

namespace {

std::int64_t mod_pos(std::int64_t a, std::int64_t n) {
  std::int64_t r = a % n;
  return r < 0 ? r + n : r;
}

int sign_of_parity(std::int64_t s) { return s % 2 == 0 ? 1 : -1; }

std::int64_t single(const GroupElement& g) {
  if (g.size() != 1) throw std::invalid_argument("family is indexed by Z; got a tuple of size " +
                                                 std::to_string(g.size()));
  return g[0];
}

IndexGroup integers() { return IndexGroup{1, {}}; }

std::string key_of(const GroupElement& g) {
  std::string out;
  for (std::size_t i = 0; i < g.size(); ++i) out += (i ? "," : "") + std::to_string(g[i]);
  return out;
}

GroupElement parse_key(const std::string& text) {
  GroupElement g;
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, ',')) g.push_back(std::stoll(part));
  return g;
}

template <class T>
std::function<T(const GroupElement&)> table_lookup(const std::string& family, const std::string& what,
                                                   const IndexGroup& group, std::map<GroupElement, T> table) {
  return [family, what, group, table = std::move(table)](const GroupElement& g) {
    auto it = table.find(group.normalize(g));
    if (it == table.end())
      throw std::out_of_range(family + ": no " + what + " entry for index (" + key_of(g) + ")");
    return it->second;
  };
}

}  // namespace

GroupElement IndexGroup::normalize(GroupElement g) const {
  if (g.size() != dimension())
    throw std::invalid_argument("group element of size " + std::to_string(g.size()) + ", expected " +
                                std::to_string(dimension()));
  for (std::size_t i = 0; i < torsion.size(); ++i) g[free_rank + i] = mod_pos(g[free_rank + i], torsion[i]);
  return g;
}

GroupElement IndexGroup::add(const GroupElement& x, const GroupElement& y) const {
  if (x.size() != dimension() || y.size() != dimension())
    throw std::invalid_argument("group elements do not match the index group");
  GroupElement out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) out[i] = x[i] + y[i];
  return normalize(std::move(out));
}

GroupElement IndexGroup::negate(const GroupElement& x) const {
  GroupElement out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) out[i] = -x[i];
  return normalize(std::move(out));
}

std::vector<GroupElement> IndexGroup::box(std::int64_t radius) const {
  std::vector<GroupElement> out{GroupElement{}};
  for (std::size_t i = 0; i < dimension(); ++i) {
    std::int64_t lo = static_cast<int>(i) < free_rank ? -radius : 0;
    std::int64_t hi = static_cast<int>(i) < free_rank ? radius : torsion[i - free_rank] - 1;
    std::vector<GroupElement> next;
    for (const auto& prefix : out)
      for (std::int64_t v = lo; v <= hi; ++v) {
        GroupElement g = prefix;
        g.push_back(v);
        next.push_back(std::move(g));
      }
    out = std::move(next);
  }
  return out;
}

std::string to_string(ExtensionType t) {
  switch (t) {
    case ExtensionType::IntegerGraded: return "integer-graded";
    case ExtensionType::HalfIntegerGraded: return "half-integer-graded";
    case ExtensionType::Superalgebra: return "superalgebra";
  }
  return "?";
}

Rational SimpleCurrentFamily::twist(const GroupElement& g) const { return frac_of(h(g)); }

SimpleCurrentFamily betagamma_family(int m) {
  if (m < 1) throw std::invalid_argument("betagamma family needs m >= 1");
  return {"betagamma", integers(),
          [](const GroupElement& g) { return Rational(std::llabs(single(g)), 2); },
          [](const GroupElement& g) { return sign_of_parity(single(g)); },
          [](const GroupElement&) { return false; }};
}

SimpleCurrentFamily bc_family(int n) {
  if (n < 1) throw std::invalid_argument("bc family needs n >= 1");
  return {"bc", integers(),
          [n](const GroupElement& g) {
            // lowest state: fill the n modes of weight 1/2, then 3/2, ...
            std::int64_t t = std::llabs(single(g));
            std::int64_t q = t / n, rem = t % n;
            return Rational(n * q * q, 2) + Rational(rem * (2 * q + 1), 2);
          },
          [](const GroupElement&) { return 1; },
          [](const GroupElement& g) { return single(g) % 2 != 0; }};
}

SimpleCurrentFamily w_minus_one_family(int m) {
  if (m < 2) throw std::invalid_argument("W-1 family needs m >= 2");
  return {"W-1", integers(),
          [m](const GroupElement& g) {
            std::int64_t s = std::llabs(single(g));
            return Rational(s * (m + s), 2 * m);
          },
          [](const GroupElement& g) { return sign_of_parity(single(g)); },
          [](const GroupElement&) { return false; }};
}

SimpleCurrentFamily j_family() {
  return {"J", integers(),
          [](const GroupElement& g) {
            std::int64_t s = single(g);
            std::int64_t a = std::llabs(s);
            return Rational(s * s + a + a % 2, 2);
          },
          [](const GroupElement& g) { return sign_of_parity(single(g)); },
          [](const GroupElement&) { return false; }};
}

SimpleCurrentFamily l_minus_two_family(int m) {
  if (m < 3) throw std::invalid_argument("L-2 family needs m >= 3 (k = -2 is critical for sl_2)");
  return {"L-2", integers(),
          [m](const GroupElement& g) {
            std::int64_t s = single(g);
            int k = static_cast<int>(std::llabs(s));
            DominantWeight w = DominantWeight::multiple_of_fundamental(m, s >= 0 ? 2 : m - 2, k);
            Rational lambda_squared = Rational(-2, m) * s * s;
            return sugawara_h(m, -2, w) + lambda_squared / 2;
          },
          [](const GroupElement&) { return 1; },
          [](const GroupElement&) { return false; }};
}

SimpleCurrentFamily builtin_family(const std::string& name, int rank) {
  if (name == "betagamma") return betagamma_family(rank);
  if (name == "bc") return bc_family(rank);
  if (name == "W-1") return w_minus_one_family(rank);
  if (name == "J") return j_family();
  if (name == "L-2") return l_minus_two_family(rank);
  throw std::invalid_argument("unknown family '" + name + "' (known: betagamma, bc, W-1, J, L-2)");
}

SimpleCurrentFamily family_from_json(const nlohmann::json& spec) {
  std::string name = spec.at("name").get<std::string>();
  IndexGroup group;
  if (spec.contains("group")) {
    const auto& gj = spec.at("group");
    group.free_rank = gj.value("free_rank", 1);
    group.torsion = gj.value("torsion", std::vector<std::int64_t>{});
    for (auto t : group.torsion)
      if (t < 1) throw std::invalid_argument(name + ": torsion orders must be positive");
  }

  SimpleCurrentFamily family;
  const auto& hj = spec.at("h");
  if (hj.contains("formula")) {
    family = builtin_family(hj.at("formula").get<std::string>(), hj.value("rank", 1));
    if (group.dimension() != 1 || group.free_rank != 1)
      throw std::invalid_argument(name + ": formula families are indexed by Z");
  } else {
    std::map<GroupElement, Rational> table;
    for (const auto& [k, v] : hj.at("table").items())
      table[group.normalize(parse_key(k))] = parse_rational(v.get<std::string>());
    family.h = table_lookup(name, "h", group, std::move(table));
    family.d = [](const GroupElement&) { return 1; };
    family.odd = [](const GroupElement&) { return false; };
  }
  family.name = name;
  family.group = group;

  if (spec.contains("d")) {
    std::map<GroupElement, int> table;
    for (const auto& [k, v] : spec.at("d").at("table").items()) {
      int d = v.get<int>();
      if (d != 1 && d != -1) throw std::invalid_argument(name + ": dimensions must be +1 or -1");
      table[group.normalize(parse_key(k))] = d;
    }
    family.d = table_lookup(name, "d", group, std::move(table));
  }
  if (spec.contains("parity")) {
    const auto& pj = spec.at("parity");
    if (pj.is_string()) {
      std::string p = pj.get<std::string>();
      if (p == "even")
        family.odd = [](const GroupElement&) { return false; };
      else if (p == "odd-on-odd")
        family.odd = [](const GroupElement& g) { return !g.empty() && g[0] % 2 != 0; };
      else
        throw std::invalid_argument(name + ": unknown parity rule '" + p + "'");
    } else {
      std::map<GroupElement, bool> table;
      for (const auto& [k, v] : pj.at("table").items())
        table[group.normalize(parse_key(k))] = v.get<std::string>() == "odd";
      family.odd = table_lookup(name, "parity", group, std::move(table));
    }
  }
  return family;
}

CurrentLabel fuse(const SimpleCurrentFamily& family, const CurrentLabel& x, const CurrentLabel& y) {
  if (x.family != family.name || y.family != family.name)
    throw std::invalid_argument("cannot fuse " + x.family + " with " + y.family + " in the " + family.name +
                                " ring");
  return {family.name, family.group.add(x.index, y.index)};
}

bool monodromy_trivial(const SimpleCurrentFamily& family, const GroupElement& x, const GroupElement& y) {
  Rational defect = family.h(family.group.add(x, y)) - family.h(family.group.normalize(x)) -
                    family.h(family.group.normalize(y));
  return is_integer(defect);
}

bool theta_two_periodic(const SimpleCurrentFamily& family, std::span<const GroupElement> probe) {
  for (const auto& g : probe)
    for (const auto& gp : probe) {
      GroupElement shifted = family.group.add(g, family.group.add(gp, gp));
      try {
        if (family.twist(shifted) != family.twist(family.group.normalize(g))) return false;
      } catch (const std::out_of_range&) {
        // tables only cover part of the probe box
      }
    }
  return true;
}

ExtensionType extension_type(const SimpleCurrentFamily& family, const GroupElement& g,
                             std::span<const GroupElement> probe) {
  if (!theta_two_periodic(family, probe))
    throw std::domain_error(family.name + ": twists are not 2-periodic on the probe set");
  Rational h = family.h(family.group.normalize(g));
  Rational theta = frac_of(h);
  int theta_sign;
  if (theta == 0)
    theta_sign = 1;
  else if (theta == Rational(1, 2))
    theta_sign = -1;
  else
    throw std::domain_error(family.name + ": twist " + format_rational(theta) + " of (" + key_of(g) +
                            ") is not +1 or -1");
  int c = theta_sign * family.d(family.group.normalize(g));  // d = +-1, so theta/d = theta*d
  if (c == -1) return ExtensionType::Superalgebra;
  return theta_sign == 1 ? ExtensionType::IntegerGraded : ExtensionType::HalfIntegerGraded;
}

std::string to_string(const FusionElement& x, const std::string& symbol) {
  if (x.empty()) return "0";
  std::string out;
  for (const auto& [label, mult] : x) {
    if (!out.empty()) out += " + ";
    if (mult != 1) out += std::to_string(mult) + "*";
    out += symbol + "(" + std::to_string(label) + ")";
  }
  return out;
}

FusionElement cg_fuse_sl2(std::int64_t s, std::int64_t t) {
  if (s < 0 || t < 0) throw std::invalid_argument("sl_2 labels must be nonnegative");
  FusionElement out;
  for (std::int64_t j = std::llabs(s - t); j <= s + t; j += 2) out[j] += 1;
  return out;
}

FusionElement induce_c2(std::int64_t s) {
  FusionElement out;
  std::int64_t a = std::llabs(s);
  for (std::int64_t t = -a; t <= a; t += 2) out[t] += 1;
  return out;
}

FusionElement induce_c2(const FusionElement& x) {
  FusionElement out;
  for (const auto& [label, mult] : x)
    for (const auto& [t, k] : induce_c2(label)) out[t] += mult * k;
  return out;
}

FusionElement group_ring_product(const FusionElement& x, const FusionElement& y) {
  FusionElement out;
  for (const auto& [a, ma] : x)
    for (const auto& [b, mb] : y) out[a + b] += ma * mb;
  return out;
}

}  // namespace vachar
