#pragma once

// Group-like fusion rings of simple currents, the sl_2 Clebsch-Gordan ring
// and induction to the rank-2 W_{-1} ring.

#include "vachar/scalar.hpp"

#include <functional>
#include <map>
#include <set>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

namespace vachar {

using GroupElement = std::vector<std::int64_t>;

/// Z^free_rank x Z/t_1 x ... x Z/t_k. Elements list the free coordinates
/// first; torsion coordinates are kept reduced to [0, t_i).
struct IndexGroup {
  int free_rank = 1;
  std::vector<std::int64_t> torsion;

  std::size_t dimension() const { return free_rank + torsion.size(); }
  GroupElement zero() const { return GroupElement(dimension(), 0); }
  GroupElement normalize(GroupElement g) const;
  GroupElement add(const GroupElement& x, const GroupElement& y) const;
  GroupElement negate(const GroupElement& x) const;
  /// All elements with free coordinates in [-radius, radius] and every torsion residue.
  std::vector<GroupElement> box(std::int64_t radius) const;
};

enum class ExtensionType { IntegerGraded, HalfIntegerGraded, Superalgebra };
std::string to_string(ExtensionType t);

struct SimpleCurrentFamily {
  std::string name;
  IndexGroup group;
  std::function<Rational(const GroupElement&)> h;
  std::function<int(const GroupElement&)> d;       // quantum dimension, +1 or -1
  std::function<bool(const GroupElement&)> odd;    // parity

  /// h mod 1, in [0, 1).
  Rational twist(const GroupElement& g) const;
};

struct CurrentLabel {
  std::string family;
  GroupElement index;
  friend bool operator==(const CurrentLabel&, const CurrentLabel&) = default;
};

// Built-in families, all indexed by Z.
SimpleCurrentFamily betagamma_family(int m);   // h = |s|/2, d = (-1)^s
SimpleCurrentFamily bc_family(int n);          // lowest weight of charge t, odd for odd t
SimpleCurrentFamily w_minus_one_family(int m); // h = |s|(m+|s|)/(2m), d = (-1)^s
SimpleCurrentFamily j_family();                // h = (s^2 + |s| + (s mod 2))/2, d = (-1)^s
/// L_{-2}(s omega_2) (or |s| omega_{m-2}) tensored with the Fock module of
/// lambda^2 = -2 s^2 / m; m >= 3.
SimpleCurrentFamily l_minus_two_family(int m);

/// Built-in by name: "betagamma", "bc", "W-1", "J", "L-2"; `rank` is m or n.
SimpleCurrentFamily builtin_family(const std::string& name, int rank);

/// {name, group: {free_rank, torsion}, h: {table: {"i": "p/q"}} | {formula: id, rank},
///  d: {table} (default +1), parity: {table} | "even" | "odd-on-odd"}
/// Indices in tables are comma-joined coordinates.
SimpleCurrentFamily family_from_json(const nlohmann::json& spec);

CurrentLabel fuse(const SimpleCurrentFamily& family, const CurrentLabel& x, const CurrentLabel& y);
/// h(x+y) - h(x) - h(y) in Z.
bool monodromy_trivial(const SimpleCurrentFamily& family, const GroupElement& x, const GroupElement& y);

/// theta(g + 2g') = theta(g) for all g, g' in the probe set.
bool theta_two_periodic(const SimpleCurrentFamily& family, std::span<const GroupElement> probe);

/// c = theta(g) / d(g): c = -1 gives a superalgebra, c = +1 an integer or
/// half-integer graded algebra according to h(g).
ExtensionType extension_type(const SimpleCurrentFamily& family, const GroupElement& g,
                             std::span<const GroupElement> probe);

/// True iff no label is fixed by two distinct probe elements.
template <class Label, class Action>
bool fixed_point_free(const IndexGroup& group, std::span<const GroupElement> probe,
                      std::span<const Label> labels, Action act) {
  for (const Label& label : labels) {
    std::map<Label, GroupElement> seen;
    std::set<GroupElement> distinct;
    for (const auto& raw : probe) {
      GroupElement g = group.normalize(raw);
      if (!distinct.insert(g).second) continue;
      auto [it, inserted] = seen.emplace(act(g, label), g);
      if (!inserted) return false;
    }
  }
  return true;
}

/// Multiset of labels with positive multiplicities.
using FusionElement = std::map<std::int64_t, std::int64_t>;
std::string to_string(const FusionElement& x, const std::string& symbol);

/// lambda_s x lambda_t = lambda_{|s-t|} + lambda_{|s-t|+2} + ... + lambda_{s+t}.
FusionElement cg_fuse_sl2(std::int64_t s, std::int64_t t);
/// W_{-|s|} + W_{-|s|+2} + ... + W_{|s|}.
FusionElement induce_c2(std::int64_t s);
/// Summand-wise induction of an sl_2 fusion element.
FusionElement induce_c2(const FusionElement& x);
/// Product in the group ring of Z (W_{-1} fusion).
FusionElement group_ring_product(const FusionElement& x, const FusionElement& y);

}  // namespace vachar
