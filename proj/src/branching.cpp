#include "vachar/branching.hpp"

#include "vachar/coset.hpp"
#include "vachar/free_fields.hpp"

#include <stdexcept>

namespace vachar {

namespace {

std::int64_t mod_pos(std::int64_t a, std::int64_t n) {
  std::int64_t r = a % n;
  return r < 0 ? r + n : r;
}

// prod_{k>=0} (1 + sign q^{k+1/2})
GradedSeries half_integer_fermions(int sign, const Rational& cutoff) {
  GradedSeries out = GradedSeries::one(0, cutoff);
  for (Rational w(1, 2); w <= cutoff; w += 1) {
    GradedSeries f = GradedSeries::one(0, cutoff);
    f.add_term(w, {}, sign);
    out = multiply_capped(out, f, cutoff);
  }
  return out;
}

Rational fock_top(const Rational& kappa, std::int64_t charge) {
  if (kappa == 0) throw std::invalid_argument("Fock factor with kappa = 0");
  return Rational(charge) * charge / (2 * kappa);
}

BranchingFactor w_factor(int m, std::int64_t s) {
  BranchingFactor f;
  f.kind = BranchingFactor::Kind::W;
  f.rank = m;
  f.label = s;
  return f;
}

BranchingFactor fock_factor(const Rational& kappa, std::int64_t s) {
  BranchingFactor f;
  f.kind = BranchingFactor::Kind::Fock;
  f.value = kappa;
  f.label = s;
  return f;
}

BranchingFactor ising_factor(const Rational& h) {
  BranchingFactor f;
  f.kind = BranchingFactor::Kind::Ising;
  f.value = h;
  return f;
}

BranchingFactor explicit_factor(GradedSeries series) {
  BranchingFactor f;
  f.kind = BranchingFactor::Kind::Explicit;
  f.series = std::move(series);
  return f;
}

}  // namespace

GradedSeries ising_character(const Rational& h, const Rational& cutoff) {
  if (h == 0 || h == Rational(1, 2)) {
    GradedSeries plus = half_integer_fermions(1, cutoff);
    GradedSeries minus = half_integer_fermions(-1, cutoff);
    GradedSeries two_chi = h == 0 ? series_add(plus, minus) : series_sub(plus, minus);
    return two_chi.divided_exactly(2);
  }
  if (h == Rational(1, 16)) {
    GradedSeries out(0, cutoff);
    if (cutoff < h) return out;
    Rational inner = cutoff - h;
    out = GradedSeries::one(0, inner);
    for (std::int64_t k = 1; k <= inner; ++k) {
      GradedSeries f = GradedSeries::one(0, inner);
      f.add_term(k, {}, 1);
      out = multiply_capped(out, f, inner);
    }
    return out.shifted(h, {});
  }
  throw std::invalid_argument("Ising characters exist for h = 0, 1/2, 1/16; got " + format_rational(h));
}

Rational BranchingFactor::lead() const {
  switch (kind) {
    case Kind::W: return h_w_minus_one(rank, label);
    case Kind::L1: return h_l_one(rank, label);
    case Kind::Fock: return fock_top(value, label);
    case Kind::Ising: return value;
    case Kind::Explicit: return series->min_exponent().value_or(series->cutoff());
  }
  return 0;
}

std::string BranchingFactor::describe() const {
  switch (kind) {
    case Kind::W: return "W(" + std::to_string(rank) + "," + std::to_string(label) + ")";
    case Kind::L1: return "L1(" + std::to_string(rank) + "," + std::to_string(label) + ")";
    case Kind::Fock: return "Fock(" + format_rational_short(value) + "," + std::to_string(label) + ")";
    case Kind::Ising: return "Ising(" + format_rational_short(value) + ")";
    case Kind::Explicit: return "explicit";
  }
  return "?";
}

GradedSeries assemble_branching(const BranchingTemplate& tmpl, const Rational& cutoff) {
  GradedSeries total(0, cutoff);
  for (const auto& term : tmpl.terms) {
    Rational lead_sum = 0;
    for (const auto& f : term.factors) lead_sum += f.lead();
    if (lead_sum > cutoff) continue;

    GradedSeries product = GradedSeries::one(0, cutoff - lead_sum);
    for (const auto& f : term.factors) {
      Rational need = cutoff - (lead_sum - f.lead());
      GradedSeries piece(0, need);
      switch (f.kind) {
        case BranchingFactor::Kind::W: piece = char_W(f.rank, f.label, need).series; break;
        case BranchingFactor::Kind::L1: piece = char_L1(f.rank, f.label, need).series; break;
        case BranchingFactor::Kind::Fock: piece = fock_q_series(f.lead(), need); break;
        case BranchingFactor::Kind::Ising: piece = ising_character(f.value, need); break;
        case BranchingFactor::Kind::Explicit:
          if (f.series->arity() != 0) throw std::invalid_argument("explicit factors must be pure q-series");
          if (f.series->cutoff() < need)
            throw std::invalid_argument("explicit factor in term s=" + std::to_string(term.s) +
                                        " is certified to " + format_rational(f.series->cutoff()) +
                                        " but " + format_rational(need) + " is needed");
          piece = f.series->truncated(need);
          break;
      }
      product = series_mul(product, piece);
    }
    total = series_add(total, product.truncated(std::min(product.cutoff(), cutoff)));
  }
  return total;
}

BranchingTemplate expand_family(const BranchingFamily& family, const Rational& cutoff) {
  if (family.kappa <= 0) throw std::invalid_argument(family.name + ": family templates need kappa > 0");
  Rational extra_floor = 0;
  if (family.extra == BranchingFamily::Extra::Explicit) {
    for (std::int64_t c = 0; c < family.modulus; ++c) {
      auto it = family.explicit_series.find(c);
      if (it == family.explicit_series.end())
        throw std::invalid_argument(family.name + ": missing factor series for s = " + std::to_string(c) +
                                    " mod " + std::to_string(family.modulus));
      extra_floor = std::min(extra_floor, it->second.min_exponent().value_or(it->second.cutoff()));
    }
  }

  BranchingTemplate out{family.name, {}};
  auto make_term = [&](std::int64_t s) {
    BranchingTerm term{s, {w_factor(family.w_rank, s), fock_factor(family.kappa, s)}};
    if (family.extra == BranchingFamily::Extra::Ising)
      term.factors.push_back(ising_factor(Rational(mod_pos(s, 2), 2)));
    else if (family.extra == BranchingFamily::Extra::Explicit)
      term.factors.push_back(explicit_factor(family.explicit_series.at(mod_pos(s, family.modulus))));
    return term;
  };
  // W and Fock leads both grow with |s|.
  for (std::int64_t a = 0; h_w_minus_one(family.w_rank, a) + fock_top(family.kappa, a) + extra_floor <= cutoff; ++a) {
    out.terms.push_back(make_term(a));
    if (a != 0) out.terms.push_back(make_term(-a));
  }
  return out;
}

BranchingFamily sl5_minimal_family() { return minimal_w_family(3); }

BranchingFamily sl6_minimal_family() { return minimal_w_family(4); }

BranchingFamily minimal_w_family(int n, const std::map<std::int64_t, GradedSeries>& extra) {
  if (n < 3) throw std::invalid_argument("the branching family needs n >= 3");
  BranchingFamily f;
  f.name = "W-2(sl" + std::to_string(n + 2) + ")";
  f.w_rank = n;
  f.kappa = Rational(n * (n - 2), n + 2);
  if (n == 4) {
    f.extra = BranchingFamily::Extra::Ising;
  } else if (n > 4) {
    f.extra = BranchingFamily::Extra::Explicit;
    f.modulus = n;
    f.explicit_series = extra;
  }
  return f;
}

GradedSeries series_from_json(const nlohmann::json& spec) {
  std::size_t arity = spec.value("arity", std::size_t{0});
  GradedSeries out(arity, parse_rational(spec.at("cutoff").get<std::string>()));
  for (const auto& t : spec.at("terms")) {
    Charge charge = t.value("charge", Charge{});
    if (charge.size() != arity) throw std::invalid_argument("series term has the wrong charge arity");
    Rational e = parse_rational(t.at("exponent").get<std::string>());
    if (e > out.cutoff()) throw std::invalid_argument("series term above its declared cutoff");
    out.add_term(e, charge, Integer(t.at("coefficient").get<std::string>()));
  }
  return out;
}

nlohmann::json series_to_json(const GradedSeries& series) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& t : series.terms())
    terms.push_back({{"exponent", format_rational(t.exponent)}, {"charge", t.charge},
                     {"coefficient", t.coefficient.str()}});
  return {{"arity", series.arity()}, {"cutoff", format_rational(series.cutoff())}, {"terms", terms}};
}

namespace {

BranchingFactor factor_from_json(const nlohmann::json& j) {
  std::string kind = j.at("kind").get<std::string>();
  BranchingFactor f;
  if (kind == "W") {
    f = w_factor(j.at("m").get<int>(), j.at("s").get<std::int64_t>());
  } else if (kind == "L1") {
    f.kind = BranchingFactor::Kind::L1;
    f.rank = j.at("n").get<int>();
    f.label = j.at("a").get<std::int64_t>();
  } else if (kind == "fock") {
    f = fock_factor(parse_rational(j.at("kappa").get<std::string>()), j.at("charge").get<std::int64_t>());
  } else if (kind == "ising") {
    f = ising_factor(parse_rational(j.at("h").get<std::string>()));
  } else if (kind == "explicit") {
    f = explicit_factor(series_from_json(j.at("series")));
  } else {
    throw std::invalid_argument("unknown factor kind '" + kind + "'");
  }
  return f;
}

std::map<std::int64_t, GradedSeries> residue_series(const nlohmann::json& j) {
  std::map<std::int64_t, GradedSeries> out;
  for (const auto& [k, v] : j.items()) out.emplace(std::stoll(k), series_from_json(v));
  return out;
}

}  // namespace

BranchingTemplate template_from_json(const nlohmann::json& spec, const Rational& cutoff) {
  if (spec.contains("builtin")) {
    std::string b = spec.at("builtin").get<std::string>();
    std::map<std::int64_t, GradedSeries> extra;
    if (spec.contains("series")) extra = residue_series(spec.at("series"));
    if (b == "sl5") return expand_family(sl5_minimal_family(), cutoff);
    if (b == "sl6") return expand_family(sl6_minimal_family(), cutoff);
    if (b == "minimal") return expand_family(minimal_w_family(spec.at("n").get<int>(), extra), cutoff);
    throw std::invalid_argument("unknown builtin template '" + b + "'");
  }
  std::string name = spec.value("name", std::string("template"));
  if (spec.contains("family")) {
    const auto& fj = spec.at("family");
    BranchingFamily f;
    f.name = name;
    f.w_rank = fj.at("w_rank").get<int>();
    f.kappa = parse_rational(fj.at("kappa").get<std::string>());
    std::string extra = fj.value("extra", std::string("none"));
    if (extra == "ising") {
      f.extra = BranchingFamily::Extra::Ising;
    } else if (extra == "explicit") {
      f.extra = BranchingFamily::Extra::Explicit;
      f.modulus = fj.at("modulus").get<std::int64_t>();
      f.explicit_series = residue_series(fj.value("series", nlohmann::json::object()));
    } else if (extra != "none") {
      throw std::invalid_argument("unknown extra factor '" + extra + "'");
    }
    return expand_family(f, cutoff);
  }
  BranchingTemplate out{name, {}};
  for (const auto& tj : spec.value("terms", nlohmann::json::array())) {
    BranchingTerm term;
    term.s = tj.value("s", std::int64_t{0});
    for (const auto& fj : tj.at("factors")) term.factors.push_back(factor_from_json(fj));
    out.terms.push_back(std::move(term));
  }
  return out;
}

}  // namespace vachar
