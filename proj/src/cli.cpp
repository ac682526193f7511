#include "vachar/cli.hpp"

#include "vachar/branching.hpp"
#include "vachar/coset.hpp"
#include "vachar/free_fields.hpp"
#include "vachar/simple_currents.hpp"
#include "vachar/slnm.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <regex>
#include <sstream>

namespace vachar::cli {

namespace {

using nlohmann::json;

struct UsageFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string fmt(const Rational& r) { return format_rational(r); }

json mismatch_json(const std::optional<SeriesMismatch>& m) {
  if (!m) return nullptr;
  return {{"exponent", fmt(m->exponent)}, {"charge", m->charge}, {"expected", m->expected.str()},
          {"actual", m->actual.str()}};
}

json report_json(const VerificationReport& r) {
  json out = {{"identity", r.identity}, {"cutoff", fmt(r.cutoff)}, {"status", r.passed ? "pass" : "fail"}};
  if (r.first_mismatch) out["first_mismatch"] = mismatch_json(r.first_mismatch);
  if (!r.notes.empty()) out["notes"] = r.notes;
  return out;
}

json weight_json(const DominantWeight& w) { return {{"rank", w.rank}, {"labels", w.labels}}; }

json scalars_json(const std::vector<Scalar>& v) {
  json out = json::array();
  for (const auto& x : v) out.push_back(x.to_string());
  return out;
}

json leading_json(const GradedSeries& s) {
  auto terms = s.terms();
  if (terms.empty()) return nullptr;
  Integer total = 0;
  for (const auto& t : terms)
    if (t.exponent == terms.front().exponent) total += t.coefficient;
  return {{"exponent", fmt(terms.front().exponent)}, {"coefficient", total.str()}};
}

// TSV: one "path<TAB>value" line per scalar leaf, in key order.
void flatten(const json& j, const std::string& path, std::ostringstream& os) {
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) flatten(v, path.empty() ? k : path + "." + k, os);
  } else if (j.is_array()) {
    for (std::size_t i = 0; i < j.size(); ++i) flatten(j[i], path + "." + std::to_string(i), os);
  } else {
    os << path << '\t' << (j.is_string() ? j.get<std::string>() : j.dump()) << '\n';
  }
}

std::string render(const json& payload, const std::string& format) {
  if (format == "tsv") {
    std::ostringstream os;
    flatten(payload, "", os);
    return os.str();
  }
  return payload.dump(2) + "\n";
}

// An empty text means the option was not given.
Rational cutoff_value(const std::string& given) {
  std::string text = given.empty() ? default_cutoff() : given;
  Rational c = parse_rational(text);
  if (c <= 0) throw UsageFailure("cutoff must be positive, got " + text);
  return c;
}

GroupElement parse_element(const std::string& text) {
  GroupElement g;
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, ',')) g.push_back(std::stoll(part));
  if (g.empty()) throw UsageFailure("empty group element");
  return g;
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageFailure("cannot read " + path);
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw UsageFailure(path + ": " + e.what());
  }
}

struct Options {
  std::string format = "json";
  std::string cutoff;
  // shared integer parameters
  int n = 0, m = 0, rank = 0;
  std::int64_t s = 0, a = 0, r = 0, t_int = 0;
  std::string t = "0";
  std::string kappa = "1";
  std::string h = "0";
  std::string x, y, g;
  std::string family;
  std::string file;
  std::string r_range = "0:0";
  std::string lhs, rhs;
  std::vector<std::string> positionals;
  int probe = 6;
};

int positional_int(const Options& o, std::size_t i, int fallback) {
  if (o.positionals.size() <= i) return fallback;
  return std::stoi(o.positionals[i]);
}

TripleLabel label_from(const Options& o) {
  int n = positional_int(o, 0, o.n), m = positional_int(o, 1, o.m);
  std::int64_t s = o.positionals.size() > 2 ? std::stoll(o.positionals[2]) : o.s;
  std::int64_t a = o.positionals.size() > 3 ? std::stoll(o.positionals[3]) : o.a;
  Rational t = parse_rational(o.positionals.size() > 4 ? o.positionals[4] : o.t);
  return TripleLabel::make(n, m, s, a, t);
}

json label_json(const TripleLabel& l) {
  return {{"n", l.n}, {"m", l.m}, {"s", l.s}, {"a", l.a}, {"t", fmt(l.t)}};
}

SimpleCurrentFamily family_from(const Options& o) {
  if (!o.file.empty()) return family_from_json(read_json_file(o.file));
  if (o.family.empty()) throw UsageFailure("name a built-in family or pass --file");
  int rank = o.rank ? o.rank : (o.m ? o.m : o.n);
  if (rank == 0 && o.family != "J") throw UsageFailure("family " + o.family + " needs --rank (or --m / --n)");
  return builtin_family(o.family, rank);
}

std::vector<GroupElement> probe_box(const SimpleCurrentFamily& f, int radius) { return f.group.box(radius); }

json fusion_json(const FusionElement& x, const std::string& symbol) {
  json terms = json::array();
  for (const auto& [label, mult] : x) terms.push_back({{"label", label}, {"multiplicity", mult}});
  return {{"terms", terms}, {"text", to_string(x, symbol)}};
}

struct Outcome {
  json payload;
  bool verification_failed = false;
};

Outcome do_char(const Options& o) {
  Rational cutoff = cutoff_value(o.cutoff);
  std::string fam = o.family;
  json out = {{"family", fam}, {"cutoff", fmt(cutoff)}};
  static const std::regex slnm_re(R"(sl\((\d+)\|(\d+)\))");
  std::smatch match;
  GradedSeries series(0, cutoff);
  if (fam == "betagamma") {
    series = char_betagamma(o.m, cutoff);
    out["m"] = o.m;
  } else if (fam == "bc") {
    series = char_bc(o.n, cutoff);
    out["n"] = o.n;
  } else if (fam == "fock") {
    FockSpec spec = FockSpec::integral(parse_rational(o.kappa), o.s);
    series = char_fock(spec, cutoff);
    out["kappa"] = fmt(spec.kappa);
    out["charge"] = o.s;
    out["top_weight"] = fmt(spec.top_weight());
  } else if (fam == "W") {
    series = char_W(o.m, o.s, cutoff).series;
    out["m"] = o.m;
    out["s"] = o.s;
  } else if (fam == "L1") {
    series = char_L1(o.n, o.a, cutoff).series;
    out["n"] = o.n;
    out["a"] = o.a;
  } else if (fam == "verma") {
    series = verma_char_oracle(o.m, o.s, cutoff);
    out["m"] = o.m;
    out["s"] = o.s;
  } else if (fam == "psl") {
    series = char_psl_component(o.n, o.s, cutoff);
    out["n"] = o.n;
    out["s"] = o.s;
  } else if (fam == "ising") {
    series = ising_character(parse_rational(o.h), cutoff);
    out["h"] = fmt(parse_rational(o.h));
  } else if (fam == "slnm" || std::regex_match(fam, match, slnm_re)) {
    int n = o.n, m = o.m;
    std::int64_t r = o.r;
    if (!match.empty()) {
      n = std::stoi(match[1]);
      m = std::stoi(match[2]);
      if (!o.positionals.empty()) r = std::stoll(o.positionals[0]);
    }
    series = char_L1_slnm(n, m, r, cutoff);
    out["family"] = "sl(" + std::to_string(n) + "|" + std::to_string(m) + ")";
    out["r"] = r;
  } else {
    throw UsageFailure("unknown character family '" + fam +
                       "' (betagamma, bc, fock, W, L1, verma, psl, ising, slnm, sl(n|m))");
  }
  out["leading"] = leading_json(series);
  out["series"] = series_to_json(series);
  return {out};
}

Outcome do_verify(const Options& o) {
  // Series files carry their own cutoffs; compare as far as both are certified.
  bool own_cutoffs = o.family == "series" && o.cutoff.empty();
  Rational cutoff = own_cutoffs ? Rational(0) : cutoff_value(o.cutoff);
  if (o.family == "coset") {
    VerificationReport r = verify_coset_identity(o.m, o.s, cutoff);
    return {report_json(r), !r.passed};
  }
  if (o.family == "psl") {
    VerificationReport r = verify_psl(o.n, o.s, cutoff);
    return {report_json(r), !r.passed};
  }
  if (o.family == "slnm") {
    int n = positional_int(o, 0, o.n), m = positional_int(o, 1, o.m);
    auto colon = o.r_range.find(':');
    if (colon == std::string::npos) throw UsageFailure("--r-range takes lo:hi");
    std::int64_t lo = std::stoll(o.r_range.substr(0, colon)), hi = std::stoll(o.r_range.substr(colon + 1));
    BigDecompositionReport rep = verify_big_decomposition(n, m, lo, hi, cutoff);
    json per = json::array();
    for (const auto& [r, v] : rep.per_r) {
      json j = report_json(v);
      j["r"] = r;
      per.push_back(j);
    }
    json out = {{"identity", "beta-gamma x bc = sum_r Fock(r) x L_1(r omega)"},
                {"n", n}, {"m", m}, {"cutoff", fmt(cutoff)},
                {"status", rep.passed() ? "pass" : "fail"}, {"per_r", per}};
    return {out, !rep.passed()};
  }
  if (o.family == "series") {
    GradedSeries lhs = series_from_json(read_json_file(o.lhs));
    GradedSeries rhs = series_from_json(read_json_file(o.rhs));
    VerificationReport r;
    r.identity = o.lhs + " = " + o.rhs;
    if (own_cutoffs) cutoff = std::min(lhs.cutoff(), rhs.cutoff());
    r.cutoff = cutoff;
    r.first_mismatch = first_mismatch(lhs, rhs, cutoff);
    r.passed = !r.first_mismatch;
    return {report_json(r), !r.passed};
  }
  throw UsageFailure("unknown verification '" + o.family + "' (coset, slnm, psl, series)");
}

Outcome do_locality(const Options& o) {
  TripleLabel l = label_from(o);
  Locality loc = locality(l);
  json out = {{"label", label_json(l)}, {"local", loc.local}, {"h", fmt(h_triple(l))}};
  if (loc.local)
    out["z"] = loc.z;
  else
    out["defect"] = fmt(loc.defect);
  return {out};
}

Outcome do_induce(const Options& o) {
  TripleLabel l = label_from(o);
  MinimumResult mn = min_conformal_weight(l);
  TopLevel top = top_level(l);
  Identification id = identify_induced(l);
  json summands = json::array();
  for (const auto& x : top.summands)
    summands.push_back({{"sl_m", weight_json(x.sl_m)}, {"sl_n", weight_json(x.sl_n)}, {"t", fmt(x.t)},
                        {"shift", x.shift}, {"dimension", x.dimension.str()}});
  json out = {{"label", label_json(l)},
              {"z", locality(l).z},
              {"r", id.r},
              {"n_mu2_s_minus_t", fmt(l.n * (l.mu_squared() * l.s - l.t))},
              {"min_weight", fmt(mn.minimum)},
              {"attaining_shifts", mn.shifts},
              {"boundary", mn.boundary},
              {"h_top_formula", fmt(h_top_formula(l.n, l.m, id.r))},
              {"top_level",
               {{"dualized", top.dualized}, {"total_dimension", top.total_dimension().str()},
                {"summands", summands}}},
              {"nu_labels", scalars_json(id.nu_labels)},
              {"omega_labels", scalars_json(id.omega_labels)}};
  return {out};
}

Outcome do_fuse(const Options& o) {
  SimpleCurrentFamily f = family_from(o);
  CurrentLabel x{f.name, parse_element(o.x)}, y{f.name, parse_element(o.y)};
  CurrentLabel z = fuse(f, x, y);
  return {{{"family", f.name}, {"x", x.index}, {"y", y.index}, {"result", z.index},
           {"h", fmt(f.h(z.index))}}};
}

Outcome do_monodromy(const Options& o) {
  SimpleCurrentFamily f = family_from(o);
  GroupElement x = parse_element(o.x), y = parse_element(o.y);
  Rational defect = f.h(f.group.add(x, y)) - f.h(f.group.normalize(x)) - f.h(f.group.normalize(y));
  return {{{"family", f.name}, {"x", x}, {"y", y}, {"h_defect", fmt(defect)},
           {"trivial", monodromy_trivial(f, x, y)}}};
}

Outcome do_extension_type(const Options& o) {
  SimpleCurrentFamily f = family_from(o);
  GroupElement g = parse_element(o.g);
  auto probe = probe_box(f, o.probe);
  ExtensionType t = extension_type(f, g, probe);
  GroupElement gn = f.group.normalize(g);
  return {{{"family", f.name}, {"g", gn}, {"h", fmt(f.h(gn))}, {"twist", fmt(f.twist(gn))},
           {"dimension", f.d(gn)}, {"odd", f.odd(gn)}, {"type", to_string(t)}}};
}

Outcome do_assemble(const Options& o) {
  Rational cutoff = cutoff_value(o.cutoff);
  BranchingTemplate tmpl;
  if (o.family == "sl5")
    tmpl = expand_family(sl5_minimal_family(), cutoff);
  else if (o.family == "sl6")
    tmpl = expand_family(sl6_minimal_family(), cutoff);
  else if (o.family == "minimal")
    tmpl = expand_family(minimal_w_family(o.n), cutoff);
  else
    tmpl = template_from_json(read_json_file(o.family), cutoff);
  GradedSeries series = assemble_branching(tmpl, cutoff);
  json terms = json::array();
  for (const auto& t : tmpl.terms) {
    json factors = json::array();
    for (const auto& f : t.factors) factors.push_back(f.describe());
    terms.push_back({{"s", t.s}, {"factors", factors}});
  }
  return {{{"template", tmpl.name}, {"cutoff", fmt(cutoff)}, {"terms", terms},
           {"series", series_to_json(series)}}};
}

RunResult run_batch(const std::string& path, const std::string& format);

RunResult run_impl(const std::vector<std::string>& args) {
  CLI::App app{"Exact characters, fusion data and verification for free-field cosets and L_1(sl(n|m))", "vachar"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_option("--format", o.format, "json or tsv")->check(CLI::IsMember({"json", "tsv"}));

  auto with_cutoff = [&](CLI::App* c) { c->add_option("--cutoff", o.cutoff, "q-exponent cutoff, p/q"); };
  auto label_opts = [&](CLI::App* c) {
    c->add_option("--n", o.n);
    c->add_option("--m", o.m);
    c->add_option("--s", o.s);
    c->add_option("--a", o.a);
    c->add_option("--t", o.t, "t = lambda mu, p/q");
    c->add_option("positionals", o.positionals, "n m s a t");
  };

  auto* ch = app.add_subcommand("char", "character of a family");
  ch->add_option("family", o.family)->required();
  ch->add_option("positionals", o.positionals);
  ch->add_option("--n", o.n);
  ch->add_option("--m", o.m);
  ch->add_option("--s", o.s);
  ch->add_option("--a", o.a);
  ch->add_option("--r", o.r);
  ch->add_option("--kappa", o.kappa);
  ch->add_option("--weight", o.h, "Ising lowest weight: 0, 1/2 or 1/16");
  with_cutoff(ch);

  auto* ver = app.add_subcommand("verify", "check a character identity");
  ver->add_option("identity", o.family)->required();
  ver->add_option("positionals", o.positionals);
  ver->add_option("--n", o.n);
  ver->add_option("--m", o.m);
  ver->add_option("--s", o.s);
  ver->add_option("--r-range", o.r_range, "lo:hi");
  ver->add_option("--lhs", o.lhs);
  ver->add_option("--rhs", o.rhs);
  with_cutoff(ver);

  auto* loc = app.add_subcommand("locality", "locality of a label (s, a, t)");
  label_opts(loc);
  auto* ind = app.add_subcommand("induce", "minimum weight, top level and identification of an induced module");
  label_opts(ind);

  auto family_opts = [&](CLI::App* c) {
    c->add_option("family", o.family, "betagamma, bc, W-1, J, L-2");
    c->add_option("--file", o.file, "family definition (JSON)");
    c->add_option("--rank", o.rank);
    c->add_option("--m", o.m);
    c->add_option("--n", o.n);
  };
  auto* fu = app.add_subcommand("fuse", "fuse two simple currents");
  family_opts(fu);
  fu->add_option("--s,--x", o.x)->required();
  fu->add_option("--t,--y", o.y)->required();
  auto* mo = app.add_subcommand("monodromy", "monodromy (locality) of two simple currents");
  family_opts(mo);
  mo->add_option("--x,--s", o.x)->required();
  mo->add_option("--y,--t", o.y)->required();
  auto* et = app.add_subcommand("extension-type", "classify the extension generated by a simple current");
  family_opts(et);
  et->add_option("--g,--s", o.g)->required();
  et->add_option("--probe", o.probe, "probe box radius for the twist periodicity check");

  std::int64_t cg_t = 0;
  auto* ic = app.add_subcommand("induce-c2", "induction of L_{-1}(lambda_s) to the rank-2 W_{-1} ring");
  ic->add_option("--s", o.s)->required();
  auto* cg = app.add_subcommand("cg-fuse", "sl_2 Clebsch-Gordan fusion");
  cg->add_option("--s", o.s)->required();
  cg->add_option("--t", cg_t)->required();

  auto* as = app.add_subcommand("assemble", "assemble a branching-rule character");
  as->add_option("template", o.family, "template JSON file, or sl5 / sl6 / minimal")->required();
  as->add_option("--n", o.n, "rank for the cl template");
  with_cutoff(as);

  auto* ba = app.add_subcommand("batch", "run a manifest of commands");
  ba->add_option("manifest", o.file)->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    return {Ok, app.help(), ""};
  } catch (const CLI::ParseError& e) {
    std::string help = e.get_exit_code() == 0 ? app.help() : "";
    return {e.get_exit_code() == 0 ? Ok : UsageError, help, e.what()};
  }

  if (ba->parsed()) return run_batch(o.file, o.format);

  Outcome outcome;
  if (ch->parsed())
    outcome = do_char(o);
  else if (ver->parsed())
    outcome = do_verify(o);
  else if (loc->parsed())
    outcome = do_locality(o);
  else if (ind->parsed())
    outcome = do_induce(o);
  else if (fu->parsed())
    outcome = do_fuse(o);
  else if (mo->parsed())
    outcome = do_monodromy(o);
  else if (et->parsed())
    outcome = do_extension_type(o);
  else if (ic->parsed())
    outcome = {{{"s", o.s}, {"induced", fusion_json(induce_c2(o.s), "W")}}};
  else if (cg->parsed())
    outcome = {{{"s", o.s}, {"t", cg_t}, {"product", fusion_json(cg_fuse_sl2(o.s, cg_t), "L")}}};
  else if (as->parsed())
    outcome = do_assemble(o);

  RunResult result;
  result.output = render(outcome.payload, o.format);
  result.exit_code = outcome.verification_failed ? VerificationFailed : Ok;
  return result;
}

RunResult run_batch(const std::string& path, const std::string& format) {
  json manifest = read_json_file(path);
  json runs = json::array();
  int worst = Ok;
  for (const auto& entry : manifest.value("runs", json::array())) {
    std::vector<std::string> args = entry.at("args").get<std::vector<std::string>>();
    std::vector<std::string> sub = args;
    sub.insert(sub.begin(), {"--format", "json"});
    RunResult r = run(sub);
    json item = {{"args", args}, {"exit_code", r.exit_code}};
    try {
      item["report"] = r.output.empty() ? json(nullptr) : json::parse(r.output);
    } catch (const json::exception&) {
      item["report"] = r.output;
    }
    if (!r.error.empty()) item["error"] = r.error;
    runs.push_back(item);
    if (r.exit_code != Ok) worst = worst == Ok ? r.exit_code : std::max(worst, r.exit_code);
  }
  json out = {{"manifest", path}, {"runs", runs}, {"status", worst == Ok ? "pass" : "fail"}};
  return {worst, render(out, format), ""};
}

}  // namespace

std::string default_cutoff() {
  const char* env = std::getenv("VACHAR_CUTOFF");
  return env && *env ? std::string(env) : std::string("4");
}

RunResult run(const std::vector<std::string>& args) {
  try {
    return run_impl(args);
  } catch (const UsageFailure& e) {
    return {UsageError, "", e.what()};
  } catch (const std::invalid_argument& e) {
    return {UsageError, "", e.what()};
  } catch (const std::out_of_range& e) {
    return {UsageError, "", e.what()};
  } catch (const std::domain_error& e) {
    return {UsageError, "", e.what()};
  } catch (const nlohmann::json::exception& e) {
    return {UsageError, "", e.what()};
  } catch (const std::exception& e) {
    return {InternalError, "", std::string("internal error: ") + e.what()};
  }
}

}  // namespace vachar::cli
