#include "cli.hpp"

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "tgwa/a1n.hpp"
#include "tgwa/a2.hpp"
#include "tgwa/acceptance.hpp"
#include "tgwa/error.hpp"
#include "tgwa/fixedring.hpp"
#include "tgwa/scenario.hpp"
#include "tgwa/weightmod.hpp"

namespace tgwa {

namespace {

using Overrides = std::map<std::string, std::string>;

struct Options {
  std::string command;
  std::vector<std::string> args;
  std::vector<std::string> scenarios;
  std::vector<std::string> params;
  std::optional<int> window, bound, m;
  std::string format = "text";
  std::string golden_dir;
  bool fixed = false;
  bool timing = false;
  bool list = false;
};

struct Report {
  json results = json::object();
  std::vector<std::string> lines;
  bool ok = true;
  bool any_verdict = false;
  void line(const std::string& s) { lines.push_back(s); }
  void verdict(const std::string& name, bool pass) {
    results["verdicts"][name] = pass;
    ok = ok && pass;
    any_verdict = true;
    line(std::string(pass ? "PASS " : "FAIL ") + name);
  }
};

Error usage(const std::string& what) { return Error(ErrorKind::InvalidArgument, what); }

bool usage_kind(ErrorKind k) {
  switch (k) {
    case ErrorKind::SyntaxError:
    case ErrorKind::SchemaError:
    case ErrorKind::UnsupportedFeature:
    case ErrorKind::InvalidArgument:
    case ErrorKind::UnsupportedAutomorphismShape:
    case ErrorKind::UnsupportedResidueComputation:
    case ErrorKind::FiniteOrbitUnsupported:
      return true;
    default:
      return false;
  }
}

Overrides parse_params(const std::vector<std::string>& kv) {
  Overrides out;
  for (const auto& p : kv) {
    auto eq = p.find('=');
    if (eq == std::string::npos || eq == 0) throw usage("--param expects key=value, got '" + p + "'");
    out[p.substr(0, eq)] = p.substr(eq + 1);
  }
  return out;
}

Scenario load_scenario(const std::string& ref, const Overrides& params) {
  if (std::filesystem::is_regular_file(ref)) {
    std::ifstream in(ref);
    std::stringstream ss;
    ss << in.rdbuf();
    Scenario s = parse_scenario(ss.str());
    if (params.empty()) return s;
    json j = s.source;
    for (const auto& [k, v] : params) j["params"][k] = v;
    return scenario_from_json(j);
  }
  auto names = builtin_names();
  if (std::find(names.begin(), names.end(), ref) == names.end())
    throw usage("no scenario file or built-in scenario named '" + ref + "'");
  return load_builtin(ref, params);
}

const TGWDatum& datum_of(const Scenario& s) {
  if (!s.datum) throw Error(ErrorKind::SchemaError, s.name + ": scenario has no datum");
  return *s.datum;
}

const DiagonalAut& phi_of(const Scenario& s) {
  if (!s.phi) throw Error(ErrorKind::SchemaError, s.name + ": scenario has no phi");
  return *s.phi;
}

std::string join(const std::vector<std::string>& v, const std::string& sep) {
  std::string out;
  for (size_t i = 0; i < v.size(); ++i) out += (i ? sep : "") + v[i];
  return out;
}

std::string pair_key(int i, int j) { return std::to_string(i + 1) + std::to_string(j + 1); }

json matrix_json(const std::vector<std::vector<std::optional<int>>>& m) {
  json out = json::array();
  for (const auto& row : m) {
    json r = json::array();
    for (const auto& v : row) r.push_back(v ? json(*v) : json());
    out.push_back(r);
  }
  return out;
}

std::string matrix_str(const std::vector<std::vector<std::optional<int>>>& m) {
  std::vector<std::string> rows;
  for (const auto& row : m) {
    std::vector<std::string> r;
    for (const auto& v : row) r.push_back(v ? std::to_string(*v) : "?");
    rows.push_back("[" + join(r, ", ") + "]");
  }
  return "[" + join(rows, ", ") + "]";
}

bool block_diagonal(const CartanReport& joint, const std::vector<CartanReport>& parts) {
  size_t n = 0;
  for (const auto& p : parts) n += p.cartan.size();
  if (joint.cartan.size() != n) return false;
  size_t off = 0;
  for (const auto& p : parts) {
    size_t k = p.cartan.size();
    for (size_t r = 0; r < n; ++r)
      for (size_t c = 0; c < k; ++c) {
        bool inside = r >= off && r < off + k;
        std::optional<int> want = inside ? p.cartan[r - off][c] : std::optional<int>(0);
        if (!want || joint.cartan[r][off + c] != want) return false;
      }
    off += k;
  }
  return true;
}

// ---- datum-level reports --------------------------------------------------

Report consistency_report(const TGWDatum& d) {
  Report r;
  ValidityReport v = validate_datum(d);
  r.verdict("regular", v.regular);
  for (const auto& [ij, ok] : v.cons1) r.verdict("cons1 " + pair_key(ij.first, ij.second), ok);
  for (const auto& [ijk, ok] : v.cons2) {
    auto [i, j, k] = ijk;
    r.verdict("cons2 " + pair_key(i, j) + std::to_string(k + 1), ok);
  }
  return r;
}

Report check_report(const Scenario& s) {
  Report r = consistency_report(datum_of(s));
  if (s.phi)
    for (const auto& [name, ok] : validate_hypothesis(*s.datum, *s.phi).items()) r.verdict("hypothesis " + name, ok);
  return r;
}

json cartan_json(const CartanReport& c) {
  json j;
  j["type"] = type_tag_name(c.tag);
  j["matrix"] = matrix_json(c.cartan);
  for (const auto& [ij, p] : c.minpolys) j["minpolys"]["p" + pair_key(ij.first, ij.second)] = minpoly_str(p);
  for (const auto& [ij, v] : c.vdims) j["vdims"][pair_key(ij.first, ij.second)] = v ? json(*v) : json();
  if (c.tag == TypeTag::A1n)
    for (size_t i = 0; i < c.gamma.size(); ++i)
      for (size_t k = 0; k < c.gamma.size(); ++k)
        if (i != k) j["gamma"][pair_key(static_cast<int>(i), static_cast<int>(k))] = c.gamma[i][k].str();
  if (c.tag == TypeTag::A2)
    j["a2"] = {{"lambda1", c.lambda1.str()}, {"lambda2", c.lambda2.str()}, {"eta1", c.eta1.str()}, {"eta2", c.eta2.str()}};
  return j;
}

Report cartan_report(const TGWDatum& d, int bound) {
  Report r;
  CartanReport c = cartan_type(d, bound);
  r.results = cartan_json(c);
  r.line(std::string("type: ") + type_tag_name(c.tag));
  r.line("cartan: " + matrix_str(c.cartan));
  for (const auto& [ij, p] : c.minpolys) r.line("p" + pair_key(ij.first, ij.second) + ": " + minpoly_str(p));
  if (c.tag == TypeTag::A1n)
    for (const auto& [k, v] : r.results["gamma"].items()) r.line("gamma" + k + ": " + v.get<std::string>());
  if (c.tag == TypeTag::A2)
    r.line("lambda = (" + c.lambda1.str() + ", " + c.lambda2.str() + "), eta = (" + c.eta1.str() + ", " + c.eta2.str() + ")");
  bool known = true;
  for (const auto& row : c.cartan)
    for (const auto& v : row) known = known && v.has_value();
  r.verdict("cartan matrix determined within bound", known);
  return r;
}

json fixed_scenario_json(const std::string& name, const FixedRingResult& f) {
  const TGWDatum& d = f.presentation ? *f.presentation : f.datum;
  json j;
  j["name"] = name + "-fixed";
  if (d.ring->field) j["field"] = {{"conductor", d.ring->field->conductor()}};
  j["datum"] = datum_to_json(d);
  return j;
}

Report fixed_report(const Scenario& s, int bound) {
  Report r;
  const TGWDatum& d = datum_of(s);
  FixedRingResult f = fixed_datum(d, phi_of(s), bound);
  FixedTypeReport ft = verify_fixed_type(d, *s.phi, f);
  json sj = fixed_scenario_json(s.name, f);
  r.results["label"] = f.label;
  r.results["m"] = f.m;
  r.results["subring"] = {{"kind", fixed_kind_name(f.subring.kind)}};
  for (const auto& g : f.subring.generators) r.results["subring"]["generators"].push_back(g.str());
  r.results["s_invariant"] = f.s_invariant;
  r.results["tau_preserves"] = f.tau_preserves;
  r.results["cartan"] = cartan_json(f.cartan);
  r.results["fixed_type"] = {{"input", type_tag_name(ft.input_tag)}, {"output", type_tag_name(ft.output_tag)}, {"ok", ft.ok()}};
  r.results["scenario"] = sj;
  r.line("label: " + f.label);
  std::vector<std::string> ms;
  for (int m : f.m) ms.push_back(std::to_string(m));
  r.line("m: " + join(ms, ", "));
  const TGWDatum& shown = f.presentation ? *f.presentation : f.datum;
  if (f.presentation) r.line("presented over k[" + join(shown.ring->vars, ", ") + "]");
  for (size_t i = 0; i < shown.rank(); ++i) {
    std::vector<std::string> img;
    for (const auto& p : shown.sigma[i].images()) img.push_back(p.str());
    r.line("tau" + std::to_string(i + 1) + ": " + join(img, ", "));
    r.line("s" + std::to_string(i + 1) + ": " + shown.t[i].str());
  }
  r.line("cartan: " + matrix_str(f.cartan.cartan) + " (" + type_tag_name(f.cartan.tag) + ")");
  r.verdict("fixed datum regular", f.validity.regular);
  r.verdict("fixed datum cons1", f.validity.cons1_ok());
  r.verdict("fixed datum cons2", f.validity.cons2_ok());
  Scenario back = scenario_from_json(sj);
  r.verdict("printed datum re-parses to the same datum",
            back.datum && same_datum(*back.datum, f.presentation ? *f.presentation : f.datum));
  r.line("scenario:");
  std::istringstream dump(sj.dump(2));
  for (std::string l; std::getline(dump, l);) r.line(l);
  return r;
}

Report fixed_type_report(const Scenario& s, int bound) {
  Report r;
  FixedRingResult f = fixed_datum(datum_of(s), phi_of(s), bound);
  FixedTypeReport ft = verify_fixed_type(*s.datum, *s.phi, f);
  r.verdict("A1n preserved", ft.a1n_preserved);
  r.verdict("A2 fixed datum valid", ft.a2_valid);
  r.verdict("W finite", ft.w_finite);
  r.verdict("W bounded", ft.w_bounded);
  return r;
}

Report tensor_report(const std::vector<Scenario>& ss, int bound) {
  Report r;
  if (ss.size() < 2) throw usage("tensor needs at least two --scenario arguments");
  FieldPtr f;
  for (const auto& s : ss) f = field_join(f, datum_of(s).ring->field);
  std::vector<CartanReport> parts;
  std::optional<TGWDatum> joint;
  for (const auto& s : ss) {
    TGWDatum d = lift_datum(*s.datum, f);
    parts.push_back(cartan_type(d, bound));
    joint = joint ? tensor_data(*joint, d) : d;
  }
  CartanReport c = cartan_type(*joint, bound);
  r.results["cartan"] = cartan_json(c);
  r.results["datum"] = datum_to_json(*joint);
  r.line("cartan: " + matrix_str(c.cartan));
  Report v = consistency_report(*joint);
  r.verdict("tensor datum consistent", v.ok);
  r.verdict("cartan matrix block diagonal", block_diagonal(c, parts));
  bool all_phi = std::all_of(ss.begin(), ss.end(), [](const Scenario& s) { return s.phi.has_value(); });
  if (all_phi) {
    std::vector<std::pair<TGWDatum, DiagonalAut>> in;
    for (const auto& s : ss) in.push_back({*s.datum, *s.phi});
    try {
      TensorInvariantsReport t = tensor_invariants(in);
      r.results["fixed"] = fixed_scenario_json("tensor", t.fixed_of_tensor);
      r.verdict("invariants of the tensor equal the tensor of invariants", t.equal);
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::CoprimalityViolation) throw;
      r.results["fixed"] = {{"skipped", e.detail()}};
      r.line("invariants skipped: " + e.detail());
    }
  }
  return r;
}

// ---- algebra reports ------------------------------------------------------

Report mul_report(const Scenario& s, const std::vector<std::string>& words, bool single) {
  if (words.empty()) throw usage("expected at least one word");
  ProfilePtr p = from_datum(datum_of(s));
  Report r;
  std::vector<std::string> ws = single ? std::vector<std::string>{join(words, " ")} : words;
  std::optional<AlgebraElement> acc;
  for (const auto& w : ws) {
    AlgebraElement x = normal_form(p, parse_word(p, w));
    acc = acc ? *acc * x : x;
  }
  r.results["words"] = ws;
  r.results[single ? "normal_form" : "product"] = acc->str();
  r.line(std::string(single ? "normal form: " : "product: ") + acc->str());
  return r;
}

Report ore_report(const Scenario& s) {
  ProfilePtr p = from_datum(datum_of(s));
  OrePresentation o = ore_presentation(p);
  Report r;
  auto steps = [&](const std::vector<OreStep>& v, const std::string& key) {
    for (const auto& st : v) {
      json j = {{"generator", st.generator}, {"on_R", st.on_R}, {"extension", json::array()}};
      r.line(st.generator + ": on R " + st.on_R);
      for (const auto& [g, tw, de] : st.extension) {
        j["extension"].push_back({{"generator", g}, {"twist", tw}, {"derivation", de}});
        r.line("  " + g + " -> " + tw + ", derivation " + de);
      }
      r.results[key].push_back(j);
    }
  };
  steps(o.plus_steps, "plus_steps");
  steps(o.minus_steps, "minus_steps");
  r.results["quotient_relations"] = o.quotient_relations;
  for (const auto& q : o.quotient_relations) r.line("quotient: " + q);
  for (const auto& rel : o.relations) r.results["relations"][rel.label] = rel.holds();
  r.verdict("presentation relations hold in the algebra", o.verified());
  return r;
}

Report diamond_report(const Scenario& s) {
  Report r;
  auto bad = diamond_check(from_datum(datum_of(s)));
  r.results["offending_words"] = bad;
  for (const auto& w : bad) r.line("not confluent: " + w);
  r.verdict("length-3 diamond confluence", bad.empty());
  return r;
}

Report s_poly_report(const std::vector<std::string>& args, std::optional<int> bound) {
  if (args.size() != 3) throw usage("s-poly expects: a q beta");
  int a = 0;
  try {
    size_t used = 0;
    a = std::stoi(args[0], &used);
    if (used != args[0].size()) throw std::invalid_argument("trailing");
  } catch (const std::exception&) {
    throw usage("s-poly: a must be an integer, got '" + args[0] + "'");
  }
  Scenario tmp = scenario_from_json(json{{"params", {{"q", args[1]}, {"beta", args[2]}}}});
  const Scalar q = tmp.params.at("q"), beta = tmp.params.at("beta");
  Report r;
  Scalar rec = s_poly(a, q, beta), closed = s_poly_closed(a, q, beta);
  r.results["a"] = a;
  r.results["q"] = q.str();
  r.results["beta"] = beta.str();
  r.results["recurrence"] = rec.str();
  r.results["closed_form"] = closed.str();
  r.line("S_" + std::to_string(a) + "(" + q.str() + ", " + beta.str() + ") = " + rec.str());
  if (!beta.is_zero()) {
    SNonvanishing nv = s_nonvanishing(-q, beta, bound.value_or(50));
    r.results["nonvanishing"] = nv.str();
    r.line("nonvanishing: " + nv.str());
  }
  r.verdict("recurrence equals closed form", rec == closed);
  return r;
}

FiberPtr fiber_of(const std::optional<Scenario>& s) {
  if (!s) return FiberProfile::standard();
  return std::make_shared<const FiberProfile>(datum_of(*s));
}

Report fiber_mul_report(const std::optional<Scenario>& s, const std::vector<std::string>& words) {
  if (words.empty()) throw usage("fiber-mul expects at least one word");
  FiberPtr p = fiber_of(s);
  std::optional<FiberElement> acc;
  for (const auto& w : words) {
    FiberElement x = parse_fiber_word(p, w);
    acc = acc ? *acc * x : x;
  }
  Report r;
  r.results["words"] = words;
  r.results["product"] = acc->str();
  r.line("product: " + acc->str());
  return r;
}

Report c_power_report(const std::optional<Scenario>& s, int k, std::optional<int> m) {
  CPowerReport c = c_power(fiber_of(s), k, m);
  Report r;
  r.results["k"] = k;
  r.results["power"] = c.power.str();
  r.results["closed_form"] = c.closed_form.str();
  r.line("C^" + std::to_string(k) + " = " + c.power.str());
  r.verdict("closed form", c.closed_form_ok);
  if (c.c_phi) {
    r.results["c_phi"] = c.c_phi->str();
    r.results["m"] = *m;
    r.line("C^phi = " + c.c_phi->str());
    r.verdict("C^phi = C^m", c.c_phi_ok);
  }
  return r;
}

// ---- weight modules -------------------------------------------------------

Vec base_of(const Scenario& s, const json& req, size_t i) {
  Vec base;
  std::string path = "modules[" + std::to_string(i) + "].base";
  if (!req.contains("base") || !req["base"].is_array()) throw Error(ErrorKind::SchemaError, path + ": expected a list");
  for (size_t k = 0; k < req["base"].size(); ++k)
    base.push_back(scenario_scalar(s, req["base"][k], path + "[" + std::to_string(k) + "]"));
  return base;
}

std::string support_ideals(const TGWDatum& d, const Orbit& o, const SimpleSupport& sp) {
  std::string lo = sp.lower ? ideal_str(d.ring, o.point(*sp.lower + 1)) : "-inf";
  std::string hi = sp.upper ? ideal_str(d.ring, o.point(*sp.upper)) : "+inf";
  return lo + " .. " + hi;
}

bool has_kind(const Scenario& s, const std::string& kind) {
  for (const auto& m : s.modules)
    if (m.value("kind", "") == kind) return true;
  return false;
}

const TGWDatum& module_ring(const Scenario& s, const ExplicitModule& m, std::optional<FixedRingResult>& fr) {
  if (m.over == "A") return *s.datum;
  if (!fr) fr = fixed_datum(*s.datum, phi_of(s));
  if (!fr->presentation) throw Error(ErrorKind::UnsupportedFeature, "fixed subring has no polynomial presentation");
  return *fr->presentation;
}

Report weight_report(const Scenario& s, int window) {
  Report r;
  const TGWDatum& d = datum_of(s);
  for (size_t i = 0; i < s.modules.size(); ++i) {
    const json& req = s.modules[i];
    if (req.value("kind", "") != "orbit") continue;
    Orbit o = orbit_of(d, base_of(s, req, i), window);
    BreakSet b = breaks(d, o, window);
    json j;
    j["base"] = point_str(o.base);
    j["window"] = window;
    std::vector<std::string> bs;
    for (long k : b.positions) bs.push_back(ideal_str(d.ring, o.point(k)));
    j["breaks"] = bs;
    r.line("orbit of " + point_str(o.base) + (o.finite() ? ", period " + std::to_string(*o.period) : ", infinite") +
           ", window " + std::to_string(window));
    r.line("breaks: " + (bs.empty() ? std::string("none in window") : join(bs, ", ")));
    if (o.finite()) {
      j["period"] = *o.period;
    } else {
      for (const auto& sp : simple_supports(d, o, window)) {
        std::string desc = support_ideals(d, o, sp);
        j["simples"].push_back({{"positions", sp.str()}, {"support", desc}});
        r.line("simple on " + sp.str() + ": " + desc);
        r.verdict("relations on " + sp.str(), support_relations_hold(d, o, sp, window));
      }
    }
    r.results["orbits"].push_back(j);
  }
  if (has_kind(s, "explicit")) {
    ScenarioModules mods = explicit_modules(s);
    std::optional<FixedRingResult> fr;
    for (const auto& [name, m] : mods.modules) {
      const TGWDatum& over = module_ring(s, m, fr);
      std::vector<std::string> ws;
      for (const auto& w : m.weights) ws.push_back(point_str(w));
      r.results["explicit"][name] = {{"dim", m.dim()}, {"over", m.over}, {"weights", ws}};
      r.line(name + ": dim " + std::to_string(m.dim()) + " over " + m.over + ", weights " + join(ws, ", "));
      r.verdict(name + " relations", verify_module_relations(m, over).ok());
      r.verdict(name + " simple", is_simple(m));
    }
    for (const auto& [a, ma] : mods.modules)
      for (const auto& [b, mb] : mods.modules) {
        if (a == b || ma.over != mb.over) continue;
        int h = hom_dimension(ma, mb, module_ring(s, ma, fr));
        r.results["hom"][a + " -> " + b] = h;
        r.line("dim Hom(" + a + ", " + b + ") = " + std::to_string(h));
      }
  }
  return r;
}

std::string component_desc(const TGWDatum& d, const Orbit& o, const RestrictionComponent& c) {
  if (c.empty) return "0";
  std::string lo = c.first ? ideal_str(d.ring, o.point(*c.first)) : "-inf";
  std::string hi = c.last ? ideal_str(d.ring, o.point(*c.last)) : "+inf";
  return lo + " .. " + hi;
}

Report restrict_report(const Scenario& s, int window, std::optional<int> picture) {
  Report r;
  const TGWDatum& d = datum_of(s);
  const DiagonalAut& a = phi_of(s);
  for (size_t i = 0; i < s.modules.size(); ++i) {
    const json& req = s.modules[i];
    if (req.value("kind", "") != "orbit") continue;
    Orbit o = orbit_of(d, base_of(s, req, i), window);
    if (d.rank() == 1) {
      std::istringstream pic(render_orbit_ascii(d, o, a.orders[0], picture.value_or(6)));
      for (std::string l; std::getline(pic, l);) r.line(l);
    }
    for (const auto& sp : simple_supports(d, o, window)) {
      Rank1Restriction res = restrict_rank1(d, a, o, sp, window);
      json j;
      j["simple"] = sp.str();
      j["m"] = res.m;
      j["d_phi"] = res.d_phi;
      std::vector<std::string> sb;
      for (long k : res.s_breaks) sb.push_back(ideal_str(d.ring, o.point(k)));
      j["s_breaks"] = sb;
      r.line("Res of the simple on " + sp.str() + ", s-breaks " + join(sb, ", "));
      for (const auto& c : res.components) {
        std::string desc = component_desc(d, o, c);
        j["components"].push_back({{"residue", c.residue}, {"support", desc}, {"interval_ok", c.interval_ok}});
        r.line("  orbit " + std::to_string(c.residue) + ": " + desc);
      }
      j["injective"] = res.injective;
      j["accounting_ok"] = res.accounting_ok;
      r.results["restrictions"].push_back(j);
      r.verdict("Res " + sp.str() + " splits along the s-breaks", res.ok());
    }
  }
  if (has_kind(s, "restriction")) {
    ScenarioModules mods = explicit_modules(s);
    for (const auto& [from, parts] : mods.restrictions) {
      ExplicitRestriction e = verify_explicit_restriction(mods.modules.at(from), d, a, parts);
      std::vector<std::string> names;
      for (const auto& p : parts) names.push_back(p.module.name);
      r.line("Res " + from + " = " + join(names, " + "));
      r.verdict("Res " + from + " bases invertible", e.basis_invertible);
      for (const auto& [n, ok] : e.parts_ok) r.verdict("Res " + from + " part " + n, ok);
      r.verdict("Res " + from + " fiber lemma", e.fiber_lemma_ok);
      r.verdict("Res " + from + " weight accounting", e.accounting_ok);
    }
  }
  return r;
}

Scalar cylinder_base(const Scenario& s) {
  for (size_t i = 0; i < s.modules.size(); ++i)
    if (s.modules[i].value("kind", "") == "cylinder") {
      Vec b = base_of(s, s.modules[i], i);
      if (b.size() != 1) throw Error(ErrorKind::SchemaError, "cylinder base must be a single scalar");
      return b[0];
    }
  return Scalar(0);
}

CylinderDiagram cylinder_of(const Scenario& s, bool fixed, int window) {
  TGWDatum d = fixed ? fixed_datum(datum_of(s), phi_of(s)).datum : datum_of(s);
  return cylinder(d, cylinder_base(s), window);
}

Report cylinder_report(const Scenario& s, bool fixed, int window) {
  CylinderDiagram c = cylinder_of(s, fixed, window);
  Report r;
  std::string art = render_cylinder_ascii(c);
  r.results["ascii"] = art;
  r.results["m"] = c.m;
  r.results["rows"] = {c.lo, c.hi};
  r.results["vertical"] = c.vertical;
  r.results["horizontal"] = c.horizontal;
  std::istringstream in(art);
  for (std::string l; std::getline(in, l);) r.line(l);
  for (const auto& comp : c.components) {
    r.results["components"].push_back(
        {{"name", comp.name}, {"rows", comp.rows}, {"unbounded", comp.unbounded}, {"winds", comp.winds}});
  }
  r.results["unbounded_components"] = c.unbounded_count();
  return r;
}

// ---- verify-paper ---------------------------------------------------------

bool run_named_check(const Scenario& s, const std::string& check) {
  if (check == "consistency") return consistency_report(datum_of(s)).ok;
  if (check == "cartan") return cartan_report(datum_of(s), 16).ok;
  if (check == "fixed-ring") return fixed_report(s, 64).ok;
  if (check == "fixed-type") return fixed_type_report(s, 64).ok;
  if (check == "a1n-algebra") return diamond_report(s).ok;
  if (check == "ore") return ore_report(s).ok;
  if (check == "hypothesis") return validate_hypothesis(datum_of(s), phi_of(s)).ok();
  if (check == "weight-modules" || check == "explicit-modules") return weight_report(s, 64).ok;
  if (check == "restrict") return restrict_report(s, 64, std::nullopt).ok;
  if (check == "c-power") {
    int m = phi_of(s).orders[0];
    for (int k = 1; k <= 3; ++k)
      if (!c_power_report(s, k, m).ok) return false;
    return true;
  }
  if (check == "cylinder")
    return cylinder_of(s, false, 8).unbounded_count() == 2 && cylinder_of(s, true, 8).unbounded_count() == 2;
  throw Error(ErrorKind::SchemaError, s.name + ": unknown check '" + check + "'");
}

Report verify_paper(const Options& o) {
  Report r;
  for (const auto& name : builtin_names()) {
    Scenario s = load_builtin(name);
    for (const auto& c : s.checks) {
      bool ok = false;
      std::string note;
      try {
        ok = run_named_check(s, c);
      } catch (const std::exception& e) {
        note = std::string(" (") + e.what() + ")";
      }
      r.results["scenarios"][name][c] = ok;
      r.ok = r.ok && ok;
      r.any_verdict = true;
      r.line(std::string(ok ? "PASS " : "FAIL ") + name + " " + c + note);
    }
  }
  AcceptanceOptions ao;
  ao.golden_dir = o.golden_dir;
  if (!ao.golden_dir.empty() && !std::filesystem::is_directory(ao.golden_dir)) ao.golden_dir.clear();
  for (const auto& c : run_acceptance(ao)) {
    json j = {{"id", c.id}, {"title", c.title}, {"passed", c.passed}, {"checks", c.checks}, {"failures", c.failures}};
    if (o.timing) j["seconds"] = c.seconds;
    r.results["criteria"].push_back(j);
    r.ok = r.ok && c.passed;
    r.line(c.line(o.timing));
  }
  r.results["golden_files_compared"] = !ao.golden_dir.empty();
  return r;
}

// ---- dispatch -------------------------------------------------------------

const std::vector<std::string>& commands() {
  static const std::vector<std::string> c = {"check",  "cartan",    "fixed-ring", "tensor",        "mul",
                                             "normal-form", "ore",  "s-poly",     "fiber-mul",     "c-power",
                                             "weight-modules", "restrict", "cylinder", "verify-paper"};
  return c;
}

int parse_int(const std::string& s, const std::string& what) {
  try {
    size_t used = 0;
    int v = std::stoi(s, &used);
    if (used == s.size()) return v;
  } catch (const std::exception&) {
  }
  throw usage(what + " must be an integer, got '" + s + "'");
}

int dispatch(const Options& o, std::ostream& out) {
  Overrides params = parse_params(o.params);
  std::vector<Scenario> ss;
  for (const auto& ref : o.scenarios) ss.push_back(load_scenario(ref, params));
  auto one = [&]() -> const Scenario& {
    if (ss.size() != 1) throw usage(o.command + " needs exactly one --scenario");
    return ss[0];
  };
  auto maybe = [&]() -> std::optional<Scenario> {
    if (ss.size() > 1) throw usage(o.command + " takes at most one --scenario");
    if (ss.empty()) return std::nullopt;
    return ss[0];
  };
  auto no_args = [&] {
    if (!o.args.empty()) throw usage(o.command + " takes no positional arguments");
  };
  const std::string& cmd = o.command;
  bool structured = o.format == "structured";
  if (cmd != "cylinder" && o.format != "text" && !structured)
    throw usage("--format must be text or structured for " + cmd);
  if (o.fixed && cmd != "cylinder") throw usage("--fixed applies to cylinder only");
  if (o.m && cmd != "c-power") throw usage("--m applies to c-power only");

  Report r;
  json scenario_name;
  if (ss.size() == 1) scenario_name = ss[0].name;
  if (ss.size() > 1) {
    for (const auto& s : ss) scenario_name.push_back(s.name);
  }

  auto start = std::chrono::steady_clock::now();
  if (cmd == "check") {
    no_args();
    r = check_report(one());
  } else if (cmd == "cartan") {
    no_args();
    r = cartan_report(datum_of(one()), o.bound.value_or(16));
  } else if (cmd == "fixed-ring") {
    no_args();
    r = fixed_report(one(), o.bound.value_or(64));
  } else if (cmd == "tensor") {
    no_args();
    r = tensor_report(ss, o.bound.value_or(16));
  } else if (cmd == "mul" || cmd == "normal-form") {
    r = mul_report(one(), o.args, cmd == "normal-form");
  } else if (cmd == "ore") {
    no_args();
    r = ore_report(one());
  } else if (cmd == "s-poly") {
    if (!ss.empty()) throw usage("s-poly takes no --scenario");
    r = s_poly_report(o.args, o.bound);
  } else if (cmd == "fiber-mul") {
    r = fiber_mul_report(maybe(), o.args);
  } else if (cmd == "c-power") {
    if (o.args.size() != 1) throw usage("c-power expects: k");
    r = c_power_report(maybe(), parse_int(o.args[0], "k"), o.m);
  } else if (cmd == "weight-modules") {
    no_args();
    r = weight_report(one(), o.window.value_or(64));
  } else if (cmd == "restrict") {
    no_args();
    r = restrict_report(one(), o.window.value_or(64), o.window);
  } else if (cmd == "cylinder") {
    no_args();
    static const std::vector<std::string> formats = {"text", "structured", "ascii", "svg"};
    if (std::find(formats.begin(), formats.end(), o.format) == formats.end())
      throw usage("--format must be text, structured, ascii or svg for cylinder");
    Scenario s = maybe().value_or(load_builtin("fiber-6-2", params));
    scenario_name = s.name;
    if (o.format == "svg") {
      out << render_cylinder_svg(cylinder_of(s, o.fixed, o.window.value_or(8)));
      return 0;
    }
    if (o.format == "ascii") {
      out << render_cylinder_ascii(cylinder_of(s, o.fixed, o.window.value_or(8)));
      return 0;
    }
    r = cylinder_report(s, o.fixed, o.window.value_or(8));
  } else if (cmd == "verify-paper") {
    no_args();
    if (!ss.empty()) throw usage("verify-paper runs the built-in library and takes no --scenario");
    r = verify_paper(o);
  } else {
    throw usage("unknown command '" + cmd + "'; expected one of " + join(commands(), ", "));
  }
  double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

  if (structured) {
    json j = {{"command", cmd}, {"scenario", scenario_name}, {"results", r.results}, {"ok", r.ok}};
    if (o.timing) j["seconds"] = seconds;
    out << j.dump(2) << "\n";
  } else {
    for (const auto& l : r.lines) out << l << "\n";
    if (r.any_verdict) out << "result: " << (r.ok ? "PASS" : "FAIL") << "\n";
    if (o.timing) out << "time: " << seconds << " s\n";
  }
  return r.ok ? 0 : 1;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Exact computations with twisted generalized Weyl algebras.", "tgwa"};
  app.add_option("command", o.command, "One of: " + join(commands(), ", "));
  app.add_option("args", o.args, "Command arguments (words, s-poly a q beta, c-power k)");
  app.add_option("--scenario", o.scenarios, "Scenario file or built-in name (repeat for tensor)")
      ->allow_extra_args(false);
  app.add_option("--param", o.params, "Parameter override key=value")->allow_extra_args(false);
  app.add_option("--window", o.window, "Window W for breaks and cylinders")->check(CLI::PositiveNumber);
  app.add_option("--bound", o.bound, "Dimension bound for Cartan data and fixed rings")->check(CLI::PositiveNumber);
  app.add_option("--format", o.format, "text | structured (cylinder also: ascii | svg)");
  app.add_option("--m", o.m, "Fixed-ring order for c-power")->check(CLI::PositiveNumber);
  app.add_flag("--fixed", o.fixed, "Cylinder of the fixed datum");
  app.add_flag("--timing", o.timing, "Include timings (output is then not byte-stable)");
  app.add_flag("--list-scenarios", o.list, "List built-in scenarios");
  app.add_option("--golden-dir", o.golden_dir, "Cylinder golden directory for verify-paper");
#ifdef TGWA_DEFAULT_GOLDEN_DIR
  o.golden_dir = TGWA_DEFAULT_GOLDEN_DIR;
#endif

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n" << "run with --help for usage\n";
    return 2;
  }
  if (o.list) {
    for (const auto& n : builtin_names()) out << n << "\n";
    return 0;
  }
  if (o.command.empty()) {
    err << "usage error: missing command\nrun with --help for usage\n";
    return 2;
  }
  try {
    return dispatch(o, out);
  } catch (const Error& e) {
    err << "error [" << o.command;
    if (!o.scenarios.empty()) err << " " << join(o.scenarios, " ");
    err << "]: " << e.what() << "\n";
    return usage_kind(e.kind()) ? 2 : 1;
  } catch (const std::exception& e) {
    err << "error [" << o.command << "]: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace tgwa
