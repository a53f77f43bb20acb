#include "tgwa/scenario.hpp"

#include <numeric>
#include <random>
#include <regex>
#include <set>
#include <sstream>

#include "tgwa/error.hpp"

namespace tgwa {

namespace {

[[noreturn]] void schema(const std::string& path, const std::string& msg) {
  throw Error(ErrorKind::SchemaError, path + ": " + msg);
}

// Rethrows expression-level errors with the JSON path in front.
template <class F>
auto at_path(const std::string& path, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::SchemaError) throw;
    throw Error(e.kind(), path + ": " + e.detail());
  }
}

std::string expr_text(const json& v, const std::string& path) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_number_integer()) return std::to_string(v.get<long long>());
  schema(path, "expected an expression string");
}

const json& member(const json& obj, const std::string& key, const std::string& path) {
  if (!obj.is_object()) schema(path, "expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) schema(path, "missing key '" + key + "'");
  return *it;
}

const json& array_of(const json& v, const std::string& path) {
  if (!v.is_array()) schema(path, "expected an array");
  return v;
}

void collect_zeta(const json& j, int& n) {
  static const std::regex re(R"(zeta\s*\(\s*(\d+)\s*\))");
  if (j.is_string()) {
    const std::string s = j.get<std::string>();
    for (std::sregex_iterator it(s.begin(), s.end(), re), end; it != end; ++it) {
      long k = std::stol((*it)[1].str());
      if (k >= 1 && k < 100000) n = std::lcm(n, static_cast<int>(k));
    }
  } else if (j.is_structured()) {
    for (const auto& x : j) collect_zeta(x, n);
  }
}

int infer_conductor(const json& j) {
  int n = 1;
  collect_zeta(j, n);
  return n;
}

std::string line_col(const std::string& text, size_t byte) {
  size_t line = 1, col = 1;
  for (size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return "line " + std::to_string(line) + ", column " + std::to_string(col);
}

}  // namespace

Scalar scenario_scalar(const Scenario& s, const json& v, const std::string& path) {
  std::string text = expr_text(v, path);
  return at_path(path, [&] { return parse_scalar(text, s.field, s.params); });
}

BasePoly scenario_poly(const Scenario& s, const RingPtr& r, const json& v, const std::string& path) {
  std::string text = expr_text(v, path);
  return at_path(path, [&] { return parse_poly(text, r, s.params); });
}

TGWDatum parse_datum(const json& j, const FieldPtr& field, const Params& params) {
  const std::string base = "datum";
  const json& jv = array_of(member(j, "vars", base), base + ".vars");
  std::vector<std::string> vars;
  std::set<std::string> seen;
  for (size_t k = 0; k < jv.size(); ++k) {
    if (!jv[k].is_string()) schema(base + ".vars[" + std::to_string(k) + "]", "expected a name");
    std::string v = jv[k].get<std::string>();
    if (v.empty() || !std::isalpha(static_cast<unsigned char>(v[0])) || v == "zeta" ||
        params.count(v))
      schema(base + ".vars[" + std::to_string(k) + "]", "invalid variable name '" + v + "'");
    if (!seen.insert(v).second) schema(base + ".vars", "duplicate variable '" + v + "'");
    vars.push_back(v);
  }
  std::vector<bool> laurent(vars.size(), false);
  if (j.contains("laurent")) {
    const json& jl = array_of(j["laurent"], base + ".laurent");
    if (jl.size() != vars.size()) schema(base + ".laurent", "length differs from vars");
    for (size_t k = 0; k < jl.size(); ++k) {
      if (!jl[k].is_boolean()) schema(base + ".laurent[" + std::to_string(k) + "]", "expected a boolean");
      laurent[k] = jl[k].get<bool>();
    }
  }
  RingPtr ring = make_ring(vars, laurent, field);

  const json& js = array_of(member(j, "sigma", base), base + ".sigma");
  const size_t n = js.size();
  std::vector<RingAut> sigma;
  for (size_t i = 0; i < n; ++i) {
    std::string p = base + ".sigma[" + std::to_string(i) + "]";
    const json& row = array_of(js[i], p);
    if (row.size() != vars.size()) schema(p, "expected one image per variable");
    std::vector<BasePoly> images;
    for (size_t k = 0; k < row.size(); ++k) {
      std::string pk = p + "[" + std::to_string(k) + "]";
      std::string text = expr_text(row[k], pk);
      images.push_back(at_path(pk, [&] { return parse_poly(text, ring, params); }));
    }
    sigma.push_back(at_path(p, [&] { return RingAut::from_images(ring, images); }));
  }

  const json& jt = array_of(member(j, "t", base), base + ".t");
  if (jt.size() != n) schema(base + ".t", "expected " + std::to_string(n) + " entries");
  std::vector<BasePoly> t;
  for (size_t i = 0; i < n; ++i) {
    std::string p = base + ".t[" + std::to_string(i) + "]";
    std::string text = expr_text(jt[i], p);
    t.push_back(at_path(p, [&] { return parse_poly(text, ring, params); }));
  }

  Mat mu(n, Vec(n, Scalar(1)));
  if (j.contains("mu")) {
    const json& jm = array_of(j["mu"], base + ".mu");
    if (jm.size() != n) schema(base + ".mu", "expected an " + std::to_string(n) + "x" + std::to_string(n) + " matrix");
    for (size_t i = 0; i < n; ++i) {
      std::string p = base + ".mu[" + std::to_string(i) + "]";
      const json& row = array_of(jm[i], p);
      if (row.size() != n) schema(p, "matrix is not square");
      for (size_t k = 0; k < n; ++k) {
        std::string pk = p + "[" + std::to_string(k) + "]";
        std::string text = expr_text(row[k], pk);
        mu[i][k] = at_path(pk, [&] { return parse_scalar(text, field, params); });
      }
    }
  }
  return at_path(base, [&] { return make_datum(ring, sigma, t, mu); });
}

DiagonalAut parse_phi(const json& j, const TGWDatum& d, const FieldPtr& field, const Params& params) {
  const std::string base = "phi";
  const json& ja = array_of(member(j, "alpha", base), base + ".alpha");
  if (ja.size() != d.rank()) schema(base + ".alpha", "expected " + std::to_string(d.rank()) + " entries");
  Vec alpha;
  for (size_t i = 0; i < ja.size(); ++i) {
    std::string p = base + ".alpha[" + std::to_string(i) + "]";
    std::string text = expr_text(ja[i], p);
    alpha.push_back(at_path(p, [&] { return parse_scalar(text, field, params); }));
  }
  RingAut phiR = RingAut::identity(d.ring);
  if (j.contains("on_R")) {
    const json& jr = j["on_R"];
    const std::string p = base + ".on_R";
    if (jr.is_string()) {
      if (jr.get<std::string>() != "identity") schema(p, "expected \"identity\" or a list of scaling factors");
    } else if (jr.is_array()) {
      const size_t m = d.ring->nvars();
      if (jr.size() != m) schema(p, "expected one scaling factor per variable");
      Mat a = zero_matrix(m, m);
      for (size_t k = 0; k < m; ++k) {
        std::string pk = p + "[" + std::to_string(k) + "]";
        std::string text = expr_text(jr[k], pk);
        a[k][k] = at_path(pk, [&] { return parse_scalar(text, field, params); });
      }
      phiR = at_path(p, [&] { return RingAut(d.ring, a, Vec(m, Scalar(0))); });
    } else if (jr.is_object() && jr.contains("images")) {
      const json& ji = array_of(jr["images"], p + ".images");
      if (ji.size() != d.ring->nvars()) schema(p + ".images", "expected one image per variable");
      std::vector<BasePoly> images;
      for (size_t k = 0; k < ji.size(); ++k) {
        std::string pk = p + ".images[" + std::to_string(k) + "]";
        std::string text = expr_text(ji[k], pk);
        images.push_back(at_path(pk, [&] { return parse_poly(text, d.ring, params); }));
      }
      phiR = at_path(p, [&] { return RingAut::from_images(d.ring, images); });
    } else {
      schema(p, "expected \"identity\", a list of scaling factors or {\"images\": [...]}");
    }
  }
  return at_path(base, [&] { return make_diagonal_aut(alpha, phiR); });
}

Scenario scenario_from_json(const json& j) {
  if (!j.is_object()) schema("$", "a scenario must be a JSON object");
  Scenario s;
  s.source = j;
  s.name = j.value("name", std::string("scenario"));
  int conductor = infer_conductor(j);
  if (j.contains("field")) {
    const json& f = j["field"];
    if (!f.is_object()) schema("field", "expected an object");
    if (f.contains("characteristic")) {
      if (!f["characteristic"].is_number_integer()) schema("field.characteristic", "expected an integer");
      if (f["characteristic"].get<long long>() != 0)
        throw Error(ErrorKind::UnsupportedFeature, "field.characteristic: only characteristic 0 is supported");
    }
    if (f.contains("conductor")) {
      if (!f["conductor"].is_number_integer() || f["conductor"].get<long long>() < 1)
        schema("field.conductor", "expected a positive integer");
      conductor = std::lcm(conductor, static_cast<int>(f["conductor"].get<long long>()));
    }
  }
  s.field = CycloField::get(conductor);
  if (s.field->conductor() == 1) s.field = nullptr;

  if (j.contains("params")) {
    const json& jp = j["params"];
    if (!jp.is_object()) schema("params", "expected an object");
    for (auto it = jp.begin(); it != jp.end(); ++it) {
      std::string p = "params." + it.key();
      std::string text = expr_text(it.value(), p);
      s.params[it.key()] = at_path(p, [&] { return parse_scalar(text, s.field, s.params); });
    }
  }
  if (j.contains("datum")) s.datum = parse_datum(j["datum"], s.field, s.params);
  if (j.contains("phi")) {
    if (!s.datum) schema("phi", "requires a datum");
    s.phi = parse_phi(j["phi"], *s.datum, s.field, s.params);
  }
  if (j.contains("modules")) s.modules = array_of(j["modules"], "modules");
  if (j.contains("checks")) {
    const json& jc = array_of(j["checks"], "checks");
    for (size_t k = 0; k < jc.size(); ++k) {
      if (!jc[k].is_string()) schema("checks[" + std::to_string(k) + "]", "expected a check name");
      s.checks.push_back(jc[k].get<std::string>());
    }
  }
  return s;
}

Scenario parse_scenario(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    std::string msg = e.what();
    auto colon = msg.find("parse error");
    throw Error(ErrorKind::SyntaxError,
                line_col(text, e.byte == 0 ? 0 : e.byte - 1) + ": " + (colon == std::string::npos ? msg : msg.substr(colon)));
  }
  return scenario_from_json(j);
}

json datum_to_json(const TGWDatum& d) {
  json j;
  j["vars"] = d.ring->vars;
  bool any_laurent = false;
  for (bool b : d.ring->laurent) any_laurent = any_laurent || b;
  if (any_laurent) {
    json l = json::array();
    for (bool b : d.ring->laurent) l.push_back(b);
    j["laurent"] = l;
  }
  json sigma = json::array();
  for (const auto& s : d.sigma) {
    json row = json::array();
    for (const auto& img : s.images()) row.push_back(img.str());
    sigma.push_back(row);
  }
  j["sigma"] = sigma;
  json t = json::array();
  for (const auto& f : d.t) t.push_back(f.str());
  j["t"] = t;
  json mu = json::array();
  for (size_t i = 0; i < d.rank(); ++i) {
    json row = json::array();
    for (size_t k = 0; k < d.rank(); ++k) row.push_back(i == k ? std::string("1") : d.mu[i][k].str());
    mu.push_back(row);
  }
  j["mu"] = mu;
  return j;
}

json phi_to_json(const DiagonalAut& a) {
  json j;
  json alpha = json::array();
  for (const auto& x : a.alpha) alpha.push_back(x.str());
  j["alpha"] = alpha;
  if (a.phiR.is_identity()) {
    j["on_R"] = "identity";
  } else if (auto diag = a.phiR.diagonal_scaling()) {
    json f = json::array();
    for (const auto& c : *diag) f.push_back(c.str());
    j["on_R"] = f;
  } else {
    json imgs = json::array();
    for (const auto& img : a.phiR.images()) imgs.push_back(img.str());
    j["on_R"] = {{"images", imgs}};
  }
  return j;
}

// Built-in library.

namespace {

class Opts {
 public:
  Opts(const std::string& name, const std::map<std::string, std::string>& o) : name_(name), o_(o) {}

  std::string str(const std::string& key, const std::string& def) {
    used_.insert(key);
    auto it = o_.find(key);
    return it == o_.end() ? def : it->second;
  }
  int integer(const std::string& key, int def, int lo, int hi) {
    std::string v = str(key, std::to_string(def));
    int k = 0;
    try {
      size_t pos = 0;
      k = std::stoi(v, &pos);
      if (pos != v.size()) throw std::invalid_argument(v);
    } catch (const std::exception&) {
      throw Error(ErrorKind::InvalidArgument, name_ + ": parameter " + key + " must be an integer");
    }
    if (k < lo || k > hi)
      throw Error(ErrorKind::InvalidArgument, name_ + ": parameter " + key + " must lie in [" +
                                                  std::to_string(lo) + ", " + std::to_string(hi) + "]");
    return k;
  }
  std::vector<int> int_list(const std::string& key, const std::vector<int>& def) {
    std::string d;
    for (size_t k = 0; k < def.size(); ++k) d += (k ? "," : "") + std::to_string(def[k]);
    std::string v = str(key, d);
    std::vector<int> out;
    std::stringstream ss(v);
    std::string item;
    while (std::getline(ss, item, ',')) {
      try {
        int x = std::stoi(item);
        if (x < 1) throw std::invalid_argument(item);
        out.push_back(x);
      } catch (const std::exception&) {
        throw Error(ErrorKind::InvalidArgument, name_ + ": parameter " + key + " must be a comma list of positive integers");
      }
    }
    if (out.size() != def.size())
      throw Error(ErrorKind::InvalidArgument, name_ + ": parameter " + key + " needs " +
                                                  std::to_string(def.size()) + " entries");
    return out;
  }
  void finish() const {
    for (const auto& [k, v] : o_)
      if (!used_.count(k)) throw Error(ErrorKind::InvalidArgument, name_ + ": unknown parameter '" + k + "'");
  }

 private:
  std::string name_;
  const std::map<std::string, std::string>& o_;
  std::set<std::string> used_;
};

std::vector<std::string> var_names(int n) {
  if (n == 1) return {"h"};
  std::vector<std::string> v;
  for (int i = 1; i <= n; ++i) v.push_back("h" + std::to_string(i));
  return v;
}

std::string root_expr(int m) { return m == 1 ? "1" : "zeta(" + std::to_string(m) + ")"; }

json alpha_of(const std::vector<int>& m) {
  json a = json::array();
  for (int x : m) a.push_back(root_expr(x));
  return a;
}

json mat(const std::vector<std::vector<std::string>>& rows) { return json(rows); }

json ones(int n) {
  json mu = json::array();
  for (int i = 0; i < n; ++i) mu.push_back(json(std::vector<std::string>(n, "1")));
  return mu;
}

std::vector<int> first_primes(int n) {
  std::vector<int> p;
  for (int k = 2; static_cast<int>(p.size()) < n; ++k) {
    bool prime = true;
    for (int q : p) prime = prime && k % q != 0;
    if (prime) p.push_back(k);
  }
  return p;
}

json weyl(Opts& o) {
  int n = o.integer("n", 1, 1, 6);
  auto m = o.int_list("m", first_primes(n));
  auto v = var_names(n);
  json sigma = json::array();
  for (int i = 0; i < n; ++i) {
    json row = json::array();
    for (int j = 0; j < n; ++j) row.push_back(i == j ? v[j] + " - 1" : v[j]);
    sigma.push_back(row);
  }
  json j;
  j["name"] = "weyl";
  j["datum"] = {{"vars", v}, {"sigma", sigma}, {"t", v}, {"mu", ones(n)}};
  j["phi"] = {{"alpha", alpha_of(m)}, {"on_R", "identity"}};
  j["modules"] = json::array({{{"kind", "orbit"}, {"base", std::vector<std::string>(n, "0")}}});
  j["checks"] = {"consistency", "cartan", "fixed-ring", "a1n-algebra", "ore"};
  return j;
}

json quantized_weyl(Opts& o) {
  int n = o.integer("n", 2, 1, 5);
  int seed = o.integer("seed", 1, 0, 1 << 30);
  std::vector<int> mdef(n, 1);
  mdef[0] = 3;
  auto m = o.int_list("m", mdef);
  std::mt19937 rng(static_cast<unsigned>(seed));
  std::uniform_int_distribution<int> pick(1, 11);
  auto z = [](int k) { return "zeta(12)^" + std::to_string(k); };
  json params = json::object();
  for (int i = 1; i <= n; ++i) {
    std::string key = "q" + std::to_string(i);
    params[key] = o.str(key, z(pick(rng)));
  }
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) {
      std::string key = "lam" + std::to_string(i) + std::to_string(j);
      params[key] = o.str(key, z(pick(rng)));
    }
  auto v = var_names(n);
  auto q = [](int i) { return "q" + std::to_string(i + 1); };
  json sigma = json::array();
  for (int i = 0; i < n; ++i) {
    json row = json::array();
    for (int j = 0; j < n; ++j) {
      if (j < i) {
        row.push_back(v[j]);
      } else if (j == i) {
        std::string e = "1 + " + q(i) + "*" + v[i];
        for (int k = 0; k < i; ++k) e += " + (" + q(k) + " - 1)*" + v[k];
        row.push_back(e);
      } else {
        row.push_back(q(i) + "*" + v[j]);
      }
    }
    sigma.push_back(row);
  }
  auto lam = [](int i, int j) {  // 0-based, i < j
    return "lam" + std::to_string(i + 1) + std::to_string(j + 1);
  };
  json mu = json::array();
  for (int i = 0; i < n; ++i) {
    json row = json::array();
    for (int j = 0; j < n; ++j) {
      if (i == j) row.push_back("1");
      else if (i < j) row.push_back("1/" + lam(i, j));
      else row.push_back(q(j) + "*" + lam(j, i));
    }
    mu.push_back(row);
  }
  json j;
  j["name"] = "quantized-weyl";
  j["params"] = params;
  j["datum"] = {{"vars", v}, {"sigma", sigma}, {"t", v}, {"mu", mu}};
  j["phi"] = {{"alpha", alpha_of(m)}, {"on_R", "identity"}};
  j["checks"] = {"consistency", "cartan", "fixed-ring", "fixed-type", "a1n-algebra", "ore"};
  return j;
}

json a2_simple(Opts&) {
  json j;
  j["name"] = "a2-simple";
  j["datum"] = {{"vars", {"h"}}, {"sigma", {{"h + 1"}, {"h - 1"}}}, {"t", {"h", "h + 1"}}, {"mu", ones(2)}};
  j["phi"] = {{"alpha", {"1", "zeta(2)"}}, {"on_R", "identity"}};
  j["checks"] = {"consistency", "cartan", "fixed-ring", "fixed-type"};
  return j;
}

json a2_family(Opts& o) {
  json j;
  j["name"] = "a2-family";
  j["params"] = {{"p", o.str("p", "2")}, {"beta", o.str("beta", "1")}, {"mu", o.str("mu", "1")}};
  j["datum"] = {{"vars", {"h"}},
                {"sigma", {{"p*h + beta"}, {"(h - beta)/p"}}},
                {"t", {"h", "p*h + beta"}},
                {"mu", mat({{"1", "mu"}, {"1/mu", "1"}})}};
  j["phi"] = {{"alpha", {"1", "zeta(2)"}}, {"on_R", "identity"}};
  j["checks"] = {"consistency", "cartan", "fixed-ring", "fixed-type"};
  return j;
}

json sergeev(Opts&) {
  json j;
  j["name"] = "sergeev";
  j["datum"] = {{"vars", {"h1", "h2"}},
                {"sigma", mat({{"h1 - 1", "h2"}, {"h1", "h2 - 1"}})},
                {"t", {"h2 - h1", "h2 - h1 + 1"}},
                {"mu", ones(2)}};
  j["checks"] = {"consistency", "cartan"};
  return j;
}

json mazorchuk_turowska(Opts&) {
  json j;
  j["name"] = "mazorchuk-turowska";
  j["datum"] = {{"vars", {"h1", "h2"}},
                {"sigma", mat({{"h1 + 1", "h2 + 1"}, {"h1 - 1", "h2"}})},
                {"t", {"h1*h2", "h1 + 1"}},
                {"mu", ones(2)}};
  j["checks"] = {"consistency", "cartan"};
  return j;
}

json mu_q_family(Opts& o) {
  json j;
  j["name"] = "mu-q-family";
  j["params"] = {{"mu", o.str("mu", "1")}, {"q", o.str("q", "2")}};
  j["datum"] = {{"vars", {"h1", "h2"}},
                {"sigma", mat({{"mu/q*h1 - h2", "mu*q*h2"}, {"mu*q*h1 + h2", "mu/q*h2"}})},
                {"t", {"h1", "1/(mu*q)*h1 - 1/mu^2*h2"}},
                {"mu", mat({{"1", "mu"}, {"mu", "1"}})}};
  j["checks"] = {"consistency", "cartan"};
  return j;
}

json kleinian_fiber(Opts& o) {
  auto m = o.int_list("m", {2, 3});
  json j;
  j["name"] = "kleinian-fiber";
  j["datum"] = {{"vars", {"h"}},
                {"sigma", {{"h - 2"}, {"h + 1"}}},
                {"t", {"(h + 1)*(h + 2)", "h"}},
                {"mu", ones(2)}};
  j["phi"] = {{"alpha", alpha_of(m)}, {"on_R", "identity"}};
  j["checks"] = {"consistency", "cartan", "fixed-ring"};
  return j;
}

json fiber_6_2(Opts& o) {
  int m = o.integer("m", 2, 1, 64);
  json j;
  j["name"] = "fiber-6-2";
  j["datum"] = {{"vars", {"h"}}, {"sigma", {{"h - 1"}, {"h + 1"}}}, {"t", {"h", "h - 1"}}, {"mu", ones(2)}};
  j["phi"] = {{"alpha", {root_expr(m), "1"}}, {"on_R", "identity"}};
  j["modules"] = json::array({{{"kind", "cylinder"}, {"base", {"0"}}}});
  j["checks"] = {"consistency", "cartan", "fixed-ring", "c-power", "cylinder"};
  return j;
}

json finite_orbit(Opts& o) {
  json j;
  j["name"] = "finite-orbit";
  j["field"] = {{"conductor", 4}};
  j["params"] = {{"z", o.str("z", "1")}, {"sqrt_z", o.str("sqrt_z", "1")}};
  j["datum"] = {{"vars", {"h"}}, {"sigma", {{"zeta(4)*h"}}}, {"t", {"h^2 - 1"}}, {"mu", ones(1)}};
  j["phi"] = {{"alpha", {"1"}}, {"on_R", {"-1"}}};
  json big = {
      {"kind", "explicit"},
      {"name", "M"},
      {"over", "A"},
      {"labels", {"v2", "v2i", "v-2", "v-2i"}},
      {"weights", {{"2"}, {"2*zeta(4)"}, {"-2"}, {"-2*zeta(4)"}}},
      {"matrices",
       {{"X-", {{"0", "0", "0", "z"}, {"1", "0", "0", "0"}, {"0", "1", "0", "0"}, {"0", "0", "1", "0"}}},
        {"X+", {{"0", "-5", "0", "0"}, {"0", "0", "3", "0"}, {"0", "0", "0", "-5"}, {"3/z", "0", "0", "0"}}}}}};
  auto small = [](const std::string& name, const std::string& s) {
    std::string r = s == "+" ? "sqrt_z" : "-sqrt_z";
    return json{{"kind", "explicit"},
                {"name", name},
                {"over", "fixed"},
                {"labels", {"b1", "b2"}},
                {"weights", {{"4"}, {"-4"}}},
                {"matrices", {{"X-", mat({{"0", r}, {"1", "0"}})}, {"X+", mat({{"0", "-5"}, {"3/(" + r + ")", "0"}})}}}};
  };
  json res = {{"kind", "restriction"},
              {"from", "M"},
              {"parts",
               {{{"module", "M+"}, {"basis", {{"sqrt_z", "0", "1", "0"}, {"0", "sqrt_z", "0", "1"}}}},
                {{"module", "M-"}, {"basis", {{"-sqrt_z", "0", "1", "0"}, {"0", "-sqrt_z", "0", "1"}}}}}}};
  j["modules"] = json::array({big, small("M+", "+"), small("M-", "-"), res});
  j["checks"] = {"consistency", "hypothesis", "explicit-modules"};
  return j;
}

json infinite_orbit_breaks(Opts& o) {
  int m = o.integer("m", 3, 1, 64);
  json j;
  j["name"] = "infinite-orbit-breaks";
  j["datum"] = {{"vars", {"h"}}, {"sigma", {{"h - 1"}}}, {"t", {"h*(h - 2)"}}, {"mu", ones(1)}};
  j["phi"] = {{"alpha", {root_expr(m)}}, {"on_R", "identity"}};
  j["modules"] = json::array({{{"kind", "orbit"}, {"base", {"0"}}}});
  j["checks"] = {"consistency", "hypothesis", "weight-modules", "restrict"};
  return j;
}

using Builder = json (*)(Opts&);

const std::vector<std::pair<std::string, Builder>>& library() {
  static const std::vector<std::pair<std::string, Builder>> lib = {
      {"weyl", weyl},
      {"quantized-weyl", quantized_weyl},
      {"a2-simple", a2_simple},
      {"a2-family", a2_family},
      {"sergeev", sergeev},
      {"mazorchuk-turowska", mazorchuk_turowska},
      {"mu-q-family", mu_q_family},
      {"kleinian-fiber", kleinian_fiber},
      {"fiber-6-2", fiber_6_2},
      {"finite-orbit", finite_orbit},
      {"infinite-orbit-breaks", infinite_orbit_breaks},
  };
  return lib;
}

}  // namespace

std::vector<std::string> builtin_names() {
  std::vector<std::string> out;
  for (const auto& [name, b] : library()) out.push_back(name);
  return out;
}

json builtin_scenario(const std::string& name, const std::map<std::string, std::string>& overrides) {
  for (const auto& [n, build] : library()) {
    if (n != name) continue;
    Opts o(name, overrides);
    json j = build(o);
    o.finish();
    int c = infer_conductor(j);
    if (j.contains("field")) c = std::lcm(c, j["field"]["conductor"].get<int>());
    j["field"] = {{"conductor", c}};
    return j;
  }
  throw Error(ErrorKind::InvalidArgument, "unknown built-in scenario '" + name + "'");
}

Scenario load_builtin(const std::string& name, const std::map<std::string, std::string>& overrides) {
  return scenario_from_json(builtin_scenario(name, overrides));
}

}  // namespace tgwa
