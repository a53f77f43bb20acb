#include "tgwa/weightmod.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "tgwa/error.hpp"
#include "tgwa/fixedring.hpp"

namespace tgwa {

namespace {

void require_rank1(const TGWDatum& d) {
  if (d.rank() != 1) throw Error(ErrorKind::InvalidArgument, "weight modules need a rank-1 datum");
}

long floor_mod(long k, long m) { return ((k % m) + m) % m; }

// Points of positions lo .. hi.
std::vector<Vec> window_points(const Orbit& o, long lo, long hi) {
  std::vector<Vec> out;
  Vec p = o.point(lo);
  for (long k = lo; k <= hi; ++k) {
    out.push_back(p);
    p = o.sigma.point_action(p);
  }
  return out;
}

Mat diag_of(const std::vector<Vec>& w, const BasePoly& f) {
  Mat d = zero_matrix(w.size(), w.size());
  for (size_t k = 0; k < w.size(); ++k) d[k][k] = f.eval(w[k]);
  return d;
}

Mat matpow(const Mat& a, int k) {
  Mat r = identity_matrix(a.size());
  for (int i = 0; i < k; ++i) r = matmul(r, a);
  return r;
}

std::vector<Scalar> pi_of(const std::vector<BasePoly>& gens, const Vec& p) {
  std::vector<Scalar> v;
  for (const auto& g : gens) v.push_back(g.eval(p));
  return v;
}

bool contains_point(const std::vector<Vec>& pts, const Vec& p) {
  return std::find(pts.begin(), pts.end(), p) != pts.end();
}

std::string bound_str(const std::optional<long>& b, bool upper) {
  if (!b) return upper ? "+inf" : "-inf";
  return std::to_string(*b);
}

}  // namespace

Vec Orbit::point(long k) const {
  if (period) k = floor_mod(k, *period);
  Vec p = base;
  if (k >= 0) {
    for (long i = 0; i < k; ++i) p = sigma.point_action(p);
  } else {
    RingAut inv = sigma.inverse();
    for (long i = 0; i < -k; ++i) p = inv.point_action(p);
  }
  return p;
}

Orbit orbit_of(const TGWDatum& d, const Vec& base, int window) {
  require_rank1(d);
  check_point(d.ring, base);
  Orbit o{base, d.sigma[0], std::nullopt};
  Vec p = base;
  for (int k = 1; k <= 2 * window; ++k) {
    p = o.sigma.point_action(p);
    if (p == base) {
      o.period = k;
      break;
    }
  }
  return o;
}

BreakSet breaks(const TGWDatum& d, const Orbit& o, int window) {
  require_rank1(d);
  BreakSet b{window, {}};
  long lo = o.finite() ? 0 : -window, hi = o.finite() ? *o.period - 1 : window;
  auto pts = window_points(o, lo, hi);
  for (long k = lo; k <= hi; ++k)
    if (d.t[0].eval(pts[k - lo]).is_zero()) b.positions.push_back(k);
  return b;
}

bool SimpleSupport::contains(long k) const { return (!lower || k > *lower) && (!upper || k <= *upper); }

std::string SimpleSupport::str() const {
  return "(" + bound_str(lower, false) + ", " + bound_str(upper, true) + (upper ? "]" : ")");
}

std::vector<SimpleSupport> simple_supports(const TGWDatum& d, const Orbit& o, int window) {
  require_rank1(d);
  if (o.finite()) throw Error(ErrorKind::FiniteOrbitUnsupported, "simple supports need an infinite orbit");
  auto b = breaks(d, o, window).positions;
  std::vector<SimpleSupport> out;
  std::optional<long> prev;
  for (long k : b) {
    out.push_back({prev, k});
    prev = k;
  }
  out.push_back({prev, std::nullopt});
  return out;
}

ActionResult module_action(const TGWDatum& d, const Orbit& o, const SimpleSupport& s, long k, int sign) {
  require_rank1(d);
  if (!s.contains(k))
    throw Error(ErrorKind::PositionOutsideSupport, "position " + std::to_string(k) + " is outside " + s.str());
  ActionResult r;
  long target = sign > 0 ? k + 1 : k - 1;
  if (!s.contains(target)) return r;
  r.zero = false;
  r.target = target;
  r.coeff = sign > 0 ? Scalar(1) : d.t[0].eval(o.point(target));
  if (r.coeff.is_zero()) r.zero = true;
  return r;
}

bool support_relations_hold(const TGWDatum& d, const Orbit& o, const SimpleSupport& s, int window) {
  BasePoly st = d.sigma[0].apply(d.t[0]);
  auto pts = window_points(o, -window, window);
  auto twice = [&](long k, int first) {
    ActionResult a = module_action(d, o, s, k, first);
    if (a.zero) return Scalar(0);
    ActionResult b = module_action(d, o, s, a.target, -first);
    if (b.zero || b.target != k) return Scalar(0);
    return a.coeff * b.coeff;
  };
  for (long k = -window; k <= window; ++k) {
    if (!s.contains(k)) continue;
    const Vec& p = pts[k + window];
    if (twice(k, +1) != d.t[0].eval(p)) return false;
    if (twice(k, -1) != st.eval(p)) return false;
  }
  return true;
}

bool Rank1Restriction::ok() const {
  if (!injective || !accounting_ok) return false;
  for (const auto& c : components)
    if (!c.empty && !c.interval_ok) return false;
  return true;
}

Rank1Restriction restrict_rank1(const TGWDatum& d, const DiagonalAut& a, const Orbit& o, const SimpleSupport& s,
                                int window) {
  require_rank1(d);
  if (o.finite()) throw Error(ErrorKind::FiniteOrbitUnsupported, "restriction needs an infinite orbit");
  HypothesisReport h = validate_hypothesis(d, a);
  if (!h.ok()) {
    std::string failed;
    for (const auto& [name, v] : h.items())
      if (!v) failed += (failed.empty() ? "" : ", ") + name;
    throw Error(ErrorKind::InvalidArgument, "hypothesis fails: " + failed);
  }
  if (!a.phiR.is_identity())
    throw Error(ErrorKind::UnsupportedResidueComputation,
                "residue degree on an infinite orbit is only computed for phi|R = id");
  Rank1Restriction r;
  r.m = a.orders[0];
  r.d_phi = 1;
  const long m = r.m;

  FixedRingResult fr = fixed_datum(d, a);
  auto pts = window_points(o, -window, window);
  for (long k = -window; k <= window; ++k)
    if (fr.datum.t[0].eval(pts[k + window]).is_zero()) r.s_breaks.push_back(k);

  for (int i = 0; i < m; ++i) {
    RestrictionComponent c;
    c.residue = i;
    if (s.lower) c.first = *s.lower + 1 + floor_mod(i - (*s.lower + 1), m);
    if (s.upper) c.last = *s.upper - floor_mod(*s.upper - i, m);
    c.empty = c.first && c.last && *c.first > *c.last;
    if (!c.empty) {
      // s-breaks of this class inside [first - m, last] must be exactly the two ends.
      std::vector<long> inside;
      for (long n : r.s_breaks)
        if (floor_mod(n - i, m) == 0 && (!c.first || n >= *c.first - m) && (!c.last || n <= *c.last))
          inside.push_back(n);
      std::vector<long> expect;
      if (c.first) expect.push_back(*c.first - m);
      if (c.last) expect.push_back(*c.last);
      c.interval_ok = inside == expect;
      if (c.first) c.s_lower = *c.first - m;
      if (c.last) c.s_upper = *c.last;
    }
    r.components.push_back(c);
  }

  r.injective = true;
  std::vector<std::vector<Scalar>> images;
  for (const auto& p : pts) images.push_back(pi_of(fr.subring.generators, p));
  for (size_t x = 0; x < images.size(); ++x)
    for (size_t y = x + 1; y < images.size(); ++y)
      if (images[x] == images[y]) r.injective = false;

  r.accounting_ok = true;
  for (long k = -window; k <= window; ++k) {
    if (!s.contains(k)) continue;
    int hits = 0;
    for (const auto& c : r.components)
      if (!c.empty && floor_mod(k - c.residue, m) == 0 && (!c.first || k >= *c.first) && (!c.last || k <= *c.last))
        ++hits;
    if (hits != r.d_phi) r.accounting_ok = false;
  }
  return r;
}

std::string ideal_str(const RingPtr& r, const Vec& p) {
  std::string s = "(";
  for (size_t j = 0; j < p.size(); ++j) {
    BasePoly g = BasePoly::variable(r, j) - BasePoly::constant(r, p[j]);
    s += (j ? ", " : "") + g.str();
  }
  return s + ")";
}

std::string render_orbit_ascii(const TGWDatum& d, const Orbit& o, int m, int window) {
  static const std::string shapes = "ovsabcdefgijklnpqrtuwxyz";
  if (m < 1 || m > static_cast<int>(shapes.size()))
    throw Error(ErrorKind::InvalidArgument, "shape count must lie in 1 .. " + std::to_string(shapes.size()));
  long lo = o.finite() ? 0 : -window, hi = o.finite() ? *o.period - 1 : window;
  auto pts = window_points(o, lo, hi);
  auto br = breaks(d, o, window).positions;
  std::vector<SimpleSupport> sup;
  if (!o.finite()) sup = simple_supports(d, o, window);

  std::vector<std::string> pos, wt, shp;
  size_t w = 3;
  for (long k = lo; k <= hi; ++k) {
    pos.push_back(std::to_string(k));
    std::string label = ideal_str(d.ring, pts[k - lo]);
    label.erase(std::remove(label.begin(), label.end(), ' '), label.end());
    wt.push_back(label.substr(1, label.size() - 2));
    char c = shapes[floor_mod(k, m)];
    bool is_break = std::binary_search(br.begin(), br.end(), k);
    shp.push_back(std::string(1, is_break ? static_cast<char>(std::toupper(c)) : c));
    w = std::max({w, pos.back().size() + 1, wt.back().size() + 1});
  }
  std::ostringstream out;
  out << "orbit of " << ideal_str(d.ring, o.base) << " under " << o.sigma.str() << ", t = " << d.t[0].str();
  if (o.finite()) out << ", period " << *o.period << "\n";
  else out << ", positions " << lo << " .. " << hi << "\n";
  out << "shapes:";
  for (int i = 0; i < m; ++i) out << " " << shapes[i] << " T-orbit " << i << (i + 1 < m ? "," : "");
  out << "; upper case marks a break of t\n";
  auto row = [&](const std::string& head, const std::vector<std::string>& cells) {
    std::string line = head;
    line.resize(10, ' ');
    for (const auto& c : cells) line += std::string(w - c.size(), ' ') + c;
    while (!line.empty() && line.back() == ' ') line.pop_back();
    out << line << "\n";
  };
  row("position", pos);
  row("weight", wt);
  row("shape", shp);
  for (size_t i = 0; i < sup.size(); ++i) {
    std::vector<std::string> cells;
    for (long k = lo; k <= hi; ++k) cells.push_back(sup[i].contains(k) ? "*" : ".");
    row("M" + std::to_string(i + 1), cells);
  }
  for (size_t i = 0; i < sup.size(); ++i) out << "M" << i + 1 << " support " << sup[i].str() << "\n";
  return out.str();
}

bool ModuleRelations::ok() const {
  return std::all_of(items.begin(), items.end(), [](const auto& p) { return p.second; });
}

void ModuleRelations::require() const {
  for (const auto& [name, v] : items)
    if (!v) throw Error(ErrorKind::RelationViolated, name);
}

static void check_shape(const ExplicitModule& m, const TGWDatum& d) {
  size_t n = m.dim();
  if (m.xplus.size() != d.rank() || m.xminus.size() != d.rank())
    throw Error(ErrorKind::InvalidArgument, "module " + m.name + " has matrices for rank " +
                                               std::to_string(m.xplus.size()) + ", datum has rank " +
                                               std::to_string(d.rank()));
  for (const auto& w : m.weights)
    if (w.size() != d.ring->nvars())
      throw Error(ErrorKind::InvalidArgument, "module " + m.name + ": weight dimension mismatch");
  auto sq = [&](const Mat& a) {
    if (a.size() != n) return false;
    for (const auto& row : a)
      if (row.size() != n) return false;
    return true;
  };
  for (size_t i = 0; i < d.rank(); ++i)
    if (!sq(m.xplus[i]) || !sq(m.xminus[i]))
      throw Error(ErrorKind::InvalidArgument, "module " + m.name + ": matrices must be " + std::to_string(n) + "x" +
                                                  std::to_string(n));
}

ModuleRelations verify_module_relations(const ExplicitModule& m, const TGWDatum& d) {
  check_shape(m, d);
  ModuleRelations rep;
  const bool one = d.rank() == 1;
  auto x = [&](size_t i, const char* s) { return "X" + (one ? std::string() : std::to_string(i + 1)) + s; };
  for (size_t i = 0; i < d.rank(); ++i) {
    const Mat &xp = m.xplus[i], &xm = m.xminus[i];
    auto fwd = d.sigma[i].images(), back = d.sigma[i].inverse_images();
    for (size_t j = 0; j < d.ring->nvars(); ++j) {
      Mat h = diag_of(m.weights, BasePoly::variable(d.ring, j));
      const std::string& v = d.ring->vars[j];
      std::string sg = one ? "sigma" : "sigma" + std::to_string(i + 1);
      rep.items.push_back({x(i, "+") + " " + v + " = " + sg + "(" + v + ") " + x(i, "+"),
                           matmul(xp, h) == matmul(diag_of(m.weights, fwd[j]), xp)});
      rep.items.push_back({x(i, "-") + " " + v + " = " + sg + "^-1(" + v + ") " + x(i, "-"),
                           matmul(xm, h) == matmul(diag_of(m.weights, back[j]), xm)});
    }
    std::string ti = one ? "t" : "t" + std::to_string(i + 1);
    std::string si = one ? "sigma" : "sigma" + std::to_string(i + 1);
    rep.items.push_back({x(i, "-") + x(i, "+") + " = " + ti, matmul(xm, xp) == diag_of(m.weights, d.t[i])});
    rep.items.push_back({x(i, "+") + x(i, "-") + " = " + si + "(" + ti + ")",
                         matmul(xp, xm) == diag_of(m.weights, d.sigma[i].apply(d.t[i]))});
    for (size_t j = 0; j < d.rank(); ++j) {
      if (i == j) continue;
      rep.items.push_back({x(i, "+") + x(j, "-") + " = mu" + std::to_string(i + 1) + std::to_string(j + 1) + " " +
                               x(j, "-") + x(i, "+"),
                           matmul(xp, m.xminus[j]) == matscale(matmul(m.xminus[j], xp), d.mu[i][j])});
    }
  }
  return rep;
}

bool is_simple(const ExplicitModule& m) {
  for (size_t a = 0; a < m.dim(); ++a)
    for (size_t b = a + 1; b < m.dim(); ++b)
      if (m.weights[a] == m.weights[b])
        throw Error(ErrorKind::SpinInconclusive,
                    "module " + m.name + " has a repeated weight; spinning basis vectors does not decide simplicity");
  std::vector<Mat> ops = m.xplus;
  ops.insert(ops.end(), m.xminus.begin(), m.xminus.end());
  const size_t n = m.dim();
  for (size_t k = 0; k < n; ++k) {
    Mat span;
    Vec e(n, Scalar(0));
    e[k] = Scalar(1);
    std::vector<Vec> frontier{e};
    span.push_back(e);
    while (!frontier.empty()) {
      std::vector<Vec> next;
      for (const auto& v : frontier)
        for (const auto& op : ops) {
          Vec w = matvec(op, v);
          Mat trial = span;
          trial.push_back(w);
          if (rank(trial) > span.size()) {
            span.push_back(w);
            next.push_back(w);
          }
        }
      frontier = std::move(next);
    }
    if (span.size() != n) return false;
  }
  return true;
}

int hom_dimension(const ExplicitModule& a, const ExplicitModule& b, const TGWDatum& d) {
  check_shape(a, d);
  check_shape(b, d);
  const size_t da = a.dim(), db = b.dim(), cols = da * db;
  std::vector<std::pair<Mat, Mat>> gens;
  for (size_t j = 0; j < d.ring->nvars(); ++j) {
    BasePoly v = BasePoly::variable(d.ring, j);
    gens.push_back({diag_of(a.weights, v), diag_of(b.weights, v)});
  }
  for (size_t i = 0; i < d.rank(); ++i) {
    gens.push_back({a.xplus[i], b.xplus[i]});
    gens.push_back({a.xminus[i], b.xminus[i]});
  }
  // T is db x da with T[r][c] at r * da + c; equations G_b T - T G_a = 0.
  Mat sys;
  for (const auto& [ga, gb] : gens)
    for (size_t r = 0; r < db; ++r)
      for (size_t c = 0; c < da; ++c) {
        Vec row(cols, Scalar(0));
        for (size_t s = 0; s < db; ++s) row[s * da + c] += gb[r][s];
        for (size_t s = 0; s < da; ++s) row[r * da + s] -= ga[s][c];
        sys.push_back(std::move(row));
      }
  return static_cast<int>(nullspace(sys, cols).size());
}

bool ExplicitRestriction::ok() const {
  if (!basis_invertible || !fiber_lemma_ok || !accounting_ok) return false;
  return std::all_of(parts_ok.begin(), parts_ok.end(), [](const auto& p) { return p.second; });
}

ExplicitRestriction verify_explicit_restriction(const ExplicitModule& from, const TGWDatum& d, const DiagonalAut& a,
                                                const std::vector<RestrictionPart>& parts) {
  check_shape(from, d);
  FixedRingResult fr = fixed_datum(d, a);
  if (!fr.presentation)
    throw Error(ErrorKind::UnsupportedFeature, "the fixed subring has no polynomial presentation");
  const TGWDatum& fd = *fr.presentation;
  const auto& gens = fr.subring.generators;
  const size_t n = from.dim();
  ExplicitRestriction rep;

  std::vector<Mat> yplus, yminus;
  for (size_t i = 0; i < d.rank(); ++i) {
    yplus.push_back(matpow(from.xplus[i], fr.m[i]));
    yminus.push_back(matpow(from.xminus[i], fr.m[i]));
  }
  std::vector<Mat> u;
  for (const auto& g : gens) u.push_back(diag_of(from.weights, g));

  Mat all = zero_matrix(n, 0);
  for (const auto& p : parts) {
    check_shape(p.module, fd);
    const size_t k = p.module.dim();
    if (p.basis.size() != k)
      throw Error(ErrorKind::InvalidArgument, "part " + p.module.name + " needs " + std::to_string(k) + " basis vectors");
    Mat bp = zero_matrix(n, k);
    for (size_t c = 0; c < k; ++c) {
      if (p.basis[c].size() != n)
        throw Error(ErrorKind::InvalidArgument, "part " + p.module.name + ": basis vectors need " +
                                                    std::to_string(n) + " coordinates");
      for (size_t r = 0; r < n; ++r) {
        bp[r][c] = p.basis[c][r];
        all[r].push_back(p.basis[c][r]);
      }
    }
    bool ok = true;
    for (size_t i = 0; i < d.rank(); ++i) {
      ok = ok && matmul(yplus[i], bp) == matmul(bp, p.module.xplus[i]);
      ok = ok && matmul(yminus[i], bp) == matmul(bp, p.module.xminus[i]);
    }
    for (size_t j = 0; j < gens.size(); ++j)
      ok = ok && matmul(u[j], bp) == matmul(bp, diag_of(p.module.weights, BasePoly::variable(fd.ring, j)));
    rep.parts_ok.push_back({p.module.name, ok});
  }
  rep.basis_invertible = all[0].size() == n && inverse(all).has_value();

  rep.fiber_lemma_ok = true;
  auto key_less = [](const std::vector<Scalar>& x, const std::vector<Scalar>& y) {
    return std::lexicographical_compare(x.begin(), x.end(), y.begin(), y.end(),
                                        [](const Scalar& p, const Scalar& q) { return p.compare(q) < 0; });
  };
  std::map<std::vector<Scalar>, int, decltype(key_less)> src(key_less), dst(key_less);
  for (const auto& w : from.weights) {
    auto img = pi_of(gens, w);
    ++src[img];
    std::vector<Vec> fiber, orbit;
    for (const auto& w2 : from.weights)
      if (pi_of(gens, w2) == img && !contains_point(fiber, w2)) fiber.push_back(w2);
    Vec p = w;
    for (int k = 0; k < a.ell; ++k) {
      if (pi_of(gens, p) != img) rep.fiber_lemma_ok = false;
      if (contains_point(from.weights, p) && !contains_point(orbit, p)) orbit.push_back(p);
      p = a.phiR.point_action(p);
    }
    std::sort(fiber.begin(), fiber.end(), key_less);
    std::sort(orbit.begin(), orbit.end(), key_less);
    if (fiber != orbit) rep.fiber_lemma_ok = false;
  }
  for (const auto& p : parts)
    for (const auto& w : p.module.weights) ++dst[w];
  rep.accounting_ok = src.size() == dst.size() && std::equal(src.begin(), src.end(), dst.begin());
  return rep;
}

ScenarioModules explicit_modules(const Scenario& s) {
  ScenarioModules out;
  auto schema = [](const std::string& path, const std::string& msg) {
    throw Error(ErrorKind::SchemaError, path + ": " + msg);
  };
  auto scalar_list = [&](const json& v, const std::string& path) {
    if (!v.is_array()) schema(path, "expected an array");
    Vec r;
    for (size_t k = 0; k < v.size(); ++k) r.push_back(scenario_scalar(s, v[k], path + "[" + std::to_string(k) + "]"));
    return r;
  };
  auto matrix = [&](const json& v, const std::string& path) {
    if (!v.is_array()) schema(path, "expected an array of rows");
    Mat r;
    for (size_t k = 0; k < v.size(); ++k) r.push_back(scalar_list(v[k], path + "[" + std::to_string(k) + "]"));
    return r;
  };
  for (size_t k = 0; k < s.modules.size(); ++k) {
    const json& j = s.modules[k];
    std::string path = "modules[" + std::to_string(k) + "]";
    if (!j.is_object() || j.value("kind", "") != "explicit") continue;
    ExplicitModule m;
    m.name = j.value("name", "M" + std::to_string(k));
    m.over = j.value("over", "A");
    if (m.over != "A" && m.over != "fixed") schema(path + ".over", "expected \"A\" or \"fixed\"");
    if (!j.contains("weights") || !j["weights"].is_array()) schema(path + ".weights", "expected an array");
    for (size_t w = 0; w < j["weights"].size(); ++w)
      m.weights.push_back(scalar_list(j["weights"][w], path + ".weights[" + std::to_string(w) + "]"));
    if (j.contains("labels"))
      for (const auto& l : j["labels"]) m.labels.push_back(l.get<std::string>());
    while (m.labels.size() < m.weights.size()) m.labels.push_back("v" + std::to_string(m.labels.size()));
    if (!j.contains("matrices") || !j["matrices"].is_object()) schema(path + ".matrices", "expected an object");
    const json& mats = j["matrices"];
    if (mats.contains("X+") || mats.contains("X-")) {
      if (!mats.contains("X+") || !mats.contains("X-")) schema(path + ".matrices", "needs both X+ and X-");
      m.xplus.push_back(matrix(mats["X+"], path + ".matrices.X+"));
      m.xminus.push_back(matrix(mats["X-"], path + ".matrices.X-"));
    } else {
      for (int i = 1;; ++i) {
        std::string p = "X" + std::to_string(i) + "+", q = "X" + std::to_string(i) + "-";
        if (!mats.contains(p) && !mats.contains(q)) break;
        if (!mats.contains(p) || !mats.contains(q)) schema(path + ".matrices", "needs both " + p + " and " + q);
        m.xplus.push_back(matrix(mats[p], path + ".matrices." + p));
        m.xminus.push_back(matrix(mats[q], path + ".matrices." + q));
      }
    }
    if (m.xplus.empty()) schema(path + ".matrices", "no generator matrices");
    if (out.modules.count(m.name)) schema(path + ".name", "duplicate module " + m.name);
    out.modules.emplace(m.name, std::move(m));
  }
  for (size_t k = 0; k < s.modules.size(); ++k) {
    const json& j = s.modules[k];
    std::string path = "modules[" + std::to_string(k) + "]";
    if (!j.is_object() || j.value("kind", "") != "restriction") continue;
    std::string from = j.value("from", "");
    if (!out.modules.count(from)) schema(path + ".from", "unknown module '" + from + "'");
    if (!j.contains("parts") || !j["parts"].is_array()) schema(path + ".parts", "expected an array");
    std::vector<RestrictionPart> parts;
    for (size_t p = 0; p < j["parts"].size(); ++p) {
      const json& jp = j["parts"][p];
      std::string pp = path + ".parts[" + std::to_string(p) + "]";
      std::string name = jp.value("module", "");
      if (!out.modules.count(name)) schema(pp + ".module", "unknown module '" + name + "'");
      RestrictionPart part{out.modules.at(name), {}};
      if (!jp.contains("basis") || !jp["basis"].is_array()) schema(pp + ".basis", "expected an array");
      for (size_t b = 0; b < jp["basis"].size(); ++b)
        part.basis.push_back(scalar_list(jp["basis"][b], pp + ".basis[" + std::to_string(b) + "]"));
      parts.push_back(std::move(part));
    }
    out.restrictions.push_back({from, std::move(parts)});
  }
  return out;
}

size_t CylinderDiagram::unbounded_count() const {
  return static_cast<size_t>(
      std::count_if(components.begin(), components.end(), [](const auto& c) { return c.unbounded; }));
}

CylinderDiagram cylinder(const TGWDatum& d, const Scalar& base, int window) {
  const std::string need = "cylinder needs a rank-2 datum over k[h] with sigma_1(h) = h - m (m >= 1), sigma_2(h) = h + 1";
  if (d.rank() != 2 || d.ring->nvars() != 1 || d.ring->laurent[0]) throw Error(ErrorKind::InvalidArgument, need);
  if (window < 1) throw Error(ErrorKind::InvalidArgument, "window must be positive");
  for (int i = 0; i < 2; ++i)
    if (!d.sigma[i].matrix()[0][0].is_one()) throw Error(ErrorKind::InvalidArgument, need);
  Scalar b1 = -d.sigma[0].offset()[0];
  if (!b1.is_rational() || b1.to_rational().get_den() != 1 || b1.to_rational() < 1 ||
      d.sigma[1].offset()[0] != Scalar(1))
    throw Error(ErrorKind::InvalidArgument, need);

  CylinderDiagram c;
  c.datum = d;
  c.base = base;
  c.m = static_cast<int>(b1.to_rational().get_num().get_si());
  c.lo = -window;
  c.hi = window;
  const long m = c.m;
  auto at = [&](int i, long r) { return d.t[i].eval(Vec{base + Scalar(r)}).is_zero(); };
  for (long r = c.lo - m; r <= c.hi; ++r) {
    if (!at(0, r)) continue;
    if (r < c.lo || r + m > c.hi)
      throw Error(ErrorKind::WindowTooSmall, "vertical break edge at row " + std::to_string(r) + " crosses the window edge");
    c.vertical.push_back(r);
  }
  for (long r = c.lo; r <= c.hi + 1; ++r) {
    if (!at(1, r)) continue;
    if (r - 1 < c.lo || r > c.hi)
      throw Error(ErrorKind::WindowTooSmall, "horizontal break edge at row " + std::to_string(r) + " crosses the window edge");
    c.horizontal.push_back(r);
  }
  auto vert = [&](long r) { return std::binary_search(c.vertical.begin(), c.vertical.end(), r); };
  auto horiz = [&](long r) { return std::binary_search(c.horizontal.begin(), c.horizontal.end(), r); };

  const size_t rows = static_cast<size_t>(c.hi - c.lo + 1);
  c.component_of.assign(rows, -1);
  std::vector<long> lift(rows, 0);  // sigma_1 steps from the component root
  for (long start = c.lo; start <= c.hi; ++start) {
    if (c.component_of[start - c.lo] >= 0) continue;
    int id = static_cast<int>(c.components.size());
    CylinderComponent comp;
    std::vector<long> stack{start};
    c.component_of[start - c.lo] = id;
    while (!stack.empty()) {
      long r = stack.back();
      stack.pop_back();
      comp.rows.push_back(r);
      long x = lift[r - c.lo];
      std::vector<std::pair<long, long>> nb;
      if (!vert(r)) nb.push_back({r + m, x + 1});
      if (!vert(r - m)) nb.push_back({r - m, x - 1});
      if (!horiz(r)) nb.push_back({r - 1, x});
      if (!horiz(r + 1)) nb.push_back({r + 1, x});
      for (auto [s, xs] : nb) {
        if (s < c.lo || s > c.hi) continue;
        if (c.component_of[s - c.lo] < 0) {
          c.component_of[s - c.lo] = id;
          lift[s - c.lo] = xs;
          stack.push_back(s);
        } else if (lift[s - c.lo] != xs) {
          comp.winds = true;
        }
      }
    }
    std::sort(comp.rows.begin(), comp.rows.end());
    bool top = comp.rows.front() == c.lo, bottom = comp.rows.back() == c.hi;
    comp.unbounded = top || bottom;
    c.components.push_back(std::move(comp));
  }
  int inner = 0;
  for (auto& comp : c.components) {
    bool top = comp.rows.front() == c.lo, bottom = comp.rows.back() == c.hi;
    comp.name = top && bottom ? "D" : top ? "D+" : bottom ? "D-" : "D" + std::to_string(++inner);
  }
  return c;
}

static std::string row_label(const CylinderDiagram& c, long r) {
  return ideal_str(c.datum.ring, Vec{c.base + Scalar(r)});
}

std::string render_cylinder_ascii(const CylinderDiagram& c) {
  auto vert = [&](long r) { return std::binary_search(c.vertical.begin(), c.vertical.end(), r); };
  auto horiz = [&](long r) { return std::binary_search(c.horizontal.begin(), c.horizontal.end(), r); };
  size_t w = 0;
  for (long r = c.lo; r <= c.hi; ++r) w = std::max(w, row_label(c, r).size());
  std::ostringstream out;
  out << "cylinder\n";
  out << "  sigma1: " << c.datum.sigma[0].str() << "; sigma2: " << c.datum.sigma[1].str() << "\n";
  out << "  t1 = " << c.datum.t[0].str() << "; t2 = " << c.datum.t[1].str() << "\n";
  out << "  the right edge of a row is glued to the left edge of the row " << c.m << " below\n";
  out << "  rows " << row_label(c, c.lo) << " .. " << row_label(c, c.hi) << ", top to bottom\n";
  out << "  # blocked vertical edge, = blocked horizontal edge\n\n";
  for (long r = c.lo; r <= c.hi; ++r) {
    out << "    " << (r > c.lo && horiz(r) ? "+===+" : "+---+") << "\n";
    std::string label = row_label(c, r);
    label.resize(w, ' ');
    out << "    " << (vert(r - c.m) ? '#' : '|') << " o " << (vert(r) ? '#' : '|') << "  " << label << "  "
        << c.components[c.component_of[r - c.lo]].name << "\n";
  }
  out << "    +---+\n\ncomponents\n";
  for (const auto& comp : c.components) {
    out << "  " << comp.name << ": " << comp.rows.size() << " weights, " << row_label(c, comp.rows.front()) << " .. "
        << row_label(c, comp.rows.back()) << (comp.unbounded ? ", unbounded in window" : ", bounded")
        << (comp.winds ? ", winds around the cylinder" : "") << "\n";
  }
  out << "unbounded in window means the component reaches a window edge; contractibility is not decided\n";
  return out.str();
}

std::string render_cylinder_svg(const CylinderDiagram& c) {
  const long n = c.hi - c.lo + 1;
  const int rh = 24, x0 = 40, x1 = 80, y0 = 20;
  auto vert = [&](long r) { return std::binary_search(c.vertical.begin(), c.vertical.end(), r); };
  auto horiz = [&](long r) { return std::binary_search(c.horizontal.begin(), c.horizontal.end(), r); };
  auto y = [&](long r) { return y0 + static_cast<int>(r - c.lo) * rh; };
  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"240\" height=\"" << 2 * y0 + n * rh << "\">\n";
  out << "<rect x=\"" << x0 << "\" y=\"" << y0 << "\" width=\"" << x1 - x0 << "\" height=\"" << n * rh
      << "\" fill=\"none\" stroke=\"#bbbbbb\"/>\n";
  for (long r = c.lo; r <= c.hi; ++r) {
    int top = y(r);
    out << "<line x1=\"" << x0 << "\" y1=\"" << top << "\" x2=\"" << x1 << "\" y2=\"" << top
        << "\" stroke=\"#dddddd\"/>\n";
    out << "<circle cx=\"" << (x0 + x1) / 2 << "\" cy=\"" << top + rh / 2 << "\" r=\"3\" fill=\"black\"/>\n";
    out << "<text x=\"" << x1 + 10 << "\" y=\"" << top + rh / 2 + 4 << "\" font-size=\"11\">" << row_label(c, r)
        << "</text>\n";
    out << "<text x=\"" << x1 + 110 << "\" y=\"" << top + rh / 2 + 4 << "\" font-size=\"11\">"
        << c.components[c.component_of[r - c.lo]].name << "</text>\n";
    if (vert(r))
      out << "<line x1=\"" << x1 << "\" y1=\"" << top << "\" x2=\"" << x1 << "\" y2=\"" << top + rh
          << "\" stroke=\"red\" stroke-width=\"2\" stroke-dasharray=\"4 3\"/>\n";
    if (vert(r - c.m))
      out << "<line x1=\"" << x0 << "\" y1=\"" << top << "\" x2=\"" << x0 << "\" y2=\"" << top + rh
          << "\" stroke=\"red\" stroke-width=\"2\"/>\n";
    if (r > c.lo && horiz(r))
      out << "<line x1=\"" << x0 << "\" y1=\"" << top << "\" x2=\"" << x1 << "\" y2=\"" << top
          << "\" stroke=\"blue\" stroke-width=\"2\"/>\n";
  }
  out << "</svg>\n";
  return out.str();
}

Scalar restrict_fiber(const Scalar& xi, int m) {
  if (m < 1) throw Error(ErrorKind::InvalidArgument, "m must be positive");
  return xi.pow(m);
}

}  // namespace tgwa
