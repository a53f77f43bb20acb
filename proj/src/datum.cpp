#include "tgwa/datum.hpp"

#include <algorithm>
#include <set>

#include "tgwa/error.hpp"

namespace tgwa {

RingAut TGWDatum::sigma_power(const std::vector<int>& d) const {
  RingAut r = RingAut::identity(ring);
  for (size_t i = 0; i < d.size(); ++i)
    if (d[i]) r = compose(r, sigma[i].power(d[i]));
  return r;
}

void check_structure(const TGWDatum& d) {
  const size_t n = d.rank();
  if (d.t.size() != n || d.mu.size() != n)
    throw Error(ErrorKind::SchemaError, "sigma, t and mu must all have length n");
  for (const auto& row : d.mu)
    if (row.size() != n) throw Error(ErrorKind::SchemaError, "mu must be an n x n matrix");
  for (size_t i = 0; i < n; ++i) {
    require_same_ring(d.ring, d.sigma[i].ring());
    require_same_ring(d.ring, d.t[i].ring());
    if (d.t[i].is_zero()) throw Error(ErrorKind::ZeroT, "t_" + std::to_string(i + 1) + " is zero");
    for (size_t j = 0; j < n; ++j)
      if (i != j && d.mu[i][j].is_zero())
        throw Error(ErrorKind::ZeroMu, "mu_" + std::to_string(i + 1) + std::to_string(j + 1) + " is zero");
  }
  for (size_t i = 0; i < n; ++i)
    for (size_t j = i + 1; j < n; ++j)
      if (!commute(d.sigma[i], d.sigma[j]))
        throw Error(ErrorKind::NonCommutingSigmas,
                    "sigma_" + std::to_string(i + 1) + " and sigma_" + std::to_string(j + 1) + " do not commute");
}

TGWDatum make_datum(RingPtr ring, std::vector<RingAut> sigma, std::vector<BasePoly> t, Mat mu) {
  TGWDatum d{std::move(ring), std::move(sigma), std::move(t), std::move(mu)};
  check_structure(d);
  return d;
}

bool same_datum(const TGWDatum& a, const TGWDatum& b) {
  if (!(*a.ring == *b.ring) || a.rank() != b.rank()) return false;
  for (size_t i = 0; i < a.rank(); ++i) {
    if (a.sigma[i] != b.sigma[i] || a.t[i] != b.t[i]) return false;
    for (size_t j = 0; j < a.rank(); ++j)
      if (i != j && a.mu[i][j] != b.mu[i][j]) return false;
  }
  return true;
}

bool ValidityReport::cons1_ok() const {
  return std::all_of(cons1.begin(), cons1.end(), [](const auto& kv) { return kv.second; });
}

bool ValidityReport::cons2_ok() const {
  return std::all_of(cons2.begin(), cons2.end(), [](const auto& kv) { return kv.second; });
}

ValidityReport validate_datum(const TGWDatum& d) {
  check_structure(d);
  const int n = static_cast<int>(d.rank());
  ValidityReport rep;
  for (const auto& ti : d.t) rep.regular = rep.regular && !ti.is_zero();
  std::vector<BasePoly> st(n);
  for (int i = 0; i < n; ++i) st[i] = d.sigma[i].apply(d.t[i]);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      BasePoly lhs = compose(d.sigma[i], d.sigma[j]).apply(d.t[i] * d.t[j]);
      BasePoly rhs = st[i] * st[j] * (d.mu[i][j] * d.mu[j][i]);
      rep.cons1[{i, j}] = lhs == rhs;
    }
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < n; ++i)
      for (int k = 0; k < n; ++k) {
        if (i == j || j == k || i == k) continue;
        BasePoly lhs = d.t[j] * compose(d.sigma[i], d.sigma[k]).apply(d.t[j]);
        BasePoly rhs = d.sigma[i].apply(d.t[j]) * d.sigma[k].apply(d.t[j]);
        rep.cons2[{i, j, k}] = lhs == rhs;
      }
  return rep;
}

const char* type_tag_name(TypeTag t) {
  switch (t) {
    case TypeTag::A1n: return "A1n";
    case TypeTag::A2: return "A2";
    case TypeTag::Other: return "other";
    case TypeTag::Unknown: return "unknown";
  }
  return "";
}

namespace {

using Sparse = std::map<Exponent, Scalar, GrLex>;

struct EchelonRow {
  Exponent pivot;
  Sparse v;   // pivot coefficient 1
  Vec comb;   // v as a combination of the original vectors
};

void axpy(Sparse& y, const Scalar& a, const Sparse& x) {
  for (const auto& [e, c] : x) {
    auto it = y.find(e);
    if (it == y.end()) {
      y.emplace(e, -(a * c));
      continue;
    }
    it->second -= a * c;
    if (it->second.is_zero()) y.erase(it);
  }
}

}  // namespace

std::optional<std::vector<Scalar>> orbit_minpoly(const RingAut& a, const BasePoly& f, int bound) {
  if (f.is_zero()) throw Error(ErrorKind::ZeroInput, "orbit of the zero polynomial");
  std::vector<EchelonRow> rows;
  BasePoly cur = f;
  for (int k = 0; k <= bound; ++k) {
    Sparse v(cur.terms().begin(), cur.terms().end());
    Vec comb(k + 1, Scalar(0));
    comb[k] = Scalar(1);
    for (const auto& row : rows) {
      auto it = v.find(row.pivot);
      if (it == v.end()) continue;
      Scalar c = it->second;
      axpy(v, c, row.v);
      for (size_t i = 0; i < row.comb.size(); ++i) comb[i] -= c * row.comb[i];
    }
    if (v.empty()) {
      // sum comb_i x^i annihilates f, with comb_k = 1.
      return comb;
    }
    Exponent piv = v.rbegin()->first;
    Scalar inv = v.rbegin()->second.inverse();
    for (auto& [e, c] : v) c *= inv;
    for (auto& c : comb) c *= inv;
    rows.push_back({piv, std::move(v), std::move(comb)});
    for (auto& row : rows) row.comb.resize(k + 2, Scalar(0));
    cur = a.apply(cur);
  }
  return std::nullopt;
}

std::string minpoly_str(const std::vector<Scalar>& p, const std::string& var) {
  RingPtr r = make_ring({var}, {false}, nullptr);
  BasePoly q(r);
  for (size_t i = 0; i < p.size(); ++i) q += BasePoly::monomial(r, {static_cast<int>(i)}, p[i]);
  return q.str();
}

CartanReport cartan_type(const TGWDatum& d, int bound) {
  const int n = static_cast<int>(d.rank());
  CartanReport rep;
  rep.cartan.assign(n, std::vector<std::optional<int>>(n));
  bool known = true, all_one = true, all_two = true;
  for (int i = 0; i < n; ++i) {
    rep.cartan[i][i] = 2;
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      auto p = orbit_minpoly(d.sigma[i], d.t[j], bound);
      if (!p) {
        rep.vdims[{i, j}] = std::nullopt;
        known = false;
        continue;
      }
      int deg = static_cast<int>(p->size()) - 1;
      rep.vdims[{i, j}] = deg;
      rep.minpolys[{i, j}] = *p;
      rep.cartan[i][j] = 1 - deg;
      all_one = all_one && deg == 1;
      all_two = all_two && deg == 2;
    }
  }
  if (!known) {
    rep.tag = TypeTag::Unknown;
  } else if (all_one) {
    rep.tag = TypeTag::A1n;
    rep.gamma = zero_matrix(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        rep.gamma[i][j] = i == j ? Scalar(1) : -rep.minpolys[{i, j}][0];
  } else if (n == 2 && all_two) {
    rep.tag = TypeTag::A2;
    rep.lambda1 = rep.minpolys[{0, 1}][1];
    rep.lambda2 = rep.minpolys[{0, 1}][0];
    rep.eta1 = rep.minpolys[{1, 0}][1];
    rep.eta2 = rep.minpolys[{1, 0}][0];
  } else {
    rep.tag = TypeTag::Other;
  }
  return rep;
}

namespace {

BasePoly embed(const BasePoly& p, const RingPtr& target, size_t offset) {
  BasePoly out(target);
  for (const auto& [e, c] : p.terms()) {
    Exponent ne(target->nvars(), 0);
    for (size_t j = 0; j < e.size(); ++j) ne[offset + j] = e[j];
    out += BasePoly::monomial(target, ne, c);
  }
  return out;
}

RingAut embed_aut(const RingAut& a, const RingPtr& target, size_t offset) {
  const size_t m = target->nvars(), k = a.ring()->nvars();
  Mat mat = identity_matrix(m);
  Vec off(m, Scalar(0));
  for (size_t j = 0; j < k; ++j) {
    off[offset + j] = a.offset()[j];
    for (size_t l = 0; l < k; ++l) mat[offset + j][offset + l] = a.matrix()[j][l];
  }
  return RingAut(target, std::move(mat), std::move(off));
}

}  // namespace

TGWDatum tensor_data(const TGWDatum& a, const TGWDatum& b) {
  FieldPtr f = a.ring->field;
  if (!f) f = b.ring->field;
  else if (b.ring->field && b.ring->field != f)
    throw Error(ErrorKind::FieldMismatch, "tensor factors over different fields");
  std::vector<std::string> names = a.ring->vars;
  names.insert(names.end(), b.ring->vars.begin(), b.ring->vars.end());
  std::set<std::string> uniq(names.begin(), names.end());
  if (uniq.size() != names.size())
    for (size_t j = 0; j < names.size(); ++j) names[j] = "h" + std::to_string(j + 1);
  std::vector<bool> laurent = a.ring->laurent;
  laurent.insert(laurent.end(), b.ring->laurent.begin(), b.ring->laurent.end());
  RingPtr r = make_ring(names, laurent, f);
  const size_t off = a.ring->nvars(), n1 = a.rank(), n = a.rank() + b.rank();
  std::vector<RingAut> sigma;
  std::vector<BasePoly> t;
  for (size_t i = 0; i < n1; ++i) {
    sigma.push_back(embed_aut(a.sigma[i], r, 0));
    t.push_back(embed(a.t[i], r, 0));
  }
  for (size_t i = 0; i < b.rank(); ++i) {
    sigma.push_back(embed_aut(b.sigma[i], r, off));
    t.push_back(embed(b.t[i], r, off));
  }
  Mat mu = zero_matrix(n, n);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) {
      if (i < n1 && j < n1) mu[i][j] = a.mu[i][j];
      else if (i >= n1 && j >= n1) mu[i][j] = b.mu[i - n1][j - n1];
      else mu[i][j] = Scalar(1);
    }
  return make_datum(r, std::move(sigma), std::move(t), std::move(mu));
}

TGWDatum lift_datum(const TGWDatum& d, const FieldPtr& field) {
  RingPtr r = ring_over(d.ring, field);
  TGWDatum out{r, {}, {}, d.mu};
  for (const auto& s : d.sigma) out.sigma.push_back(lift(s, r));
  for (const auto& t : d.t) out.t.push_back(lift(t, r));
  for (auto& row : out.mu)
    for (auto& x : row) x = lift(x, field);
  return out;
}

}  // namespace tgwa
