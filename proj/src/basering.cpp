#include "tgwa/basering.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

#include "tgwa/error.hpp"

namespace tgwa {

int Ring::index_of(const std::string& name) const {
  for (size_t i = 0; i < vars.size(); ++i)
    if (vars[i] == name) return static_cast<int>(i);
  return -1;
}

bool Ring::operator==(const Ring& o) const {
  return vars == o.vars && laurent == o.laurent && field == o.field;
}

RingPtr make_ring(std::vector<std::string> vars, std::vector<bool> laurent, FieldPtr field) {
  if (laurent.empty()) laurent.assign(vars.size(), false);
  if (laurent.size() != vars.size())
    throw Error(ErrorKind::InvalidArgument, "laurent flags do not match variable count");
  return std::make_shared<const Ring>(Ring{std::move(vars), std::move(laurent), std::move(field)});
}

RingPtr univariate_ring(FieldPtr field, const std::string& name) {
  return make_ring({name}, {false}, std::move(field));
}

void require_same_ring(const RingPtr& a, const RingPtr& b) {
  if (!a || !b || a == b) return;
  if (!(*a == *b)) throw Error(ErrorKind::RingMismatch, "operands live in different rings");
}

bool GrLex::operator()(const Exponent& a, const Exponent& b) const {
  int da = std::accumulate(a.begin(), a.end(), 0), db = std::accumulate(b.begin(), b.end(), 0);
  if (da != db) return da < db;
  for (size_t i = 0; i < a.size() && i < b.size(); ++i)
    if (a[i] != b[i]) return a[i] < b[i];
  return a.size() < b.size();
}

BasePoly BasePoly::constant(RingPtr r, const Scalar& c) {
  BasePoly p(r);
  p.add_term(Exponent(r->nvars(), 0), c);
  return p;
}

BasePoly BasePoly::variable(RingPtr r, size_t j) {
  Exponent e(r->nvars(), 0);
  e.at(j) = 1;
  return monomial(std::move(r), std::move(e), Scalar(1));
}

BasePoly BasePoly::monomial(RingPtr r, Exponent e, const Scalar& c) {
  if (e.size() != r->nvars()) throw Error(ErrorKind::InvalidArgument, "exponent length mismatch");
  for (size_t j = 0; j < e.size(); ++j)
    if (e[j] < 0 && !r->laurent[j])
      throw Error(ErrorKind::InvalidArgument, "negative exponent on non-Laurent variable " + r->vars[j]);
  BasePoly p(std::move(r));
  p.add_term(e, c);
  return p;
}

void BasePoly::add_term(const Exponent& e, const Scalar& c) {
  if (c.is_zero()) return;
  auto it = terms_.find(e);
  if (it == terms_.end()) {
    terms_.emplace(e, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

bool BasePoly::is_constant() const {
  if (terms_.empty()) return true;
  if (terms_.size() > 1) return false;
  for (int v : terms_.begin()->first)
    if (v) return false;
  return true;
}

Scalar BasePoly::constant_term() const {
  if (!ring_) return Scalar(0);
  return coefficient(Exponent(ring_->nvars(), 0));
}

Scalar BasePoly::coefficient(const Exponent& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Scalar(0) : it->second;
}

const Exponent& BasePoly::leading_exponent() const {
  if (terms_.empty()) throw Error(ErrorKind::ZeroInput, "leading term of zero polynomial");
  return terms_.rbegin()->first;
}

const Scalar& BasePoly::leading_coefficient() const {
  if (terms_.empty()) throw Error(ErrorKind::ZeroInput, "leading term of zero polynomial");
  return terms_.rbegin()->second;
}

int BasePoly::total_degree() const {
  if (terms_.empty()) return -1;
  int best = std::numeric_limits<int>::min();
  for (const auto& [e, c] : terms_) best = std::max(best, std::accumulate(e.begin(), e.end(), 0));
  return best;
}

int BasePoly::degree_in(size_t j) const {
  int best = -1;
  for (const auto& [e, c] : terms_) best = std::max(best, e[j]);
  return best;
}

BasePoly BasePoly::operator-() const {
  BasePoly r = *this;
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

BasePoly& BasePoly::operator+=(const BasePoly& o) {
  require_same_ring(ring_, o.ring_);
  if (!ring_) ring_ = o.ring_;
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

BasePoly& BasePoly::operator-=(const BasePoly& o) {
  require_same_ring(ring_, o.ring_);
  if (!ring_) ring_ = o.ring_;
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

BasePoly operator*(const BasePoly& a, const BasePoly& b) {
  require_same_ring(a.ring_, b.ring_);
  BasePoly r(a.ring_ ? a.ring_ : b.ring_);
  Exponent e;
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) {
      e = ea;
      for (size_t i = 0; i < e.size(); ++i) e[i] += eb[i];
      r.add_term(e, ca * cb);
    }
  return r;
}

BasePoly& BasePoly::operator*=(const BasePoly& o) { return *this = *this * o; }

BasePoly& BasePoly::operator*=(const Scalar& s) {
  if (s.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, c] : terms_) c *= s;
  return *this;
}

bool BasePoly::operator==(const BasePoly& o) const {
  require_same_ring(ring_, o.ring_);
  if (terms_.size() != o.terms_.size()) return false;
  auto it = o.terms_.begin();
  for (const auto& [e, c] : terms_) {
    if (e != it->first || c != it->second) return false;
    ++it;
  }
  return true;
}

int BasePoly::compare(const BasePoly& o) const {
  if (terms_.size() != o.terms_.size()) return terms_.size() < o.terms_.size() ? -1 : 1;
  GrLex lt;
  auto it = o.terms_.begin();
  for (const auto& [e, c] : terms_) {
    if (lt(e, it->first)) return -1;
    if (lt(it->first, e)) return 1;
    int s = c.compare(it->second);
    if (s) return s;
    ++it;
  }
  return 0;
}

BasePoly BasePoly::pow(long k) const {
  if (k < 0) {
    if (!is_monomial()) throw Error(ErrorKind::InvalidArgument, "negative power of a non-monomial");
    const auto& [e, c] = *terms_.begin();
    Exponent ne(e.size());
    for (size_t i = 0; i < e.size(); ++i) ne[i] = -e[i];
    return monomial(ring_, ne, c.inverse()).pow(-k);
  }
  BasePoly result = constant(ring_, Scalar(1));
  BasePoly base = *this;
  while (k > 0) {
    if (k & 1) result *= base;
    k >>= 1;
    if (k) base *= base;
  }
  return result;
}

Scalar BasePoly::eval(const Vec& point) const {
  if (ring_ && point.size() != ring_->nvars())
    throw Error(ErrorKind::InvalidArgument, "point dimension mismatch");
  Scalar total(0);
  for (const auto& [e, c] : terms_) {
    Scalar v = c;
    for (size_t j = 0; j < e.size(); ++j)
      if (e[j]) v *= point[j].pow(e[j]);
    total += v;
  }
  return total;
}

BasePoly BasePoly::substitute(const std::vector<BasePoly>& images) const {
  if (ring_ && images.size() != ring_->nvars())
    throw Error(ErrorKind::InvalidArgument, "substitution arity mismatch");
  RingPtr target = images.empty() ? ring_ : images[0].ring();
  BasePoly result(target);
  std::vector<std::map<int, BasePoly>> cache(images.size());
  auto power_of = [&](size_t j, int k) -> const BasePoly& {
    auto it = cache[j].find(k);
    if (it != cache[j].end()) return it->second;
    return cache[j].emplace(k, images[j].pow(k)).first->second;
  };
  for (const auto& [e, c] : terms_) {
    BasePoly t = constant(target, c);
    for (size_t j = 0; j < e.size(); ++j)
      if (e[j]) t *= power_of(j, e[j]);
    result += t;
  }
  return result;
}

BasePoly BasePoly::divide_exact(const BasePoly& d) const {
  if (d.is_zero()) throw Error(ErrorKind::DivisionByZero, "polynomial division by zero");
  if (d.is_constant()) return *this * d.constant_term().inverse();
  if (d.is_monomial()) return *this * d.pow(-1);
  throw Error(ErrorKind::InvalidArgument, "division by a non-monomial polynomial");
}

namespace {

std::string monomial_str(const RingPtr& r, const Exponent& e) {
  std::string s;
  for (size_t j = 0; j < e.size(); ++j) {
    if (!e[j]) continue;
    if (!s.empty()) s += "*";
    s += r->vars[j];
    if (e[j] != 1) s += "^" + std::to_string(e[j]);
  }
  return s;
}

}  // namespace

std::string BasePoly::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    std::string mono = monomial_str(ring_, e);
    bool neg = c.is_rational() && c.to_rational() < 0;
    std::string coef;
    if (c.is_rational()) {
      Rational v = c.to_rational();
      if (neg) v = -v;
      if (mono.empty() || v != 1) coef = rational_str(v);
    } else {
      coef = "(" + c.str() + ")";
    }
    std::string term = coef;
    if (!mono.empty()) term += (coef.empty() ? "" : "*") + mono;
    if (out.empty()) out = (neg ? "-" : "") + term;
    else out += (neg ? " - " : " + ") + term;
  }
  return out;
}

RingAut::RingAut(RingPtr r, Mat a, Vec b) : ring_(std::move(r)), a_(std::move(a)), b_(std::move(b)) {
  const size_t m = ring_->nvars();
  if (a_.size() != m || b_.size() != m) throw Error(ErrorKind::InvalidArgument, "affine map size mismatch");
  auto inv = tgwa::inverse(a_);
  if (!inv) throw Error(ErrorKind::SingularAffineMap, "linear part is not invertible");
  ainv_ = *inv;
  monomial_ = true;
  for (size_t j = 0; j < m; ++j) {
    size_t nz = 0, col = 0;
    for (size_t k = 0; k < m; ++k)
      if (!a_[j][k].is_zero()) ++nz, col = k;
    bool mono_row = nz == 1 && b_[j].is_zero();
    if (!mono_row) monomial_ = false;
    if (ring_->laurent[j] && (!mono_row || !ring_->laurent[col]))
      throw Error(ErrorKind::UnsupportedAutomorphismShape,
                  "Laurent variable " + ring_->vars[j] + " must map to a scalar multiple of a Laurent variable");
  }
}

RingAut RingAut::identity(RingPtr r) {
  size_t m = r->nvars();
  return RingAut(r, identity_matrix(m), Vec(m, Scalar(0)));
}

RingAut RingAut::from_images(RingPtr r, const std::vector<BasePoly>& images) {
  const size_t m = r->nvars();
  if (images.size() != m) throw Error(ErrorKind::InvalidArgument, "one image per generator required");
  Mat a = zero_matrix(m, m);
  Vec b(m, Scalar(0));
  for (size_t j = 0; j < m; ++j) {
    require_same_ring(r, images[j].ring());
    for (const auto& [e, c] : images[j].terms()) {
      int deg = 0, var = -1;
      for (size_t k = 0; k < m; ++k) {
        if (e[k] < 0) deg = 99;
        deg += e[k];
        if (e[k]) var = static_cast<int>(k);
      }
      if (deg == 0 && var < 0) b[j] = c;
      else if (deg == 1 && e[var] == 1) a[j][var] = c;
      else
        throw Error(ErrorKind::UnsupportedFeature,
                    "image of " + r->vars[j] + " is not affine: " + images[j].str());
    }
  }
  return RingAut(std::move(r), std::move(a), std::move(b));
}

namespace {

std::vector<BasePoly> affine_images(const RingPtr& r, const Mat& a, const Vec& b) {
  std::vector<BasePoly> out;
  for (size_t j = 0; j < r->nvars(); ++j) {
    BasePoly p = BasePoly::constant(r, b[j]);
    for (size_t k = 0; k < r->nvars(); ++k)
      if (!a[j][k].is_zero()) p += BasePoly::variable(r, k) * a[j][k];
    out.push_back(std::move(p));
  }
  return out;
}

}  // namespace

std::vector<BasePoly> RingAut::images() const { return affine_images(ring_, a_, b_); }

std::vector<BasePoly> RingAut::inverse_images() const { return inverse().images(); }

BasePoly RingAut::apply(const BasePoly& f) const {
  require_same_ring(ring_, f.ring());
  if (f.is_zero()) return BasePoly(ring_);
  if (monomial_) {
    const size_t m = ring_->nvars();
    std::vector<size_t> col(m);
    for (size_t j = 0; j < m; ++j)
      for (size_t k = 0; k < m; ++k)
        if (!a_[j][k].is_zero()) col[j] = k;
    BasePoly out(ring_);
    for (const auto& [e, c] : f.terms()) {
      Exponent ne(m, 0);
      Scalar nc = c;
      for (size_t j = 0; j < m; ++j) {
        if (!e[j]) continue;
        ne[col[j]] += e[j];
        nc *= a_[j][col[j]].pow(e[j]);
      }
      out += BasePoly::monomial(ring_, ne, nc);
    }
    return out;
  }
  return f.substitute(images());
}

RingAut RingAut::inverse() const {
  Vec nb = matvec(ainv_, b_);
  for (auto& v : nb) v = -v;
  return RingAut(ring_, ainv_, nb);
}

RingAut compose(const RingAut& a, const RingAut& b) {
  require_same_ring(a.ring(), b.ring());
  Mat m = matmul(b.matrix(), a.matrix());
  Vec off = matvec(b.matrix(), a.offset());
  for (size_t j = 0; j < off.size(); ++j) off[j] += b.offset()[j];
  return RingAut(a.ring(), std::move(m), std::move(off));
}

RingAut RingAut::power(long k) const {
  if (k < 0) return inverse().power(-k);
  RingAut result = identity(ring_);
  RingAut base = *this;
  while (k > 0) {
    if (k & 1) result = compose(result, base);
    k >>= 1;
    if (k) base = compose(base, base);
  }
  return result;
}

Vec RingAut::point_action(const Vec& p) const {
  if (p.size() != b_.size()) throw Error(ErrorKind::InvalidArgument, "point dimension mismatch");
  Vec d(p.size());
  for (size_t j = 0; j < p.size(); ++j) d[j] = p[j] - b_[j];
  return matvec(ainv_, d);
}

bool RingAut::is_identity() const {
  for (size_t j = 0; j < b_.size(); ++j) {
    if (!b_[j].is_zero()) return false;
    for (size_t k = 0; k < b_.size(); ++k)
      if (a_[j][k] != Scalar(j == k ? 1 : 0)) return false;
  }
  return true;
}

std::optional<Vec> RingAut::diagonal_scaling() const {
  Vec c(b_.size());
  for (size_t j = 0; j < b_.size(); ++j) {
    if (!b_[j].is_zero()) return std::nullopt;
    for (size_t k = 0; k < b_.size(); ++k)
      if (k != j && !a_[j][k].is_zero()) return std::nullopt;
    c[j] = a_[j][j];
  }
  return c;
}

bool RingAut::operator==(const RingAut& o) const {
  require_same_ring(ring_, o.ring_);
  return a_ == o.a_ && b_ == o.b_;
}

std::string RingAut::str() const {
  std::string s;
  auto imgs = images();
  for (size_t j = 0; j < imgs.size(); ++j) {
    if (j) s += ", ";
    s += ring_->vars[j] + " -> " + imgs[j].str();
  }
  return s;
}

bool commute(const RingAut& a, const RingAut& b) { return compose(a, b) == compose(b, a); }

std::optional<int> aut_order(const RingAut& a, int bound) {
  RingAut p = a;
  for (int k = 1; k <= bound; ++k) {
    if (p.is_identity()) return k;
    p = compose(p, a);
  }
  return std::nullopt;
}

void check_point(const RingPtr& r, const Vec& p) {
  if (p.size() != r->nvars()) throw Error(ErrorKind::InvalidArgument, "point dimension mismatch");
  for (size_t j = 0; j < p.size(); ++j)
    if (r->laurent[j] && p[j].is_zero())
      throw Error(ErrorKind::InvalidArgument, "Laurent coordinate " + r->vars[j] + " must be nonzero");
}

std::string point_str(const Vec& p) {
  std::string s = "(";
  for (size_t j = 0; j < p.size(); ++j) s += (j ? ", " : "") + p[j].str();
  return s + ")";
}

const char* fixed_kind_name(FixedKind k) {
  switch (k) {
    case FixedKind::Identity: return "identity";
    case FixedKind::UnivariateScaling: return "univariate-scaling";
    case FixedKind::DiagonalScaling: return "diagonal-scaling";
  }
  return "";
}

namespace {

bool invariant_exponent(const Vec& c, const Exponent& e) {
  Scalar v(1);
  for (size_t j = 0; j < e.size(); ++j)
    if (e[j]) v *= c[j].pow(e[j]);
  return v.is_one();
}

void enumerate(Exponent& cur, size_t j, int left, std::vector<Exponent>& out) {
  if (j == cur.size()) {
    out.push_back(cur);
    return;
  }
  for (int k = 0; k <= left; ++k) {
    cur[j] = k;
    enumerate(cur, j + 1, left - k, out);
  }
  cur[j] = 0;
}

}  // namespace

FixedSubring fixed_subring(const RingAut& phi, int ell) {
  const RingPtr& r = phi.ring();
  const size_t m = r->nvars();
  FixedSubring s;
  s.ring = r;
  s.order = ell;
  if (phi.is_identity()) {
    if (ell != 1) throw Error(ErrorKind::InvalidArgument, "identity has order 1, not " + std::to_string(ell));
    s.kind = FixedKind::Identity;
    s.scaling.assign(m, Scalar(1));
    for (size_t j = 0; j < m; ++j) s.generators.push_back(BasePoly::variable(r, j));
    return s;
  }
  auto diag = phi.diagonal_scaling();
  if (!diag) throw Error(ErrorKind::UnsupportedAutomorphismShape, "phi|R must be the identity or a diagonal scaling");
  for (size_t j = 0; j < m; ++j)
    if (r->laurent[j])
      throw Error(ErrorKind::UnsupportedAutomorphismShape, "scalings on Laurent rings are not supported");
  int order = 1;
  for (const auto& c : *diag) {
    auto o = multiplicative_order(c);
    if (!o) throw Error(ErrorKind::InfiniteOrder, "scaling factor " + c.str() + " is not a root of unity");
    order = std::lcm(order, *o);
  }
  if (order != ell)
    throw Error(ErrorKind::InvalidArgument,
                "phi|R has order " + std::to_string(order) + ", not " + std::to_string(ell));
  s.scaling = *diag;
  s.kind = m == 1 ? FixedKind::UnivariateScaling : FixedKind::DiagonalScaling;
  std::vector<Exponent> all, inv;
  Exponent cur(m, 0);
  enumerate(cur, 0, ell, all);
  for (const auto& e : all) {
    if (std::accumulate(e.begin(), e.end(), 0) == 0) continue;
    if (invariant_exponent(s.scaling, e)) inv.push_back(e);
  }
  std::sort(inv.begin(), inv.end(), GrLex());
  for (const auto& e : inv) {
    bool decomposable = false;
    for (const auto& f : inv) {
      if (f == e) continue;
      bool below = true;
      for (size_t j = 0; j < m; ++j) below = below && f[j] <= e[j];
      if (below) {
        decomposable = true;
        break;
      }
    }
    if (!decomposable) s.generators.push_back(BasePoly::monomial(r, e, Scalar(1)));
  }
  return s;
}

bool membership(const FixedSubring& s, const BasePoly& f) {
  require_same_ring(s.ring, f.ring());
  for (const auto& [e, c] : f.terms())
    if (!invariant_exponent(s.scaling, e)) return false;
  return true;
}

RingPtr ring_over(const RingPtr& r, const FieldPtr& field) {
  if (r->field == field) return r;
  return make_ring(r->vars, r->laurent, field);
}

BasePoly lift(const BasePoly& p, const RingPtr& target) {
  if (target->vars != p.ring()->vars || target->laurent != p.ring()->laurent)
    throw Error(ErrorKind::RingMismatch, "lift needs the same variables");
  BasePoly out(target);
  for (const auto& [e, c] : p.terms()) out += BasePoly::monomial(target, e, lift(c, target->field));
  return out;
}

RingAut lift(const RingAut& a, const RingPtr& target) {
  Mat m = a.matrix();
  Vec b = a.offset();
  for (auto& row : m)
    for (auto& x : row) x = lift(x, target->field);
  for (auto& x : b) x = lift(x, target->field);
  if (target->vars != a.ring()->vars) throw Error(ErrorKind::RingMismatch, "lift needs the same variables");
  return RingAut(target, std::move(m), std::move(b));
}

}  // namespace tgwa
