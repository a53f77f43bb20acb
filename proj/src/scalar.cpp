#include "tgwa/scalar.hpp"

#include <map>
#include <mutex>
#include <numeric>

#include "tgwa/error.hpp"

namespace tgwa {

namespace {

using QPoly = std::vector<Rational>;

void qtrim(QPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

// Quotient and remainder of a by nonzero b.
void qdivmod(QPoly a, const QPoly& b, QPoly& quo, QPoly& rem) {
  qtrim(a);
  quo.assign(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, Rational(0));
  const Rational& lead = b.back();
  while (a.size() >= b.size() && !a.empty()) {
    size_t shift = a.size() - b.size();
    Rational f = a.back() / lead;
    quo[shift] = f;
    for (size_t i = 0; i < b.size(); ++i) a[shift + i] -= f * b[i];
    qtrim(a);
  }
  qtrim(quo);
  rem = std::move(a);
}

QPoly qmul(const QPoly& a, const QPoly& b) {
  if (a.empty() || b.empty()) return {};
  QPoly r(a.size() + b.size() - 1, Rational(0));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  return r;
}

QPoly qsub(QPoly a, const QPoly& b) {
  if (a.size() < b.size()) a.resize(b.size(), Rational(0));
  for (size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
  qtrim(a);
  return a;
}

}  // namespace

std::vector<Rational> cyclotomic_polynomial(int n) {
  if (n < 1) throw Error(ErrorKind::InvalidArgument, "conductor must be positive");
  QPoly p(n + 1, Rational(0));
  p[0] = -1;
  p[n] = 1;
  for (int d = 1; d < n; ++d) {
    if (n % d) continue;
    QPoly q, r;
    qdivmod(p, cyclotomic_polynomial(d), q, r);
    p = q;
  }
  return p;
}

CycloField::CycloField(int n) : n_(n), mod_(cyclotomic_polynomial(n)) {}

std::shared_ptr<const CycloField> CycloField::get(int conductor) {
  if (conductor < 1) throw Error(ErrorKind::InvalidArgument, "conductor must be positive");
  if (conductor % 4 == 2) conductor /= 2;
  static std::mutex m;
  static std::map<int, std::shared_ptr<const CycloField>> cache;
  std::lock_guard<std::mutex> lock(m);
  auto it = cache.find(conductor);
  if (it != cache.end()) return it->second;
  auto f = std::shared_ptr<const CycloField>(new CycloField(conductor));
  cache.emplace(conductor, f);
  return f;
}

bool CycloField::contains_root(int n) const {
  if (n < 1) return false;
  if (n_ % n == 0) return true;
  return n_ % 2 == 1 && (2 * n_) % n == 0;
}

void CycloField::reduce(std::vector<Rational>& c) const {
  const int d = degree();
  for (int i = static_cast<int>(c.size()) - 1; i >= d; --i) {
    if (c[i] == 0) continue;
    Rational f = c[i];
    for (int j = 0; j <= d; ++j) c[i - d + j] -= f * mod_[j];
  }
  if (static_cast<int>(c.size()) > d) c.resize(d);
  qtrim(c);
}

Scalar::Scalar(const Rational& q) {
  if (q != 0) {
    c_.push_back(q);
    c_.back().canonicalize();
  }
}

Scalar::Scalar(FieldPtr f, std::vector<Rational> coeffs) : field_(std::move(f)), c_(std::move(coeffs)) {
  for (auto& x : c_) x.canonicalize();
  if (field_) field_->reduce(c_);
  trim();
}

void Scalar::trim() { qtrim(c_); }

Scalar Scalar::root_of_unity(const FieldPtr& f, int n, long k) {
  if (n == 1) return Scalar(1);
  if (n == 2) return Scalar(k % 2 == 0 ? 1 : -1);
  if (!f || !f->contains_root(n))
    throw Error(ErrorKind::FieldMismatch,
                "zeta(" + std::to_string(n) + ") is not in the working field");
  const int m = f->conductor();
  Scalar base;
  if (m % n == 0) {
    std::vector<Rational> x(2, Rational(0));
    x[1] = 1;
    base = Scalar(f, x).pow(m / n);
  } else {
    // zeta_{2m} = -zeta_m^{(m+1)/2} for odd m.
    std::vector<Rational> x(2, Rational(0));
    x[1] = 1;
    Scalar z2m = -Scalar(f, x).pow((m + 1) / 2);
    base = z2m.pow(2 * m / n);
  }
  long e = ((k % n) + n) % n;
  return base.pow(e);
}

bool Scalar::is_one() const { return c_.size() == 1 && c_[0] == 1; }

Rational Scalar::to_rational() const {
  if (!is_rational()) throw Error(ErrorKind::InvalidArgument, "scalar " + str() + " is not rational");
  return c_.empty() ? Rational(0) : c_[0];
}

FieldPtr Scalar::join(const FieldPtr& a, const FieldPtr& b) {
  if (!a) return b;
  if (!b || a == b) return a;
  throw Error(ErrorKind::FieldMismatch, "scalars from Q(zeta_" + std::to_string(a->conductor()) +
                                            ") and Q(zeta_" + std::to_string(b->conductor()) + ")");
}

Scalar Scalar::operator-() const {
  Scalar r = *this;
  for (auto& v : r.c_) v = -v;
  return r;
}

Scalar& Scalar::operator+=(const Scalar& o) {
  if (!is_rational() || !o.is_rational()) field_ = join(is_rational() ? nullptr : field_, o.is_rational() ? nullptr : o.field_);
  else if (!field_) field_ = o.field_;
  if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), Rational(0));
  for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) { return *this += -o; }

Scalar& Scalar::operator*=(const Scalar& o) {
  if (is_rational() && o.is_rational()) {
    if (!field_) field_ = o.field_;
    if (c_.empty() || o.c_.empty()) c_.clear();
    else c_[0] *= o.c_[0];
    return *this;
  }
  FieldPtr f = join(is_rational() ? nullptr : field_, o.is_rational() ? nullptr : o.field_);
  if (is_rational() || o.is_rational()) {
    Rational k = is_rational() ? to_rational() : o.to_rational();
    std::vector<Rational> base = is_rational() ? o.c_ : c_;
    for (auto& v : base) v *= k;
    c_ = std::move(base);
    field_ = f;
    trim();
    return *this;
  }
  c_ = qmul(c_, o.c_);
  field_ = f;
  field_->reduce(c_);
  return *this;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw Error(ErrorKind::DivisionByZero, "inverse of zero scalar");
  if (is_rational()) {
    Scalar r(1 / c_[0]);
    r.field_ = field_;
    return r;
  }
  // Extended Euclid: find u with c * u = 1 mod Phi.
  QPoly r0 = field_->modulus(), r1 = c_;
  QPoly s0, s1{Rational(1)};
  while (!r1.empty()) {
    QPoly q, r;
    qdivmod(r0, r1, q, r);
    QPoly s = qsub(s0, qmul(q, s1));
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s);
  }
  // r0 is a nonzero constant since Phi is irreducible.
  Rational g = r0[0];
  for (auto& v : s0) v /= g;
  return Scalar(field_, s0);
}

Scalar& Scalar::operator/=(const Scalar& o) { return *this *= o.inverse(); }

Scalar Scalar::pow(long k) const {
  if (k < 0) return inverse().pow(-k);
  Scalar result(1);
  result.field_ = field_;
  Scalar base = *this;
  while (k > 0) {
    if (k & 1) result *= base;
    k >>= 1;
    if (k) base *= base;
  }
  return result;
}

bool Scalar::operator==(const Scalar& o) const {
  if (c_ != o.c_) return false;
  if (is_rational()) return true;
  if (field_ != o.field_) throw Error(ErrorKind::FieldMismatch, "comparing scalars of different fields");
  return true;
}

int Scalar::compare(const Scalar& o) const {
  if (c_.size() != o.c_.size()) return c_.size() < o.c_.size() ? -1 : 1;
  for (size_t i = 0; i < c_.size(); ++i) {
    int s = cmp(c_[i], o.c_[i]);
    if (s) return s < 0 ? -1 : 1;
  }
  return 0;
}

std::string rational_str(const Rational& q) { return q.get_str(); }

std::string Scalar::str() const {
  if (c_.empty()) return "0";
  if (is_rational()) return rational_str(c_[0]);
  std::string out;
  const std::string z = "zeta(" + std::to_string(field_->conductor()) + ")";
  for (size_t k = 0; k < c_.size(); ++k) {
    if (c_[k] == 0) continue;
    Rational v = c_[k];
    bool neg = v < 0;
    if (neg) v = -v;
    if (out.empty()) out += neg ? "-" : "";
    else out += neg ? " - " : " + ";
    if (k == 0) {
      out += rational_str(v);
      continue;
    }
    if (v != 1) out += rational_str(v) + "*";
    out += z;
    if (k > 1) out += "^" + std::to_string(k);
  }
  return out;
}

std::optional<int> multiplicative_order(const Scalar& a) {
  if (a.is_zero()) throw Error(ErrorKind::ZeroInput, "order of zero");
  const int n = a.field() ? a.field()->conductor() : 1;
  Scalar p = a;
  for (int k = 1; k <= 2 * n; ++k) {
    if (p.is_one()) return k;
    p *= a;
  }
  return std::nullopt;
}

FieldPtr field_join(const FieldPtr& a, const FieldPtr& b) {
  if (!a || a->conductor() == 1) return b;
  if (!b || b->conductor() == 1 || a == b) return a;
  return CycloField::get(std::lcm(a->conductor(), b->conductor()));
}

Scalar lift(const Scalar& s, const FieldPtr& target) {
  if (s.is_rational() || s.field() == target) return s;
  const int n = s.field()->conductor();
  if (!target || !target->contains_root(n))
    throw Error(ErrorKind::FieldMismatch, "Q(zeta_" + std::to_string(n) + ") does not embed in the target field");
  const Scalar z = Scalar::root_of_unity(target, n);
  Scalar acc(0);
  const auto& c = s.coeffs();
  for (size_t k = c.size(); k-- > 0;) acc = acc * z + Scalar(c[k]);
  return acc;
}

}  // namespace tgwa
