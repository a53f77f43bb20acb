#include "tgwa/upoly.hpp"

#include "tgwa/error.hpp"

namespace tgwa {

UPoly::UPoly(const Scalar& c) {
  if (!c.is_zero()) c_.push_back(c);
}

UPoly UPoly::from_coeffs(std::vector<Scalar> c) {
  UPoly p;
  p.c_ = std::move(c);
  p.trim();
  return p;
}

UPoly UPoly::x() { return from_coeffs({Scalar(0), Scalar(1)}); }

UPoly UPoly::from_base(const BasePoly& p) {
  if (p.ring() && p.ring()->nvars() != 1)
    throw Error(ErrorKind::InvalidArgument, "univariate polynomial expected");
  std::vector<Scalar> c;
  for (const auto& [e, v] : p.terms()) {
    if (e[0] < 0) throw Error(ErrorKind::InvalidArgument, "negative exponent in univariate polynomial");
    if (static_cast<int>(c.size()) <= e[0]) c.resize(e[0] + 1, Scalar(0));
    c[e[0]] = v;
  }
  return from_coeffs(std::move(c));
}

BasePoly UPoly::to_base(const RingPtr& r) const {
  BasePoly p(r);
  for (size_t i = 0; i < c_.size(); ++i) p += BasePoly::monomial(r, {static_cast<int>(i)}, c_[i]);
  return p;
}

void UPoly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

UPoly UPoly::operator-() const {
  UPoly r = *this;
  for (auto& v : r.c_) v = -v;
  return r;
}

UPoly operator+(const UPoly& a, const UPoly& b) {
  UPoly r = a;
  if (r.c_.size() < b.c_.size()) r.c_.resize(b.c_.size(), Scalar(0));
  for (size_t i = 0; i < b.c_.size(); ++i) r.c_[i] += b.c_[i];
  r.trim();
  return r;
}

UPoly operator-(const UPoly& a, const UPoly& b) { return a + (-b); }

UPoly operator*(const UPoly& a, const UPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Scalar> c(a.c_.size() + b.c_.size() - 1, Scalar(0));
  for (size_t i = 0; i < a.c_.size(); ++i)
    for (size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
  return UPoly::from_coeffs(std::move(c));
}

void UPoly::divmod(const UPoly& a, const UPoly& b, UPoly& q, UPoly& r) {
  if (b.is_zero()) throw Error(ErrorKind::DivisionByZero, "polynomial division by zero");
  r = a;
  std::vector<Scalar> qc(a.degree() >= b.degree() ? a.degree() - b.degree() + 1 : 0, Scalar(0));
  Scalar inv = b.lead().inverse();
  while (!r.is_zero() && r.degree() >= b.degree()) {
    int shift = r.degree() - b.degree();
    Scalar f = r.lead() * inv;
    qc[shift] = f;
    for (int i = 0; i <= b.degree(); ++i) r.c_[shift + i] -= f * b.c_[i];
    r.trim();
  }
  q = from_coeffs(std::move(qc));
}

UPoly UPoly::gcd(UPoly a, UPoly b) {
  while (!b.is_zero()) {
    UPoly q, r;
    divmod(a, b, q, r);
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

UPoly UPoly::monic() const {
  if (is_zero()) return *this;
  Scalar inv = lead().inverse();
  UPoly r = *this;
  for (auto& v : r.c_) v *= inv;
  return r;
}

UPoly UPoly::pow(int k) const {
  UPoly r(Scalar(1));
  for (int i = 0; i < k; ++i) r = r * *this;
  return r;
}

Scalar UPoly::eval(const Scalar& v) const {
  Scalar acc(0);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * v + *it;
  return acc;
}

UPoly UPoly::affine(const Scalar& a, const Scalar& b) const {
  UPoly lin = from_coeffs({b, a});
  UPoly acc;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * lin + UPoly(*it);
  return acc;
}

std::string UPoly::str(const std::string& var) const {
  RingPtr r = make_ring({var}, {false}, nullptr);
  return to_base(r).str();
}

int UPoly::compare(const UPoly& o) const {
  if (c_.size() != o.c_.size()) return c_.size() < o.c_.size() ? -1 : 1;
  for (size_t i = 0; i < c_.size(); ++i) {
    int s = c_[i].compare(o.c_[i]);
    if (s) return s;
  }
  return 0;
}

RatFunc::RatFunc(const UPoly& n) : num_(n), den_(1) {}

RatFunc::RatFunc(const UPoly& n, const UPoly& d) : num_(n), den_(d) {
  if (d.is_zero()) throw Error(ErrorKind::DivisionByZero, "rational function with zero denominator");
  normalize();
}

void RatFunc::normalize() {
  if (num_.is_zero()) {
    den_ = UPoly(1);
    return;
  }
  UPoly g = UPoly::gcd(num_, den_);
  UPoly q, r;
  if (g.degree() > 0) {
    UPoly::divmod(num_, g, q, r);
    num_ = q;
    UPoly::divmod(den_, g, q, r);
    den_ = q;
  }
  Scalar l = den_.lead();
  if (!l.is_one()) {
    Scalar inv = l.inverse();
    num_ = num_ * UPoly(inv);
    den_ = den_ * UPoly(inv);
  }
}

RatFunc RatFunc::operator-() const {
  RatFunc r = *this;
  r.num_ = -r.num_;
  return r;
}

RatFunc operator+(const RatFunc& a, const RatFunc& b) {
  if (a.den_ == b.den_) return RatFunc(a.num_ + b.num_, a.den_);
  return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }

RatFunc operator*(const RatFunc& a, const RatFunc& b) {
  if (a.is_zero() || b.is_zero()) return RatFunc();
  return RatFunc(a.num_ * b.num_, a.den_ * b.den_);
}

RatFunc operator/(const RatFunc& a, const RatFunc& b) {
  if (b.is_zero()) throw Error(ErrorKind::DivisionByZero, "rational function division by zero");
  return RatFunc(a.num_ * b.den_, a.den_ * b.num_);
}

RatFunc RatFunc::pow(int k) const {
  if (k < 0) return RatFunc(1) / pow(-k);
  return RatFunc(num_.pow(k), den_.pow(k));
}

RatFunc RatFunc::affine(const Scalar& a, const Scalar& b) const {
  return RatFunc(num_.affine(a, b), den_.affine(a, b));
}

std::string RatFunc::str(const std::string& var) const {
  if (den_.degree() == 0) return num_.str(var);
  std::string n = num_.str(var), d = den_.str(var);
  if (num_.coeffs().size() > 1) n = "(" + n + ")";
  return n + "/(" + d + ")";
}

}  // namespace tgwa
