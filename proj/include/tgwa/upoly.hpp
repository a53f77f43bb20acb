#pragma once

#include <string>
#include <vector>

#include "tgwa/basering.hpp"
#include "tgwa/scalar.hpp"

namespace tgwa {

// Dense univariate polynomial, lowest coefficient first, no trailing zeros.
class UPoly {
 public:
  UPoly() = default;
  UPoly(const Scalar& c);  // NOLINT(google-explicit-constructor)
  UPoly(int c) : UPoly(Scalar(c)) {}  // NOLINT(google-explicit-constructor)
  static UPoly from_coeffs(std::vector<Scalar> c);
  static UPoly x();
  static UPoly from_base(const BasePoly& p);
  BasePoly to_base(const RingPtr& r) const;

  const std::vector<Scalar>& coeffs() const { return c_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  Scalar lead() const { return c_.empty() ? Scalar(0) : c_.back(); }
  Scalar coeff(int i) const { return i < static_cast<int>(c_.size()) ? c_[i] : Scalar(0); }

  UPoly operator-() const;
  friend UPoly operator+(const UPoly& a, const UPoly& b);
  friend UPoly operator-(const UPoly& a, const UPoly& b);
  friend UPoly operator*(const UPoly& a, const UPoly& b);
  bool operator==(const UPoly& o) const { return c_ == o.c_; }
  bool operator!=(const UPoly& o) const { return !(*this == o); }

  static void divmod(const UPoly& a, const UPoly& b, UPoly& q, UPoly& r);
  static UPoly gcd(UPoly a, UPoly b);
  UPoly monic() const;
  UPoly pow(int k) const;
  Scalar eval(const Scalar& v) const;
  // f(a*h + b).
  UPoly affine(const Scalar& a, const Scalar& b) const;

  std::string str(const std::string& var = "h") const;
  int compare(const UPoly& o) const;

 private:
  void trim();
  std::vector<Scalar> c_;
};

// num/den with gcd 1 and monic den.
class RatFunc {
 public:
  RatFunc() : den_(1) {}
  RatFunc(const UPoly& n);  // NOLINT(google-explicit-constructor)
  RatFunc(const Scalar& c) : RatFunc(UPoly(c)) {}  // NOLINT(google-explicit-constructor)
  RatFunc(int c) : RatFunc(UPoly(c)) {}  // NOLINT(google-explicit-constructor)
  RatFunc(const UPoly& n, const UPoly& d);

  const UPoly& num() const { return num_; }
  const UPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  RatFunc operator-() const;
  friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator-(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator/(const RatFunc& a, const RatFunc& b);
  RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
  RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }
  bool operator==(const RatFunc& o) const { return num_ == o.num_ && den_ == o.den_; }
  bool operator!=(const RatFunc& o) const { return !(*this == o); }

  RatFunc pow(int k) const;
  RatFunc affine(const Scalar& a, const Scalar& b) const;
  std::string str(const std::string& var = "h") const;

 private:
  void normalize();
  UPoly num_, den_;
};

}  // namespace tgwa
