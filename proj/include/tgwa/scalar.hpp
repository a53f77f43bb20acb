#pragma once

#include <gmpxx.h>

#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace tgwa {

using Rational = mpq_class;

// Q(zeta_N) presented as Q[x]/Phi_N. Conductors N = 2 mod 4 are folded to N/2,
// so each field has exactly one instance.
class CycloField {
 public:
  static std::shared_ptr<const CycloField> get(int conductor);

  int conductor() const { return n_; }
  int degree() const { return static_cast<int>(mod_.size()) - 1; }
  // Monic Phi_N, lowest coefficient first.
  const std::vector<Rational>& modulus() const { return mod_; }
  // True when a primitive n-th root of unity lies in this field.
  bool contains_root(int n) const;
  void reduce(std::vector<Rational>& c) const;

 private:
  explicit CycloField(int n);
  int n_;
  std::vector<Rational> mod_;
};

using FieldPtr = std::shared_ptr<const CycloField>;

std::vector<Rational> cyclotomic_polynomial(int n);

// Element of a cyclotomic field in the power basis of zeta.
// A null field means the value is rational and combines with any field.
class Scalar {
 public:
  Scalar() = default;
  Scalar(long v) : Scalar(Rational(v)) {}  // NOLINT(google-explicit-constructor)
  Scalar(int v) : Scalar(Rational(v)) {}   // NOLINT(google-explicit-constructor)
  Scalar(const Rational& q);               // NOLINT(google-explicit-constructor)
  Scalar(FieldPtr f, std::vector<Rational> coeffs);

  // e^{2 pi i k / n} inside f.
  static Scalar root_of_unity(const FieldPtr& f, int n, long k = 1);

  const FieldPtr& field() const { return field_; }
  const std::vector<Rational>& coeffs() const { return c_; }
  bool is_zero() const { return c_.empty(); }
  bool is_one() const;
  bool is_rational() const { return c_.size() <= 1; }
  Rational to_rational() const;

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);
  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  bool operator==(const Scalar& o) const;
  bool operator!=(const Scalar& o) const { return !(*this == o); }

  Scalar inverse() const;
  Scalar pow(long k) const;

  // Total order used only for deterministic containers.
  int compare(const Scalar& o) const;

  std::string str() const;

 private:
  void trim();
  static FieldPtr join(const FieldPtr& a, const FieldPtr& b);

  FieldPtr field_;
  std::vector<Rational> c_;
};

struct ScalarLess {
  bool operator()(const Scalar& a, const Scalar& b) const { return a.compare(b) < 0; }
};

// Least k >= 1 with a^k = 1; searched up to 2N, which is exhaustive in Q(zeta_N).
std::optional<int> multiplicative_order(const Scalar& a);

std::string rational_str(const Rational& q);

// Smallest cyclotomic field containing both; null stands for Q.
FieldPtr field_join(const FieldPtr& a, const FieldPtr& b);
// The same number inside a field that contains its own.
Scalar lift(const Scalar& s, const FieldPtr& target);

}  // namespace tgwa
