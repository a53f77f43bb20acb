#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tgwa/datum.hpp"
#include "tgwa/upoly.hpp"

namespace tgwa {

// p12(x) = x^2 + lambda1 x + lambda2, p21(x) = x^2 + eta1 x + eta2.
struct A2Profile {
  TGWDatum datum;
  Scalar lambda1, lambda2, eta1, eta2;
};

// Throws ProfileMismatch unless cartan_type tags the datum A2.
A2Profile a2_profile(const TGWDatum& d, int bound = 16);

// S_0 = 1, S_1 = q, S_{a+1} = q S_a - beta S_{a-1}.
Scalar s_poly(int a, const Scalar& q, const Scalar& beta);
// S_0, ..., S_{a_max}.
std::vector<Scalar> s_sequence(int a_max, const Scalar& q, const Scalar& beta);
// sum_i (-1)^i binom(a-i, i) beta^i q^{a-2i}.
Scalar s_poly_closed(int a, const Scalar& q, const Scalar& beta);
// beta S_{c-2} S_{a-1} + S_{a+c-1} = S_a S_{c-1}; needs a >= 1, c >= 2.
bool s_identity_check(int a, int c, const Scalar& q, const Scalar& beta);
// S_a^2 = beta^a U_a(q / (2 sqrt beta))^2, with U_a^2 written in x^2 = q^2 / (4 beta).
bool chebyshev_check(int a, const Scalar& q, const Scalar& beta);

struct SNonvanishing {
  enum class Kind { ProvenAllNonzero, NonzeroUpTo, ZeroAt };
  Kind kind = Kind::NonzeroUpTo;
  int a = 0;  // a_max for NonzeroUpTo, the first zero for ZeroAt
  std::string str() const;
};

// Whether S_a(-lambda1, lambda2) vanishes for some a >= 0.
SNonvanishing s_nonvanishing(const Scalar& lambda1, const Scalar& lambda2, int a_max);

// x^a y x^c = first x^{a+c} y + second y x^{a+c} under x^2y - qxyx + beta yx^2 = 0.
std::pair<Scalar, Scalar> rewrite_coeffs(int a, int c, const Scalar& q, const Scalar& beta);

// Rank-2 datum over k[h] with affine sigma_i, read inside A (x)_{k[h]} k(h).
class FiberProfile {
 public:
  explicit FiberProfile(const TGWDatum& d);
  // sigma_1(h) = h - 1, sigma_2(h) = h + 1, t = (h, h - 1), mu = 1.
  static std::shared_ptr<const FiberProfile> standard();

  const TGWDatum& datum() const { return d_; }
  const UPoly& t(int i) const { return t_[i]; }
  const Scalar& mu(int i, int j) const { return d_.mu[i][j]; }
  // sigma_i^k(f).
  RatFunc shift(int i, int k, const RatFunc& f) const;
  // sigma_1^{d1} sigma_2^{d2}(f).
  RatFunc shift2(int d1, int d2, const RatFunc& f) const;
  bool sigmas_inverse() const;  // sigma_1 sigma_2 = id

  // X_1^{s1} X_2^{s2} = X_2^{s2} X_1^{s1} rho(s1, s2) for signs s1, s2.
  RatFunc rho(int s1, int s2) const;
  // E(d) E(e) = E(d + e) c.
  RatFunc monomial_product(std::pair<int, int> d, std::pair<int, int> e) const;

 private:
  // E(d) X_i^s = E(d') c.
  std::pair<std::pair<int, int>, RatFunc> right_letter(std::pair<int, int> d, int i, int s) const;
  // X_1^k X_2^s = X_2^s X_1^k c.
  RatFunc exchange(int k, int s) const;

  TGWDatum d_;
  Scalar a_[2], b_[2];
  UPoly t_[2];
  RatFunc rho_[2][2];
  mutable std::mutex m_;
  mutable std::map<std::pair<int, int>, std::pair<Scalar, Scalar>> pow_cache_;
  mutable std::map<std::pair<std::pair<int, int>, std::pair<int, int>>, RatFunc> prod_cache_;
};

using FiberPtr = std::shared_ptr<const FiberProfile>;

// Sum of E(d) f_d with f_d on the right; E(d) is the X_2-part then the X_1-part.
class FiberElement {
 public:
  using Key = std::pair<int, int>;  // (d1, d2)
  using Terms = std::map<Key, RatFunc>;

  explicit FiberElement(FiberPtr p) : p_(std::move(p)) {}
  static FiberElement monomial(FiberPtr p, int d1, int d2, const RatFunc& f = RatFunc(1));
  static FiberElement generator(FiberPtr p, int i, int sign);
  static FiberElement scalar(FiberPtr p, const RatFunc& f);

  const FiberPtr& profile() const { return p_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  FiberElement pow(int k) const;

  FiberElement operator-() const;
  FiberElement& operator+=(const FiberElement& o);
  FiberElement& operator-=(const FiberElement& o);
  friend FiberElement operator+(FiberElement a, const FiberElement& b) { return a += b; }
  friend FiberElement operator-(FiberElement a, const FiberElement& b) { return a -= b; }
  friend FiberElement operator*(const FiberElement& a, const FiberElement& b);
  friend FiberElement operator*(const FiberElement& a, const RatFunc& f);
  bool operator==(const FiberElement& o) const;
  bool operator!=(const FiberElement& o) const { return !(*this == o); }

  std::string str() const;

 private:
  void add(const Key& d, const RatFunc& f);
  FiberPtr p_;
  Terms terms_;
};

FiberElement fiber_multiply(const FiberElement& x, const FiberElement& y);
// Whitespace-separated tokens: X1+, X2-^3, or rational functions in h; the product.
FiberElement parse_fiber_word(const FiberPtr& p, const std::string& text);

// X_2^+ X_1^+ / t_1; needs sigma_1 sigma_2 = id.
FiberElement c_element(const FiberPtr& p);
// E(k, k) / prod_{j<k} sigma_1^{-j}(t_1).
FiberElement c_closed_form(const FiberPtr& p, int k);

struct CPowerReport {
  FiberElement power;
  FiberElement closed_form;
  bool closed_form_ok = false;
  // (X_2^+)^m (X_1^+)^m / s_1 with s_1 from the fixed datum of alpha = (zeta(m), 1).
  std::optional<FiberElement> c_phi;
  bool c_phi_ok = true;
};

CPowerReport c_power(const FiberPtr& p, int k, std::optional<int> m = std::nullopt);

}  // namespace tgwa
