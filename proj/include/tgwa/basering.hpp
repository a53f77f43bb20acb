#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "tgwa/linalg.hpp"
#include "tgwa/scalar.hpp"

namespace tgwa {

struct Ring {
  std::vector<std::string> vars;
  std::vector<bool> laurent;
  FieldPtr field;

  size_t nvars() const { return vars.size(); }
  int index_of(const std::string& name) const;
  bool operator==(const Ring& o) const;
};

using RingPtr = std::shared_ptr<const Ring>;

RingPtr make_ring(std::vector<std::string> vars, std::vector<bool> laurent, FieldPtr field);
// k[h] in a single variable named h.
RingPtr univariate_ring(FieldPtr field, const std::string& name = "h");
void require_same_ring(const RingPtr& a, const RingPtr& b);
RingPtr ring_over(const RingPtr& r, const FieldPtr& field);

using Exponent = std::vector<int>;

// Graded lex with h1 > h2 > ...; iteration order is ascending.
struct GrLex {
  bool operator()(const Exponent& a, const Exponent& b) const;
};

class BasePoly {
 public:
  using Terms = std::map<Exponent, Scalar, GrLex>;

  BasePoly() = default;
  explicit BasePoly(RingPtr r) : ring_(std::move(r)) {}
  static BasePoly constant(RingPtr r, const Scalar& c);
  static BasePoly variable(RingPtr r, size_t j);
  static BasePoly monomial(RingPtr r, Exponent e, const Scalar& c);

  const RingPtr& ring() const { return ring_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  Scalar constant_term() const;
  Scalar coefficient(const Exponent& e) const;
  // Largest exponent under GrLex; requires nonzero.
  const Exponent& leading_exponent() const;
  const Scalar& leading_coefficient() const;
  int total_degree() const;
  int degree_in(size_t j) const;
  bool is_monomial() const { return terms_.size() == 1; }

  BasePoly operator-() const;
  BasePoly& operator+=(const BasePoly& o);
  BasePoly& operator-=(const BasePoly& o);
  BasePoly& operator*=(const BasePoly& o);
  BasePoly& operator*=(const Scalar& s);
  friend BasePoly operator+(BasePoly a, const BasePoly& b) { return a += b; }
  friend BasePoly operator-(BasePoly a, const BasePoly& b) { return a -= b; }
  friend BasePoly operator*(const BasePoly& a, const BasePoly& b);
  friend BasePoly operator*(BasePoly a, const Scalar& s) { return a *= s; }
  friend BasePoly operator*(const Scalar& s, BasePoly a) { return a *= s; }
  bool operator==(const BasePoly& o) const;
  bool operator!=(const BasePoly& o) const { return !(*this == o); }

  // Negative k only for monomials in Laurent variables.
  BasePoly pow(long k) const;
  Scalar eval(const Vec& point) const;
  // Images live in the target ring; Laurent exponents need monomial images.
  BasePoly substitute(const std::vector<BasePoly>& images) const;
  // Exact division by a nonzero scalar, or by a monomial when Laurent.
  BasePoly divide_exact(const BasePoly& d) const;

  std::string str() const;
  int compare(const BasePoly& o) const;

 private:
  void add_term(const Exponent& e, const Scalar& c);
  RingPtr ring_;
  Terms terms_;
};

struct BasePolyLess {
  bool operator()(const BasePoly& a, const BasePoly& b) const { return a.compare(b) < 0; }
};

// h |-> A h + b, i.e. h_j |-> sum_k A[j][k] h_k + b[j].
class RingAut {
 public:
  RingAut() = default;
  RingAut(RingPtr r, Mat a, Vec b);
  static RingAut identity(RingPtr r);
  static RingAut from_images(RingPtr r, const std::vector<BasePoly>& images);

  const RingPtr& ring() const { return ring_; }
  const Mat& matrix() const { return a_; }
  const Vec& offset() const { return b_; }
  std::vector<BasePoly> images() const;
  std::vector<BasePoly> inverse_images() const;

  BasePoly apply(const BasePoly& f) const;
  RingAut inverse() const;
  RingAut power(long k) const;
  // The point of the ideal a(m_p): A^{-1}(p - b).
  Vec point_action(const Vec& p) const;
  bool is_identity() const;
  // Scaling factors when a is h_j |-> c_j h_j.
  std::optional<Vec> diagonal_scaling() const;
  bool operator==(const RingAut& o) const;
  bool operator!=(const RingAut& o) const { return !(*this == o); }
  std::string str() const;

 private:
  RingPtr ring_;
  Mat a_, ainv_;
  Vec b_;
  bool monomial_ = false;
};

// a after b.
RingAut compose(const RingAut& a, const RingAut& b);
bool commute(const RingAut& a, const RingAut& b);
std::optional<int> aut_order(const RingAut& a, int bound);

void check_point(const RingPtr& r, const Vec& p);
std::string point_str(const Vec& p);

enum class FixedKind { Identity, UnivariateScaling, DiagonalScaling };
const char* fixed_kind_name(FixedKind k);

struct FixedSubring {
  RingPtr ring;
  FixedKind kind = FixedKind::Identity;
  int order = 1;
  Vec scaling;  // c_j; all ones for the identity
  std::vector<BasePoly> generators;
};

FixedSubring fixed_subring(const RingAut& phi, int ell);
bool membership(const FixedSubring& s, const BasePoly& f);

// Coefficients moved into the field of target, which has the same variables.
BasePoly lift(const BasePoly& p, const RingPtr& target);
RingAut lift(const RingAut& a, const RingPtr& target);

}  // namespace tgwa
