#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "tgwa/datum.hpp"
#include "tgwa/diagonal_aut.hpp"

namespace tgwa {

using Degree = std::vector<int>;

class A1nProfile {
 public:
  A1nProfile(TGWDatum d, Mat gamma);
  const TGWDatum& datum() const { return d_; }
  const Mat& gamma() const { return gamma_; }
  size_t rank() const { return d_.rank(); }
  const RingPtr& ring() const { return d_.ring; }

  // X_j^+ X_k^+ = plus_swap(j,k) X_k^+ X_j^+, and similarly for the other sign pairs.
  const Scalar& plus_swap(size_t j, size_t k) const { return pp_[j][k]; }
  const Scalar& minus_swap(size_t j, size_t k) const { return mm_[j][k]; }
  const Scalar& plus_minus(size_t j, size_t k) const { return d_.mu[j][k]; }
  const Scalar& minus_plus(size_t j, size_t k) const { return mp_[j][k]; }

  BasePoly sigma_apply(const Degree& d, const BasePoly& f) const;
  // sigma^d(t_k), memoized.
  const BasePoly& shifted_t(size_t k, const Degree& d) const;

 private:
  const RingAut& sigma_power(const Degree& d) const;
  TGWDatum d_;
  Mat gamma_, pp_, mm_, mp_;
  mutable std::mutex mu_;
  mutable std::map<Degree, RingAut> pow_cache_;
  mutable std::map<std::pair<size_t, Degree>, BasePoly> t_cache_;
};

using ProfilePtr = std::shared_ptr<const A1nProfile>;

ProfilePtr from_datum(const TGWDatum& d, int bound = 16);

// Sum of r_d Z^d with r_d on the left; Z^d is the minus block then the plus block, each ascending.
class AlgebraElement {
 public:
  using Terms = std::map<Degree, BasePoly>;

  explicit AlgebraElement(ProfilePtr p) : p_(std::move(p)) {}
  static AlgebraElement from_ring(ProfilePtr p, const BasePoly& r);
  static AlgebraElement monomial(ProfilePtr p, Degree d, const BasePoly& r);
  static AlgebraElement generator(ProfilePtr p, size_t i, int sign);

  const ProfilePtr& profile() const { return p_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  AlgebraElement pow(int k) const;

  AlgebraElement operator-() const;
  AlgebraElement& operator+=(const AlgebraElement& o);
  AlgebraElement& operator-=(const AlgebraElement& o);
  friend AlgebraElement operator+(AlgebraElement a, const AlgebraElement& b) { return a += b; }
  friend AlgebraElement operator-(AlgebraElement a, const AlgebraElement& b) { return a -= b; }
  friend AlgebraElement operator*(const AlgebraElement& a, const AlgebraElement& b);
  friend AlgebraElement operator*(const Scalar& s, AlgebraElement a);
  bool operator==(const AlgebraElement& o) const;
  bool operator!=(const AlgebraElement& o) const { return !(*this == o); }

  std::string str() const;

 private:
  void add(const Degree& d, const BasePoly& r);
  ProfilePtr p_;
  Terms terms_;
};

AlgebraElement multiply(const AlgebraElement& a, const AlgebraElement& b);
std::string monomial_word(const Degree& d, size_t rank);

struct Token {
  bool letter = true;
  int index = 0;  // 0-based
  int sign = 1;
  BasePoly r;
};

Token letter(size_t i, int sign);
Token ring_token(const BasePoly& r);
AlgebraElement normal_form(const ProfilePtr& p, const std::vector<Token>& word);
// Whitespace-separated tokens: X1+, X2-, X+ (rank 1), or polynomial expressions.
std::vector<Token> parse_word(const ProfilePtr& p, const std::string& text);
std::string word_str(const std::vector<Token>& word, size_t rank);

AlgebraElement phi_action(const AlgebraElement& x, const DiagonalAut& a);

// Every single defining rewrite (either orientation) applied to every length-3 letter word
// yields the same canonical form as the word itself. Returns offending words.
std::vector<std::string> diamond_check(const ProfilePtr& p);

struct OreRelation {
  std::string label;
  AlgebraElement lhs;
  AlgebraElement rhs;
  bool holds() const { return lhs == rhs; }
};

struct OreStep {
  std::string generator;
  std::string on_R;  // automorphism images
  // earlier generator -> (twist image, derivation image)
  std::vector<std::tuple<std::string, std::string, std::string>> extension;
};

struct OrePresentation {
  std::vector<OreStep> plus_steps;
  std::vector<OreStep> minus_steps;
  std::vector<std::string> quotient_relations;
  std::vector<OreRelation> relations;
  bool verified() const;
};

OrePresentation ore_presentation(const ProfilePtr& p);

}  // namespace tgwa
