#pragma once

#include <map>
#include <optional>
#include <tuple>
#include <utility>
#include <vector>

#include "tgwa/basering.hpp"

namespace tgwa {

struct TGWDatum {
  RingPtr ring;
  std::vector<RingAut> sigma;
  std::vector<BasePoly> t;
  Mat mu;  // diagonal ignored

  size_t rank() const { return sigma.size(); }
  // sigma_1^{d_1} ... sigma_n^{d_n}.
  RingAut sigma_power(const std::vector<int>& d) const;
};

// Sizes, nonzero t and mu, pairwise commuting sigma.
TGWDatum make_datum(RingPtr ring, std::vector<RingAut> sigma, std::vector<BasePoly> t, Mat mu);
void check_structure(const TGWDatum& d);
bool same_datum(const TGWDatum& a, const TGWDatum& b);

struct ValidityReport {
  bool regular = true;
  std::map<std::pair<int, int>, bool> cons1;
  std::map<std::tuple<int, int, int>, bool> cons2;
  bool cons1_ok() const;
  bool cons2_ok() const;
  bool overall() const { return regular && cons1_ok() && cons2_ok(); }
};

ValidityReport validate_datum(const TGWDatum& d);

enum class TypeTag { A1n, A2, Other, Unknown };
const char* type_tag_name(TypeTag t);

struct CartanReport {
  // Keys (i, j) with i != j. Absent dimension means the bound was exceeded.
  std::map<std::pair<int, int>, std::optional<int>> vdims;
  // Monic, lowest coefficient first.
  std::map<std::pair<int, int>, std::vector<Scalar>> minpolys;
  std::vector<std::vector<std::optional<int>>> cartan;
  TypeTag tag = TypeTag::Unknown;
  Mat gamma;  // A1n only: sigma_i(t_j) = gamma_ij t_j
  Scalar lambda1, lambda2, eta1, eta2;  // A2 only
};

// Minimal polynomial of a on span{a^k(f)}, from the first forward dependence.
std::optional<std::vector<Scalar>> orbit_minpoly(const RingAut& a, const BasePoly& f, int bound);
CartanReport cartan_type(const TGWDatum& d, int bound = 16);
std::string minpoly_str(const std::vector<Scalar>& p, const std::string& var = "x");

// Factors must share a field (or be rational); see lift_datum.
TGWDatum tensor_data(const TGWDatum& a, const TGWDatum& b);
TGWDatum lift_datum(const TGWDatum& d, const FieldPtr& field);

}  // namespace tgwa
