#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tgwa/datum.hpp"
#include "tgwa/diagonal_aut.hpp"

namespace tgwa {

struct HypothesisReport {
  bool consistent = false;       // input is mu-consistent
  bool ell_finite = false;
  bool orders_finite = false;
  bool coprime = false;          // ell, m_1..m_n pairwise
  bool domain = true;            // polynomial rings are commutative domains
  bool commutes = false;         // phi sigma_i = sigma_i phi on R
  bool fixes_t = false;          // phi(t_i) = t_i
  bool shape_supported = false;  // phi|R is the identity or a diagonal scaling
  bool ok() const;
  std::vector<std::pair<std::string, bool>> items() const;
};

HypothesisReport validate_hypothesis(const TGWDatum& d, const DiagonalAut& a);
// alpha_1 = 1 or alpha_2 = 1.
bool hypothesis_a2(const DiagonalAut& a);

// The datum (R^phi, tau, s, nu) is stored over the ambient ring R; subring records R^phi.
struct FixedRingResult {
  TGWDatum datum;
  FixedSubring subring;
  std::vector<int> m;
  ValidityReport validity;
  CartanReport cartan;
  bool s_invariant = false;     // every s_i lies in R^phi
  bool tau_preserves = false;   // tau_i maps R^phi into itself
  bool regular_inherited = false;
  bool cons1_inherited = false;  // holds whenever the input satisfies cons1
  bool cons2_vacuous = false;    // rank <= 2
  std::string label;             // "A^phi" or "fixed-subalgebra datum"
  // Datum over the generators of R^phi when they are algebraically independent.
  std::optional<TGWDatum> presentation;
};

FixedRingResult fixed_datum(const TGWDatum& d, const DiagonalAut& a, int bound = 64);

struct FixedTypeReport {
  TypeTag input_tag = TypeTag::Unknown;
  TypeTag output_tag = TypeTag::Unknown;
  bool a1n_preserved = true;   // input A1n implies output A1n with gamma' = gamma^{m_i m_j}
  bool a2_valid = true;        // input A2 implies a regular datum satisfying cons1
  bool w_finite = true;
  bool w_bounded = true;       // dim W_ij <= (dim V_ij)^{m_j}
  std::map<std::pair<int, int>, std::pair<std::optional<int>, std::optional<int>>> dims;  // (W, V)
  bool ok() const { return a1n_preserved && a2_valid && w_finite && w_bounded; }
};

FixedTypeReport verify_fixed_type(const TGWDatum& d, const DiagonalAut& a, const FixedRingResult& f);

// phi_1 (x) ... (x) phi_d on the tensor product of the data.
DiagonalAut tensor_aut(const TGWDatum& joint, const std::vector<DiagonalAut>& parts);

struct TensorInvariantsReport {
  TGWDatum joint;
  DiagonalAut phi;
  FixedRingResult fixed_of_tensor;
  TGWDatum tensor_of_fixed;
  bool equal = false;
};

TensorInvariantsReport tensor_invariants(const std::vector<std::pair<TGWDatum, DiagonalAut>>& parts);

}  // namespace tgwa
