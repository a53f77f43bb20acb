#pragma once

#include <vector>

#include "tgwa/basering.hpp"

namespace tgwa {

// phi(X_i^{+-}) = alpha_i^{+-1} X_i^{+-}, phi|R = phiR.
struct DiagonalAut {
  Vec alpha;
  std::vector<int> orders;  // m_i
  RingAut phiR;
  int ell = 1;              // ord(phi|R)
};

DiagonalAut make_diagonal_aut(Vec alpha, RingAut phiR);
// lcm(ell, m_1, ..., m_n).
int aut_total_order(const DiagonalAut& a);
DiagonalAut lift_aut(const DiagonalAut& a, const RingPtr& target);

}  // namespace tgwa
