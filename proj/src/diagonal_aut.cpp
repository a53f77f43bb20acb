#include "tgwa/diagonal_aut.hpp"

#include <numeric>

#include "tgwa/error.hpp"

namespace tgwa {

DiagonalAut make_diagonal_aut(Vec alpha, RingAut phiR) {
  DiagonalAut a;
  for (const auto& x : alpha) {
    auto o = multiplicative_order(x);
    if (!o) throw Error(ErrorKind::InfiniteOrder, "alpha entry " + x.str() + " has infinite order");
    a.orders.push_back(*o);
  }
  a.alpha = std::move(alpha);
  if (phiR.is_identity()) {
    a.ell = 1;
  } else if (auto diag = phiR.diagonal_scaling()) {
    a.ell = 1;
    for (const auto& c : *diag) {
      auto o = multiplicative_order(c);
      if (!o) throw Error(ErrorKind::InfiniteOrder, "phi|R scaling " + c.str() + " has infinite order");
      a.ell = std::lcm(a.ell, *o);
    }
  } else {
    auto o = aut_order(phiR, 256);
    if (!o) throw Error(ErrorKind::InfiniteOrder, "phi|R has no finite order up to 256");
    a.ell = *o;
  }
  a.phiR = std::move(phiR);
  return a;
}

int aut_total_order(const DiagonalAut& a) {
  int o = a.ell;
  for (int m : a.orders) o = std::lcm(o, m);
  return o;
}

DiagonalAut lift_aut(const DiagonalAut& a, const RingPtr& target) {
  DiagonalAut out = a;
  for (auto& x : out.alpha) x = lift(x, target->field);
  out.phiR = lift(a.phiR, target);
  return out;
}

}  // namespace tgwa
