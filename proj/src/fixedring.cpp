#include "tgwa/fixedring.hpp"

#include <algorithm>
#include <numeric>

#include "tgwa/a2.hpp"
#include "tgwa/error.hpp"

namespace tgwa {

bool HypothesisReport::ok() const {
  return consistent && ell_finite && orders_finite && coprime && domain && commutes && fixes_t && shape_supported;
}

std::vector<std::pair<std::string, bool>> HypothesisReport::items() const {
  return {{"consistent", consistent}, {"ell_finite", ell_finite},   {"orders_finite", orders_finite},
          {"coprime", coprime},       {"domain", domain},           {"phi_commutes_sigma", commutes},
          {"phi_fixes_t", fixes_t},   {"shape_supported", shape_supported}};
}

static void check_aut(const TGWDatum& d, const DiagonalAut& a) {
  if (a.alpha.size() != d.rank())
    throw Error(ErrorKind::InvalidArgument, "alpha has " + std::to_string(a.alpha.size()) + " entries for rank " +
                                                std::to_string(d.rank()));
  require_same_ring(d.ring, a.phiR.ring());
}

HypothesisReport validate_hypothesis(const TGWDatum& d, const DiagonalAut& a) {
  check_aut(d, a);
  HypothesisReport r;
  r.consistent = validate_datum(d).overall();
  r.ell_finite = a.ell >= 1;
  r.orders_finite = a.orders.size() == d.rank();
  std::vector<int> all{a.ell};
  all.insert(all.end(), a.orders.begin(), a.orders.end());
  r.coprime = true;
  for (size_t i = 0; i < all.size(); ++i)
    for (size_t j = i + 1; j < all.size(); ++j)
      if (std::gcd(all[i], all[j]) != 1) r.coprime = false;
  r.commutes = true;
  r.fixes_t = true;
  for (size_t i = 0; i < d.rank(); ++i) {
    if (!commute(a.phiR, d.sigma[i])) r.commutes = false;
    if (a.phiR.apply(d.t[i]) != d.t[i]) r.fixes_t = false;
  }
  if (a.phiR.is_identity()) {
    r.shape_supported = true;
  } else if (a.phiR.diagonal_scaling()) {
    r.shape_supported = true;
    for (size_t j = 0; j < d.ring->nvars(); ++j)
      if (d.ring->laurent[j]) r.shape_supported = false;
  }
  return r;
}

bool hypothesis_a2(const DiagonalAut& a) {
  if (a.alpha.size() != 2) throw Error(ErrorKind::InvalidArgument, "A2 hypothesis needs rank 2");
  return a.alpha[0].is_one() || a.alpha[1].is_one();
}

static bool proven_nonzero(const Scalar& l1, const Scalar& l2) {
  if (l2.is_zero()) return false;
  return s_nonvanishing(l1, l2, 0).kind == SNonvanishing::Kind::ProvenAllNonzero;
}

// R^phi = k[h_j^{k_j}] when its generators are pure powers, one per variable.
static std::optional<TGWDatum> presentation(const TGWDatum& f, const FixedSubring& sub) {
  const size_t m = f.ring->nvars();
  if (sub.kind == FixedKind::Identity) return f;
  if (sub.generators.size() != m) return std::nullopt;
  std::vector<int> k(m, 0);
  for (const auto& g : sub.generators) {
    if (!g.is_monomial() || !g.leading_coefficient().is_one()) return std::nullopt;
    const Exponent& e = g.leading_exponent();
    size_t nz = 0, at = 0;
    for (size_t j = 0; j < m; ++j)
      if (e[j]) ++nz, at = j;
    if (nz != 1 || k[at]) return std::nullopt;
    k[at] = e[at];
  }
  std::vector<std::string> names;
  for (size_t j = 0; j < m; ++j) names.push_back(m == 1 ? "u" : "u" + std::to_string(j + 1));
  RingPtr r = make_ring(names, std::vector<bool>(m, false), f.ring->field);
  auto rewrite = [&](const BasePoly& p) {
    BasePoly out(r);
    for (const auto& [e, c] : p.terms()) {
      Exponent q(m);
      for (size_t j = 0; j < m; ++j) q[j] = e[j] / k[j];
      out += BasePoly::monomial(r, q, c);
    }
    return out;
  };
  std::vector<RingAut> tau;
  for (const auto& s : f.sigma) {
    const Mat& a = s.matrix();
    const Vec& b = s.offset();
    Mat na = zero_matrix(m, m);
    Vec nb(m, Scalar(0));
    for (size_t j = 0; j < m; ++j) {
      if (k[j] > 1) {
        for (size_t l = 0; l < m; ++l)
          if (l != j && !a[j][l].is_zero()) return std::nullopt;
        if (!b[j].is_zero()) return std::nullopt;
        na[j][j] = a[j][j].pow(k[j]);
      } else {
        for (size_t l = 0; l < m; ++l) {
          if (k[l] > 1 && !a[j][l].is_zero()) return std::nullopt;
          na[j][l] = a[j][l];
        }
        nb[j] = b[j];
      }
    }
    tau.emplace_back(r, na, nb);
  }
  std::vector<BasePoly> s;
  for (const auto& x : f.t) s.push_back(rewrite(x));
  return make_datum(r, tau, s, f.mu);
}

FixedRingResult fixed_datum(const TGWDatum& d, const DiagonalAut& a, int bound) {
  HypothesisReport h = validate_hypothesis(d, a);
  if (!h.shape_supported)
    throw Error(ErrorKind::UnsupportedAutomorphismShape, "phi|R must be the identity or a diagonal scaling");
  if (!h.coprime) throw Error(ErrorKind::CoprimalityViolation, "ell and the orders m_i are not pairwise coprime");
  if (!h.ok()) {
    std::string bad;
    for (const auto& [name, v] : h.items())
      if (!v) bad += (bad.empty() ? "" : ", ") + name;
    throw Error(ErrorKind::InvalidArgument, "automorphism hypotheses fail: " + bad);
  }
  const size_t n = d.rank();
  FixedRingResult r;
  r.m = a.orders;
  std::vector<RingAut> tau;
  std::vector<BasePoly> s;
  Mat nu = d.mu;
  for (size_t i = 0; i < n; ++i) {
    tau.push_back(d.sigma[i].power(r.m[i]));
    BasePoly prod = BasePoly::constant(d.ring, Scalar(1));
    RingAut back = d.sigma[i].inverse();
    BasePoly cur = d.t[i];
    for (int k = 0; k < r.m[i]; ++k) {
      prod *= cur;
      cur = back.apply(cur);
    }
    s.push_back(prod);
    for (size_t j = 0; j < n; ++j)
      if (i != j) nu[i][j] = d.mu[i][j].pow(static_cast<long>(r.m[i]) * r.m[j]);
  }
  r.datum = make_datum(d.ring, tau, s, nu);
  r.subring = fixed_subring(a.phiR, a.ell);
  r.s_invariant = true;
  for (const auto& x : s) r.s_invariant = r.s_invariant && membership(r.subring, x);
  r.tau_preserves = true;
  for (const auto& t : tau)
    for (const auto& g : r.subring.generators) r.tau_preserves = r.tau_preserves && membership(r.subring, t.apply(g));
  r.validity = validate_datum(r.datum);
  r.regular_inherited = r.validity.regular;
  r.cons1_inherited = r.validity.cons1_ok();
  r.cons2_vacuous = n <= 2;
  r.cartan = cartan_type(r.datum, bound);

  CartanReport in = cartan_type(d, bound);
  bool trivial = a.ell == 1 && std::all_of(r.m.begin(), r.m.end(), [](int k) { return k == 1; });
  bool equal_algebra = trivial || in.tag == TypeTag::A1n;
  if (!trivial && in.tag == TypeTag::A2)
    equal_algebra = (a.alpha[0].is_one() && proven_nonzero(in.eta1, in.eta2)) ||
                    (a.alpha[1].is_one() && proven_nonzero(in.lambda1, in.lambda2));
  r.label = equal_algebra ? "A^phi" : "fixed-subalgebra datum";
  r.presentation = presentation(r.datum, r.subring);
  return r;
}

FixedTypeReport verify_fixed_type(const TGWDatum& d, const DiagonalAut& a, const FixedRingResult& f) {
  check_aut(d, a);
  FixedTypeReport rep;
  CartanReport in = cartan_type(d, 64);
  rep.input_tag = in.tag;
  rep.output_tag = f.cartan.tag;
  const size_t n = d.rank();
  if (in.tag == TypeTag::A1n) {
    rep.a1n_preserved = f.cartan.tag == TypeTag::A1n;
    if (rep.a1n_preserved)
      for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j)
          if (i != j && f.cartan.gamma[i][j] != in.gamma[i][j].pow(static_cast<long>(f.m[i]) * f.m[j]))
            rep.a1n_preserved = false;
  }
  if (in.tag == TypeTag::A2) rep.a2_valid = f.validity.regular && f.validity.cons1_ok();
  for (const auto& [key, w] : f.cartan.vdims) {
    auto v = in.vdims.at(key);
    rep.dims[key] = {w, v};
    if (!w) {
      rep.w_finite = false;
      continue;
    }
    if (v) {
      long cap = 1;
      for (int k = 0; k < f.m[key.second]; ++k) cap *= *v;
      if (*w > cap) rep.w_bounded = false;
    }
  }
  return rep;
}

DiagonalAut tensor_aut(const TGWDatum& joint, const std::vector<DiagonalAut>& parts) {
  const size_t m = joint.ring->nvars();
  FieldPtr f = joint.ring->field;
  Mat a = zero_matrix(m, m);
  Vec b(m, Scalar(0)), alpha;
  size_t off = 0;
  for (const auto& p : parts) {
    const size_t k = p.phiR.ring()->nvars();
    if (off + k > m) throw Error(ErrorKind::InvalidArgument, "automorphisms have more variables than the tensor");
    for (size_t j = 0; j < k; ++j) {
      for (size_t l = 0; l < k; ++l) a[off + j][off + l] = lift(p.phiR.matrix()[j][l], f);
      b[off + j] = lift(p.phiR.offset()[j], f);
    }
    for (const auto& x : p.alpha) alpha.push_back(lift(x, f));
    off += k;
  }
  if (off != m || alpha.size() != joint.rank())
    throw Error(ErrorKind::InvalidArgument, "automorphisms do not match the tensor factors");
  return make_diagonal_aut(std::move(alpha), RingAut(joint.ring, std::move(a), std::move(b)));
}

TensorInvariantsReport tensor_invariants(const std::vector<std::pair<TGWDatum, DiagonalAut>>& parts) {
  if (parts.empty()) throw Error(ErrorKind::InvalidArgument, "tensor of no factors");
  for (size_t i = 0; i < parts.size(); ++i)
    for (size_t j = i + 1; j < parts.size(); ++j) {
      int oi = aut_total_order(parts[i].second), oj = aut_total_order(parts[j].second);
      if (std::gcd(oi, oj) != 1)
        throw Error(ErrorKind::CoprimalityViolation, "ord(phi_" + std::to_string(i + 1) + ") = " + std::to_string(oi) +
                                                        " and ord(phi_" + std::to_string(j + 1) +
                                                        ") = " + std::to_string(oj) + " are not coprime");
    }
  FieldPtr f;
  for (const auto& [d, a] : parts) {
    f = field_join(f, d.ring->field);
    for (const auto& x : a.alpha) f = field_join(f, x.field());
  }
  std::vector<TGWDatum> data;
  std::vector<DiagonalAut> auts;
  for (const auto& [d, a] : parts) {
    data.push_back(lift_datum(d, f));
    auts.push_back(lift_aut(a, data.back().ring));
  }
  TensorInvariantsReport rep;
  rep.joint = data[0];
  for (size_t i = 1; i < data.size(); ++i) rep.joint = tensor_data(rep.joint, data[i]);
  rep.phi = tensor_aut(rep.joint, auts);
  rep.fixed_of_tensor = fixed_datum(rep.joint, rep.phi);
  bool all_equal_algebra = true;
  for (size_t i = 0; i < data.size(); ++i) {
    FixedRingResult fi = fixed_datum(data[i], auts[i]);
    all_equal_algebra = all_equal_algebra && fi.label == "A^phi";
    rep.tensor_of_fixed = i == 0 ? fi.datum : tensor_data(rep.tensor_of_fixed, fi.datum);
  }
  rep.fixed_of_tensor.label = all_equal_algebra ? "A^phi" : "fixed-subalgebra datum";
  rep.equal = same_datum(rep.fixed_of_tensor.datum, rep.tensor_of_fixed);
  return rep;
}

}  // namespace tgwa
