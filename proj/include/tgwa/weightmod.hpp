#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tgwa/datum.hpp"
#include "tgwa/diagonal_aut.hpp"
#include "tgwa/scenario.hpp"

namespace tgwa {

// Position k stands for the maximal ideal sigma^k(m_base).
struct Orbit {
  Vec base;
  RingAut sigma;
  std::optional<int> period;  // least N with sigma^N(m_base) = m_base
  bool finite() const { return period.has_value(); }
  Vec point(long k) const;
};

// Scans k = 1 .. 2W for a period.
Orbit orbit_of(const TGWDatum& d, const Vec& base, int window = 64);

struct BreakSet {
  int window = 0;
  std::vector<long> positions;  // ascending; 0 .. N-1 for a finite orbit
};

BreakSet breaks(const TGWDatum& d, const Orbit& o, int window = 64);

// {k : lower < k <= upper}; an absent bound is infinite.
struct SimpleSupport {
  std::optional<long> lower, upper;
  bool contains(long k) const;
  std::string str() const;
};

std::vector<SimpleSupport> simple_supports(const TGWDatum& d, const Orbit& o, int window = 64);

struct ActionResult {
  bool zero = true;
  long target = 0;
  Scalar coeff;
};

// X^+ v_k = v_{k+1}, X^- v_k = t(point_{k-1}) v_{k-1}, zero when leaving the support.
ActionResult module_action(const TGWDatum& d, const Orbit& o, const SimpleSupport& s, long k, int sign);
// X^-X^+ = t and X^+X^- = sigma(t) on every supported position in [-W, W].
bool support_relations_hold(const TGWDatum& d, const Orbit& o, const SimpleSupport& s, int window);

struct RestrictionComponent {
  int residue = 0;  // the T-orbit of sigma^residue(m_base)
  bool empty = true;
  std::optional<long> first, last;  // extreme positions; absent when unbounded
  // Consecutive s-breaks in the residue class bounding the component.
  std::optional<long> s_lower, s_upper;
  bool interval_ok = false;
};

struct Rank1Restriction {
  int m = 1;
  int d_phi = 1;
  std::vector<long> s_breaks;  // within [-W, W]
  std::vector<RestrictionComponent> components;
  bool injective = false;      // pi separates the orbit points in the window
  bool accounting_ok = false;  // each supported weight lies in exactly d_phi components
  bool ok() const;
};

Rank1Restriction restrict_rank1(const TGWDatum& d, const DiagonalAut& a, const Orbit& o,
                                const SimpleSupport& s, int window = 64);

// Text table of positions, T-orbit shapes, breaks and supports.
std::string render_orbit_ascii(const TGWDatum& d, const Orbit& o, int m, int window);

// "(h - c)" style name of the ideal of a point.
std::string ideal_str(const RingPtr& r, const Vec& p);

struct ExplicitModule {
  std::string name;
  std::string over;  // "A" or "fixed"
  std::vector<std::string> labels;
  std::vector<Vec> weights;
  std::vector<Mat> xminus, xplus;  // one per rank index; columns are images of basis vectors
  size_t dim() const { return weights.size(); }
};

struct ModuleRelations {
  std::vector<std::pair<std::string, bool>> items;
  bool ok() const;
  // Throws RelationViolated naming the first failure.
  void require() const;
};

ModuleRelations verify_module_relations(const ExplicitModule& m, const TGWDatum& d);
// Spinning each basis vector; throws SpinInconclusive unless weights are pairwise distinct.
bool is_simple(const ExplicitModule& m);
// Dimension of the space of intertwiners from a to b.
int hom_dimension(const ExplicitModule& a, const ExplicitModule& b, const TGWDatum& d);

struct RestrictionPart {
  ExplicitModule module;
  std::vector<Vec> basis;  // vectors in the source coordinates
};

struct ExplicitRestriction {
  bool basis_invertible = false;
  std::vector<std::pair<std::string, bool>> parts_ok;
  bool fiber_lemma_ok = false;
  bool accounting_ok = false;
  bool ok() const;
};

// The parts live over the presentation of the fixed datum; Y^{+-} = (X^{+-})^{m_i}.
ExplicitRestriction verify_explicit_restriction(const ExplicitModule& from, const TGWDatum& d,
                                                const DiagonalAut& a, const std::vector<RestrictionPart>& parts);

struct ScenarioModules {
  std::map<std::string, ExplicitModule> modules;
  std::vector<std::pair<std::string, std::vector<RestrictionPart>>> restrictions;
};

ScenarioModules explicit_modules(const Scenario& s);

struct CylinderComponent {
  std::string name;
  std::vector<long> rows;  // ascending
  bool unbounded = false;  // reaches the window edge
  bool winds = false;      // contains a loop around the cylinder
};

// Row r is the weight base + r; sigma_1 moves r to r + m, sigma_2 moves r to r - 1.
struct CylinderDiagram {
  TGWDatum datum;
  Scalar base;
  long lo = 0, hi = 0;
  int m = 1;
  std::vector<long> vertical;    // rows r with t_1 vanishing: the edge right of r
  std::vector<long> horizontal;  // rows r with t_2 vanishing: the edge above r
  std::vector<int> component_of;  // indexed by r - lo
  std::vector<CylinderComponent> components;
  size_t unbounded_count() const;
};

// Needs sigma_1(h) = h - m with m >= 1 and sigma_2(h) = h + 1; throws WindowTooSmall
// when a break edge would leave the rows [-W, W].
CylinderDiagram cylinder(const TGWDatum& d, const Scalar& base, int window = 8);
std::string render_cylinder_ascii(const CylinderDiagram& c);
std::string render_cylinder_svg(const CylinderDiagram& c);

// The fiber parameter after restriction to the fixed ring.
Scalar restrict_fiber(const Scalar& xi, int m);

}  // namespace tgwa
