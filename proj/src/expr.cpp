#include "tgwa/expr.hpp"

namespace tgwa {

Scalar parse_scalar(const std::string& text, const FieldPtr& field, const Params& params) {
  ExprOps<Scalar> ops;
  ops.field = field;
  ops.constant = [](const Scalar& s) { return s; };
  ops.identifier = [&](const std::string& id) -> std::optional<Scalar> {
    auto it = params.find(id);
    if (it == params.end()) return std::nullopt;
    return it->second;
  };
  ops.divide = [](const Scalar& a, const Scalar& b) { return a / b; };
  ops.power = [](const Scalar& a, long k) { return a.pow(k); };
  return ExprParser<Scalar>(text, ops).parse();
}

BasePoly parse_poly(const std::string& text, const RingPtr& ring, const Params& params) {
  ExprOps<BasePoly> ops;
  ops.field = ring->field;
  ops.constant = [&](const Scalar& s) { return BasePoly::constant(ring, s); };
  ops.identifier = [&](const std::string& id) -> std::optional<BasePoly> {
    int j = ring->index_of(id);
    if (j >= 0) return BasePoly::variable(ring, j);
    auto it = params.find(id);
    if (it == params.end()) return std::nullopt;
    return BasePoly::constant(ring, it->second);
  };
  ops.divide = [](const BasePoly& a, const BasePoly& b) { return a.divide_exact(b); };
  ops.power = [](const BasePoly& a, long k) { return a.pow(k); };
  return ExprParser<BasePoly>(text, ops).parse();
}

RatFunc parse_ratfunc(const std::string& text, const FieldPtr& field, const std::string& var,
                      const Params& params) {
  ExprOps<RatFunc> ops;
  ops.field = field;
  ops.constant = [](const Scalar& s) { return RatFunc(s); };
  ops.identifier = [&](const std::string& id) -> std::optional<RatFunc> {
    if (id == var) return RatFunc(UPoly::x());
    auto it = params.find(id);
    if (it == params.end()) return std::nullopt;
    return RatFunc(it->second);
  };
  ops.divide = [](const RatFunc& a, const RatFunc& b) { return a / b; };
  ops.power = [](const RatFunc& a, long k) { return a.pow(static_cast<int>(k)); };
  return ExprParser<RatFunc>(text, ops).parse();
}

}  // namespace tgwa
