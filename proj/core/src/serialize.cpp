#include "drk/serialize.hpp"

#include <algorithm>

#include "drk/errors.hpp"

namespace drk {

Json to_json(Complex z) { return Json::array({z.real(), z.imag()}); }

Json to_json(const Poly& p) {
  Json out = Json::array();
  for (Complex c : p.coeffs()) out.push_back(to_json(c));
  return out;
}

Json to_json(const RationalFunction& f) { return {{"num", to_json(f.num())}, {"den", to_json(f.den())}}; }

Json to_json(const RationalSymbol& b) { return to_json(b.function()); }

Json to_json(const TrigPolynomial& t) {
  Json c = Json::array();
  for (Complex z : t.coeffs()) c.push_back(to_json(z));
  return {{"n", t.degree()}, {"coeffs", c}};
}

Json to_json(const ExtremeVerdict& v) {
  return {{"verdict", v.extreme ? "extreme" : "non_extreme"},
          {"integral", v.integral ? Json(*v.integral) : Json(nullptr)},
          {"certainty", v.exact ? "exact" : "heuristic"}};
}

Json to_json(const PythagoreanPair& pair) {
  return {{"b", to_json(pair.b)}, {"a", to_json(pair.a)}, {"phi", to_json(pair.phi)}};
}

Json to_json(const EquivalenceReport& r) {
  return {{"verdict", to_string(r.verdict)},
          {"witness", r.witness ? to_json(*r.witness) : Json(nullptr)},
          {"max_discrepancy", r.max_discrepancy},
          {"grid",
           {{"radii", r.grid.radii},
            {"angles", r.grid.angles},
            {"random_points", r.grid.random_points},
            {"random_seed", r.grid.seed},
            {"max_radius", r.grid.max_radius}}},
          {"tolerance", r.tolerance},
          {"evaluated", r.evaluated},
          {"skipped", r.skipped}};
}

Json to_json(const std::vector<AdcPoint>& pts) {
  Json out = Json::array();
  for (const auto& p : pts) out.push_back({{"zeta", to_json(p.zeta)}, {"c", p.c}});
  return out;
}

Json to_json(const ResidualRow& row) {
  return {{"N", row.n},
          {"numerical_rank", row.numerical_rank},
          {"reproducing", row.reproducing},
          {"adjoint", row.adjoint},
          {"range_orthogonality", row.range_orthogonality},
          {"range_reconstruction", row.range_reconstruction},
          {"contraction", row.contraction},
          {"kernel_norm_sq", row.kernel_norm},
          {"out_of_range", row.out_of_range}};
}

Json model_summary(const DefectModel& m, const std::vector<ResidualRow>& table, int head) {
  Json spec = Json::array();
  const auto& ev = m.spectrum();
  for (Eigen::Index i = ev.size() - 1; i >= 0 && i >= ev.size() - head; --i) spec.push_back(ev(i));
  Json rows = Json::array();
  for (const auto& r : table) rows.push_back(to_json(r));
  return {{"N", m.order()}, {"numerical_rank", m.numerical_rank()}, {"spectrum_head", spec},
          {"residual_table", rows}};
}

Complex complex_from_json(const Json& j) {
  if (j.is_number()) return {j.get<double>(), 0.0};
  if (j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number())
    return {j[0].get<double>(), j[1].get<double>()};
  throw MathError(ErrorCode::InvalidArgument, "expected a number or [re, im]: " + j.dump());
}

Poly poly_from_json(const Json& j) {
  if (!j.is_array()) throw MathError(ErrorCode::InvalidArgument, "polynomial must be an array");
  std::vector<Complex> c;
  c.reserve(j.size());
  for (const auto& e : j) c.push_back(complex_from_json(e));
  return Poly(std::move(c));
}

RationalFunction rational_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("num"))
    throw MathError(ErrorCode::InvalidArgument, "rational must be an object with num and den");
  Poly den = j.contains("den") ? poly_from_json(j.at("den")) : Poly::constant(1.0);
  return RationalFunction(poly_from_json(j.at("num")), std::move(den));
}

TrigPolynomial trig_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("coeffs"))
    throw MathError(ErrorCode::InvalidArgument, "trig polynomial must be an object with coeffs");
  std::vector<Complex> c;
  for (const auto& e : j.at("coeffs")) c.push_back(complex_from_json(e));
  if (j.contains("n") && j.at("n").get<int>() * 2 + 1 != static_cast<int>(c.size()))
    throw MathError(ErrorCode::InvalidArgument, "trig polynomial needs 2n + 1 coefficients");
  return TrigPolynomial(std::move(c));
}

}  // namespace drk
