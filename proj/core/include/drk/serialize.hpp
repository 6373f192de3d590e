#pragma once

// JSON forms of the core types. Complex numbers are [re, im]; polynomials are
// arrays of those, index = power of z. Parsers also accept plain reals.

#include <nlohmann/json.hpp>
#include <vector>

#include "drk/adc.hpp"
#include "drk/boundary.hpp"
#include "drk/curvature.hpp"
#include "drk/finsect.hpp"
#include "drk/pythagorean.hpp"
#include "drk/ratfun.hpp"

namespace drk {

using Json = nlohmann::json;

Json to_json(Complex z);
Json to_json(const Poly& p);
Json to_json(const RationalFunction& f);
Json to_json(const RationalSymbol& b);
Json to_json(const TrigPolynomial& t);
Json to_json(const ExtremeVerdict& v);
Json to_json(const PythagoreanPair& pair);
Json to_json(const EquivalenceReport& r);
Json to_json(const std::vector<AdcPoint>& pts);
Json to_json(const ResidualRow& row);
/// {N, numerical_rank, spectrum_head, residual_table}; spectrum_head lists the
/// largest `head` eigenvalues of D.
Json model_summary(const DefectModel& m, const std::vector<ResidualRow>& table, int head = 8);

/// Throw MathError(InvalidArgument) on malformed input.
Complex complex_from_json(const Json& j);
Poly poly_from_json(const Json& j);
RationalFunction rational_from_json(const Json& j);  // {num, den}; den defaults to [1]
TrigPolynomial trig_from_json(const Json& j);

}  // namespace drk
