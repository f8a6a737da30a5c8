// JSON encodings. Rationals are strings "a/b" (or "a"), +inf is "inf".
#pragma once

#include "berkdyn/measures.hpp"
#include "berkdyn/potential.hpp"
#include "berkdyn/reduction.hpp"

#include <json.hpp>

namespace berkdyn {

using Json = nlohmann::ordered_json;

Json to_json(const BerkPoint& x);
/// Throws std::invalid_argument on malformed input.
BerkPoint point_from_json(const Json& j);

Json to_json(const RationalMap& r);
/// {"p": int, "numerator": [...], "denominator": [...]}, index = degree.
RationalMap map_from_json(const Json& j);

Json to_json(const FiniteTree& t);
FiniteTree tree_from_json(const Json& j);

/// One record per atom: vertex atoms carry "vertex" plus an equivalent
/// (edge, offset); edge atoms carry (edge, offset).
Json atoms_to_json(const ProjectedMeasure& m);

Json to_json(const PiecewiseAffinePotential& g);
Json to_json(const ReductionReport& r);
Json to_json(const ExceptionalSet& e);

}  // namespace berkdyn
