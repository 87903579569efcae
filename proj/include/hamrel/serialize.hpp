#pragma once

// JSON forms of the coefficient vectors, anchors, bounds and spline models.
// Vectors: {"n": int, "coeffs": [decimal strings], "kind": "exact" | "approx"}.
// Integers are written exactly; reals with 17 significant digits.

#include <string>

#include <json.hpp>

#include "hamrel/bounds.hpp"
#include "hamrel/core_poly.hpp"
#include "hamrel/spline.hpp"

namespace hamrel {

using Json = nlohmann::ordered_json;

Json to_json(const ExactCoeffVector& v);
Json to_json(const ApproxCoeffVector& v);
Json to_json(const KnownAnchors& a);
Json to_json(const SplineModel& m);
Json to_json(const BoundsPair& bp);

ExactCoeffVector exact_from_json(const Json& j);
ApproxCoeffVector approx_from_json(const Json& j);
// {"l","w","t","s","N_l","N_lt","Nw_dual","Nws_dual"}; values may be ints or strings.
KnownAnchors anchors_from_json(const Json& j);

Json read_json_file(const std::string& path);

std::string_view mode_name(SplineMode mode) noexcept;

}  // namespace hamrel
