#pragma once
// JSON and DOT forms of the domain values. Emission is deterministic; every
// to_json has a parser returning an equal value.

#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "berkline/lifting.hpp"
#include "berkline/padic_roots.hpp"
#include "berkline/polymap.hpp"
#include "berkline/retraction.hpp"
#include "berkline/skeleton.hpp"

namespace berkline {

using Json = nlohmann::ordered_json;

// Integers, "a" and "a/b" are accepted; emitted as "a/b".
Rational rational_from_json(const Json& j);
Json rational_to_json(const Rational& q);

// {"w": exponent}; "inf" is the value 0. Bare exponents are accepted too.
Gamma gamma_from_json(const Json& j);
Json gamma_to_json(const Gamma& g);

// Over Q(t) a non-constant element is {"num":[...],"den":[...]}, coefficients
// low-to-high; constants use the rational form.
FieldElem elem_from_json(const Field& field, const Json& j);
Json elem_to_json(const FieldElem& x);

// {"pt":"inf"} | {"pt":"eta","center":c,"w":w}. A bare element or "inf" is
// also read as a type-1 point.
BallPoint point_from_json(const Field& field, const Json& j);
Json point_to_json(const BallPoint& x);

Poly poly_from_json(const Field& field, const Json& j);
Json poly_to_json(const Poly& f);

Divisor divisor_from_json(const Field& field, const Json& j);
Json divisor_to_json(const Divisor& D);

RootList roots_from_json(const Field& field, const Json& j);
Json roots_to_json(const RootList& roots);

Json skeleton_to_json(const Skeleton& s);
Skeleton skeleton_from_json(const Field& field, const Json& j);
std::string skeleton_to_dot(const Skeleton& s);

Json piecewise_to_json(const PiecewiseMonomial& f);
PiecewiseMonomial piecewise_from_json(const Json& j);

Json profile_to_json(const FiberCountProfile& p);
FiberCountProfile profile_from_json(const Json& j);
std::string profile_table(const Field& field, const FiberCountProfile& p);

Json trajectory_to_json(const Trajectory& tr);
Trajectory trajectory_from_json(const Field& field, const Json& j);
// One row per breakpoint time: t, h_D(t, x).
std::string trajectory_table(const Trajectory& tr);

Json report_to_json(const SquareReport& r);
SquareReport report_from_json(const Field& field, const Json& j);

Json padic_report_to_json(const PadicRootReport& r);

// Stable text form used by the CLI and the C API: 2-space indent, newline.
std::string dump(const Json& j);

} // namespace berkline
