#pragma once

#include <optional>
#include <string>
#include <vector>

#include "berkline/gamma.hpp"
#include "berkline/valfield.hpp"

namespace berkline {

/// A point of the hat-line: the type-1 point at infinity, or the generic
/// point eta(center, radius) of the closed ball b(center, radius).
/// Radius Zero gives the type-1 point `center` itself.
class BallPoint {
public:
    static BallPoint infinity(const Field& field);
    static BallPoint eta(const FieldElem& center, const Gamma& radius);
    static BallPoint simple(const FieldElem& a) { return eta(a, Gamma::zero()); }
    static BallPoint gauss(const Field& field);

    bool is_infinity() const noexcept { return infinity_; }
    bool is_simple() const noexcept { return !infinity_ && radius_.is_zero(); }
    const Field& field() const noexcept { return field_; }
    // Require !is_infinity().
    const FieldElem& center() const;
    const Gamma& radius() const;

    // Identity of representation (same center and radius); use point_eq for
    // equality of points.
    bool same_repr(const BallPoint& o) const;

private:
    BallPoint(Field field, bool inf, FieldElem center, Gamma radius)
        : field_(field), infinity_(inf), center_(std::move(center)), radius_(std::move(radius)) {}

    Field field_;
    bool infinity_;
    FieldElem center_;
    Gamma radius_;
};

bool point_eq(const BallPoint& x, const BallPoint& y);
BallPoint canonicalize(const BallPoint& x);
// Ball containment, with infinity as the top element.
bool leq(const BallPoint& x, const BallPoint& y);
BallPoint join(const BallPoint& x, const BallPoint& y);
// The involution induced by u -> 1/u.
BallPoint inv_point(const BallPoint& x);
// x <= Gauss, i.e. the closed unit region where the homotopy acts directly.
bool in_unit_region(const BallPoint& x);

// Deterministic text of the canonical form; total order key for sorting.
std::string point_key(const BallPoint& x);
bool canonical_less(const BallPoint& x, const BallPoint& y);
std::string point_pretty(const BallPoint& x);

enum class Chart { Direct, Inverted };

/// One leg of a path in the tree: balls around a fixed center with the
/// radius running over an interval, read in the direct chart or through
/// u -> 1/u.
struct PathLeg {
    Interval radii;
    FieldElem center;
    Chart chart = Chart::Direct;

    BallPoint at(const Gamma& radius) const;
};

/// The unique path between two points: a generalized segment of radii and a
/// center/chart per piece.
struct SegmentPath {
    GeneralizedSegment segment;
    std::vector<PathLeg> legs;

    BallPoint start() const;
    BallPoint end() const;
};

SegmentPath segment_between(const BallPoint& x, const BallPoint& y);

} // namespace berkline
