#include "berkline/ballpoint.hpp"

#include <algorithm>

namespace berkline {

namespace {

void check_fields(const BallPoint& x, const BallPoint& y) {
    if (!(x.field() == y.field())) fail(Errc::MixedFields, "points over different base fields");
}

} // namespace

BallPoint BallPoint::infinity(const Field& field) {
    return BallPoint(field, true, FieldElem(field, 0L), Gamma::zero());
}

BallPoint BallPoint::eta(const FieldElem& center, const Gamma& radius) {
    return BallPoint(center.field(), false, center, radius);
}

BallPoint BallPoint::gauss(const Field& field) { return eta(FieldElem(field, 0L), Gamma::one()); }

const FieldElem& BallPoint::center() const {
    if (infinity_) fail(Errc::InvalidArgument, "the point at infinity has no center");
    return center_;
}

const Gamma& BallPoint::radius() const {
    if (infinity_) fail(Errc::InvalidArgument, "the point at infinity has no radius");
    return radius_;
}

bool BallPoint::same_repr(const BallPoint& o) const {
    if (infinity_ || o.infinity_) return infinity_ == o.infinity_ && field_ == o.field_;
    return center_ == o.center_ && radius_ == o.radius_;
}

bool point_eq(const BallPoint& x, const BallPoint& y) {
    check_fields(x, y);
    if (x.is_infinity() || y.is_infinity()) return x.is_infinity() && y.is_infinity();
    return x.radius() == y.radius() && dist(x.center(), y.center()) <= x.radius();
}

BallPoint canonicalize(const BallPoint& x) {
    if (x.is_infinity() || x.radius().is_zero()) return x;
    return BallPoint::eta(truncate_expansion(x.center(), x.radius().exponent()), x.radius());
}

bool leq(const BallPoint& x, const BallPoint& y) {
    check_fields(x, y);
    if (y.is_infinity()) return true;
    if (x.is_infinity()) return false;
    return x.radius() <= y.radius() && dist(x.center(), y.center()) <= y.radius();
}

BallPoint join(const BallPoint& x, const BallPoint& y) {
    check_fields(x, y);
    if (x.is_infinity()) return x;
    if (y.is_infinity()) return y;
    Gamma r = std::max({x.radius(), y.radius(), dist(x.center(), y.center())});
    return canonicalize(BallPoint::eta(x.center(), r));
}

BallPoint inv_point(const BallPoint& x) {
    const Field& field = x.field();
    if (x.is_infinity()) return BallPoint::simple(FieldElem(field, 0L));
    const Gamma abs_a = val(x.center());
    const Gamma& r = x.radius();
    if (abs_a <= r) {
        if (r.is_zero()) return BallPoint::infinity(field);
        return BallPoint::eta(FieldElem(field, 0L), Gamma::one() / r);
    }
    return canonicalize(BallPoint::eta(x.center().inv(), r / (abs_a * abs_a)));
}

bool in_unit_region(const BallPoint& x) {
    return !x.is_infinity() && x.radius() <= Gamma::one() && val(x.center()) <= Gamma::one();
}

std::string point_key(const BallPoint& x) {
    if (x.is_infinity()) return "inf";
    BallPoint c = canonicalize(x);
    return "eta(" + c.center().key() + ";" + c.radius().exponent_json() + ")";
}

bool canonical_less(const BallPoint& x, const BallPoint& y) {
    if (x.is_infinity() || y.is_infinity()) return !x.is_infinity() && y.is_infinity();
    const Gamma& rx = x.radius();
    const Gamma& ry = y.radius();
    if (rx != ry) {
        // Ascending exponent; radius Zero (exponent +inf) sorts after all others.
        if (rx.is_zero()) return false;
        if (ry.is_zero()) return true;
        return rx.exponent() < ry.exponent();
    }
    return canonicalize(x).center().key() < canonicalize(y).center().key();
}

std::string point_pretty(const BallPoint& x) {
    if (x.is_infinity()) return "inf";
    BallPoint c = canonicalize(x);
    return "η(" + c.center().pretty() + ", " + c.radius().pretty(c.field()) + ")";
}

// ---------------------------------------------------------------------------

BallPoint PathLeg::at(const Gamma& radius) const {
    BallPoint p = BallPoint::eta(center, radius);
    return chart == Chart::Direct ? canonicalize(p) : inv_point(p);
}

BallPoint SegmentPath::start() const { return legs.front().at(legs.front().radii.origin()); }
BallPoint SegmentPath::end() const { return legs.back().at(legs.back().radii.extremity()); }

namespace {

// Path from a finite point up to infinity: radii around the point's center
// up to the join with the Gauss point, then the inverted chart 1/R -> 0.
std::vector<PathLeg> ray_to_infinity(const BallPoint& x) {
    const Field& field = x.field();
    const Gamma top = join(x, BallPoint::gauss(field)).radius();
    return {
        PathLeg{Interval::path(x.radius(), top), x.center(), Chart::Direct},
        PathLeg{Interval::path(Gamma::one() / top, Gamma::zero()), FieldElem(field, 0L), Chart::Inverted},
    };
}

PathLeg reversed(const PathLeg& leg) {
    PathLeg r = leg;
    if (r.radii.lo != r.radii.hi)
        r.radii.orientation = leg.radii.orientation == Orientation::Forward ? Orientation::Reverse : Orientation::Forward;
    return r;
}

SegmentPath make_path(std::vector<PathLeg> legs) {
    std::vector<Interval> pieces;
    for (const auto& l : legs) pieces.push_back(l.radii);
    return SegmentPath{GeneralizedSegment(std::move(pieces)), std::move(legs)};
}

} // namespace

SegmentPath segment_between(const BallPoint& x, const BallPoint& y) {
    check_fields(x, y);
    const Field& field = x.field();
    if (point_eq(x, y)) {
        if (x.is_infinity())
            return make_path({PathLeg{Interval{Gamma::zero(), Gamma::zero()}, FieldElem(field, 0L), Chart::Inverted}});
        return make_path({PathLeg{Interval{x.radius(), x.radius()}, x.center(), Chart::Direct}});
    }
    if (y.is_infinity()) return make_path(ray_to_infinity(x));
    if (x.is_infinity()) {
        auto legs = ray_to_infinity(y);
        return make_path({reversed(legs[1]), reversed(legs[0])});
    }
    const Gamma top = join(x, y).radius();
    return make_path({
        PathLeg{Interval::path(x.radius(), top), x.center(), Chart::Direct},
        PathLeg{Interval::path(top, y.radius()), y.center(), Chart::Direct},
    });
}

} // namespace berkline
