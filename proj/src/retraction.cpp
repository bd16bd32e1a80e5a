#include "berkline/retraction.hpp"

#include <algorithm>

#include "berkline/padic_roots.hpp"

namespace berkline {

Divisor::Divisor(const Field& field, std::vector<BallPoint> points) : field_(field) {
    for (auto& p : points) {
        if (!(p.field() == field_)) fail(Errc::MixedFields, "divisor point over a different base field");
        if (!p.is_infinity() && !p.is_simple())
            fail(Errc::InvalidArgument, "divisor points must be simple points or infinity, got " + point_pretty(p));
        if (!contains(p)) points_.push_back(p);
    }
    std::sort(points_.begin(), points_.end(), canonical_less);
}

bool Divisor::contains(const BallPoint& x) const {
    return std::any_of(points_.begin(), points_.end(), [&](const BallPoint& p) { return point_eq(p, x); });
}

bool Divisor::contains_infinity() const {
    return std::any_of(points_.begin(), points_.end(), [](const BallPoint& p) { return p.is_infinity(); });
}

Divisor Divisor::with(const std::vector<BallPoint>& more) const {
    std::vector<BallPoint> all(points_);
    all.insert(all.end(), more.begin(), more.end());
    return Divisor(field_, std::move(all));
}

// ---------------------------------------------------------------------------

namespace {

void check_time(const Gamma& t) {
    if (Gamma::one() < t) fail(Errc::TimeOutOfRange, "time " + t.exponent_json() + " exceeds 1");
}

BallPoint grow(const BallPoint& x, const Gamma& t) {
    return canonicalize(BallPoint::eta(x.center(), std::max(x.radius(), t)));
}

} // namespace

BallPoint h_std(const Gamma& t, const BallPoint& x) {
    check_time(t);
    if (t == Gamma::one()) return BallPoint::gauss(x.field());
    if (in_unit_region(x)) return grow(x, t);
    return inv_point(grow(inv_point(x), t));
}

BallPoint TrajectoryLeg::at(const Gamma& t) const {
    BallPoint p = BallPoint::eta(center, std::max(base_radius, t));
    return chart == Chart::Direct ? canonicalize(p) : inv_point(p);
}

BallPoint Trajectory::at(const Gamma& t) const {
    check_time(t);
    if (legs.empty() || stop_time <= t) return end;
    for (const auto& leg : legs)
        if (leg.time.contains(t)) return leg.at(t);
    return end;
}

// ---------------------------------------------------------------------------

Skeleton divisor_hull(const Divisor& D) {
    if (D.points().empty()) return Skeleton::hull({}, false, {BallPoint::gauss(D.field())});
    return Skeleton::hull(D.points(), true);
}

Retraction::Retraction(Divisor divisor) : divisor_(std::move(divisor)), skeleton_(divisor_hull(divisor_)) {}

Gamma Retraction::tau(const BallPoint& x) const {
    if (skeleton_.contains(x)) return Gamma::zero();
    BallPoint entry = project(x, skeleton_);
    // The entry point lies on x's trajectory; in the chart where the
    // homotopy grows balls, its radius is the time at which it is reached.
    return in_unit_region(x) ? entry.radius() : inv_point(entry).radius();
}

BallPoint Retraction::at(const Gamma& t, const BallPoint& x) const {
    check_time(t);
    Gamma stop = tau(x);
    return h_std(std::min(t, stop), x);
}

Trajectory Retraction::trajectory(const BallPoint& x) const {
    Trajectory tr{canonicalize(x), {}, tau(x), canonicalize(x)};
    if (tr.stop_time.is_zero()) return tr;
    tr.end = h_std(tr.stop_time, x);

    const Interval whole{Gamma::zero(), tr.stop_time};
    if (in_unit_region(x)) {
        BallPoint c = canonicalize(x);
        tr.legs.push_back(TrajectoryLeg{whole, c.center(), Chart::Direct, c.radius()});
        return tr;
    }
    BallPoint y = inv_point(x); // canonical, in the unit region
    const FieldElem zero(x.field(), 0L);
    const Gamma swap = val(y.center()); // the inverted ball reaches 0 here
    if (y.center().is_zero() || !(swap < tr.stop_time)) {
        tr.legs.push_back(TrajectoryLeg{whole, y.center(), Chart::Inverted, y.radius()});
        return tr;
    }
    tr.legs.push_back(TrajectoryLeg{Interval{Gamma::zero(), swap}, y.center(), Chart::Inverted, y.radius()});
    tr.legs.push_back(TrajectoryLeg{Interval{swap, tr.stop_time}, zero, Chart::Inverted, y.radius()});
    return tr;
}

Gamma tau(const BallPoint& x, const Divisor& D) { return Retraction(D).tau(x); }
BallPoint h_D(const Gamma& t, const BallPoint& x, const Divisor& D) { return Retraction(D).at(t, x); }
Trajectory trajectory(const BallPoint& x, const Divisor& D) { return Retraction(D).trajectory(x); }

// ---------------------------------------------------------------------------

RationalFunction RationalFunction::polynomial(const Poly& p) {
    return RationalFunction{FieldElem(p.field(), 1L), {{p, 1}}};
}

RationalFunction RationalFunction::quotient(const Poly& num, const Poly& den) {
    return RationalFunction{FieldElem(num.field(), 1L), {{num, 1}, {den, -1}}};
}

std::optional<Gamma> abs_value(const RationalFunction& f, const BallPoint& x) {
    if (f.scalar.is_zero()) fail(Errc::InvalidArgument, "zero function");
    Gamma acc = val(f.scalar);
    if (x.is_infinity()) {
        long total = 0;
        for (const auto& [p, e] : f.factors) total += e * p.degree();
        if (total > 0) return std::nullopt;
        if (total < 0) return Gamma::zero();
        for (const auto& [p, e] : f.factors) acc = acc * val(p.leading()).pow(Rational(e));
        return acc;
    }
    for (const auto& [p, e] : f.factors) {
        Gamma g = p.gauss_value(x.center(), x.radius());
        if (g.is_zero() && e < 0) return std::nullopt;
        acc = acc * g.pow(Rational(e));
    }
    return acc;
}

Divisor divisor_for_functions(const std::vector<RationalFunction>& fns) {
    if (fns.empty()) fail(Errc::InvalidArgument, "no functions given");
    const Field field = fns.front().scalar.field();
    std::vector<BallPoint> pts{BallPoint::infinity(field)};
    for (const auto& f : fns) {
        if (f.scalar.is_zero()) fail(Errc::InvalidArgument, "zero function");
        for (const auto& [p, e] : f.factors) {
            if (p.is_zero()) fail(Errc::InvalidArgument, "zero factor");
            auto roots = split_roots(p);
            if (!roots) fail(Errc::NonSplitFunction, "a factor of degree " + std::to_string(p.degree()) +
                                                         " does not split over the base field");
            for (const auto& [r, m] : *roots) pts.push_back(BallPoint::simple(r));
        }
    }
    return Divisor(field, std::move(pts));
}

} // namespace berkline
