#include "berkline/lifting.hpp"

#include <algorithm>

#include "berkline/padic_roots.hpp"

namespace berkline {

namespace {

void require_polynomial(const PolyMap& phi) {
    if (!phi.is_polynomial()) fail(Errc::InvalidArgument, "lifting needs a polynomial map");
}

std::vector<FieldElem> critical_values_of(const PolyMap& phi) {
    require_polynomial(phi);
    Poly d = phi.numerator().derivative();
    auto roots = split_roots(d);
    if (!roots) fail(Errc::NonSplitDerivative, "phi' of degree " + std::to_string(d.degree()) +
                                                   " does not split over the base field; supply critical values");
    std::vector<FieldElem> out;
    for (const auto& [c, m] : *roots) out.push_back(phi.eval(c));
    return out;
}

void check_divisor(const PolyMap& phi, const Divisor& D, const std::vector<FieldElem>& critical_values) {
    if (!(D.field() == phi.field())) fail(Errc::MixedFields, "divisor and map over different base fields");
    if (!D.contains_infinity()) fail(Errc::DivisorTooSmall, "the divisor must contain infinity");
    for (const auto& v : critical_values)
        if (!D.contains(BallPoint::simple(v)))
            fail(Errc::DivisorTooSmall, "the divisor misses the critical value " + v.pretty());
}

const RootList* lookup(const RootData& data, const FieldElem& d) {
    for (const auto& [b, roots] : data)
        if (b == d) return &roots;
    return nullptr;
}

RootList roots_for(const PolyMap& phi, const FieldElem& d, const RootData& data) {
    if (const RootList* r = lookup(data, d)) return *r;
    auto r = fiber_roots(phi, d);
    if (!r) fail(Errc::IncompleteRoots, "phi - " + d.pretty() + " does not split; supply its roots");
    return *r;
}

} // namespace

Divisor required_divisor(const PolyMap& phi, const Divisor& extra) {
    return required_divisor(phi, extra, critical_values_of(phi));
}

Divisor required_divisor(const PolyMap& phi, const Divisor& extra, const std::vector<FieldElem>& critical_values) {
    require_polynomial(phi);
    std::vector<BallPoint> pts{BallPoint::infinity(phi.field())};
    for (const auto& v : critical_values) pts.push_back(BallPoint::simple(v));
    return extra.with(pts);
}

BallPoint LiftedTrajectory::at(const Gamma& t) const {
    BallPoint target_point = target.at(t);
    if (!radius_reparam) return source_start;
    return canonicalize(BallPoint::eta(source_start.center(), radius_reparam->eval(target_point.radius())));
}

Lift::Lift(PolyMap phi, Divisor D) : Lift(phi, D, critical_values_of(phi)) {}

Lift::Lift(PolyMap phi, Divisor D, const std::vector<FieldElem>& critical_values)
    : phi_(std::move(phi)), retraction_((check_divisor(phi_, D, critical_values), std::move(D))) {
    require_polynomial(phi_);
}

bool Lift::is_fixed(const BallPoint& x) const {
    if (x.is_infinity()) return true;
    return x.is_simple() && retraction_.divisor().contains(BallPoint::simple(phi_.eval(x.center())));
}

BallPoint Lift::at(const Gamma& t, const BallPoint& x) const {
    if (Gamma::one() < t) fail(Errc::TimeOutOfRange, "time " + t.exponent_json() + " exceeds 1");
    if (!(x.field() == phi_.field())) fail(Errc::MixedFields, "point and map over different base fields");
    if (is_fixed(x)) return canonicalize(x);
    BallPoint y = retraction_.at(t, image_point(phi_, x));
    // Infinity is in D, so y stays a ball around phi(a) that only grows.
    Gamma rho = radius_map(phi_, x.center()).invert(y.radius());
    return canonicalize(BallPoint::eta(x.center(), rho));
}

LiftedTrajectory Lift::trajectory(const BallPoint& x) const {
    if (!(x.field() == phi_.field())) fail(Errc::MixedFields, "point and map over different base fields");
    BallPoint start = canonicalize(x);
    Trajectory target = retraction_.trajectory(image_point(phi_, x));
    LiftedTrajectory lt{start, Interval{Gamma::zero(), Gamma::one()}, std::nullopt, target.stop_time, start, target};
    if (is_fixed(x)) {
        lt.stop_time = Gamma::zero();
        return lt;
    }
    lt.radius_reparam = radius_map(phi_, start.center()).inverse();
    lt.end = lt.at(Gamma::one());
    return lt;
}

BallPoint lift_h(const PolyMap& phi, const Divisor& D, const Gamma& t, const BallPoint& x) {
    return Lift(phi, D).at(t, x);
}

Skeleton lifted_skeleton(const PolyMap& phi, const Divisor& D, const RootData& root_data) {
    require_polynomial(phi);
    check_divisor(phi, D, critical_values_of(phi));
    const Field& field = phi.field();

    std::vector<BallPoint> marked;
    std::optional<RootList> gauss_roots;
    FieldElem gauss_center(field, 0L);
    for (const auto& d : D.points()) {
        if (d.is_infinity()) {
            marked.push_back(d);
            continue;
        }
        RootList roots = roots_for(phi, d.center(), root_data);
        for (const auto& [a, m] : roots) marked.push_back(BallPoint::simple(a));
        if (!gauss_roots && val(d.center()) <= Gamma::one()) {
            gauss_roots = roots;
            gauss_center = d.center();
        }
    }
    if (!gauss_roots) gauss_roots = roots_for(phi, gauss_center, root_data);

    std::vector<BallPoint> gauss_preimages;
    for (const auto& [z, m] : preimage_points(phi, BallPoint::eta(gauss_center, Gamma::one()), *gauss_roots))
        gauss_preimages.push_back(z);
    // preimage_points checks the root data; do the same for the marked fibers.
    for (const auto& d : D.points())
        if (!d.is_infinity()) preimage_points(phi, d, roots_for(phi, d.center(), root_data));
    return Skeleton::hull(marked, false, gauss_preimages);
}

SquareReport verify_commuting_square(const PolyMap& phi, const Divisor& D, const std::vector<BallPoint>& samples,
                                     const std::vector<Gamma>& times) {
    Lift lift(phi, D);
    SquareReport report;
    for (const auto& x : samples) {
        for (const auto& t : times) {
            ++report.checked;
            try {
                BallPoint lhs = image_point(phi, lift.at(t, x));
                BallPoint rhs = lift.downstairs().at(t, image_point(phi, x));
                if (!point_eq(lhs, rhs))
                    report.failed.push_back(
                        SquareFailure{x, t, "phi(h'(t,x)) = " + point_pretty(lhs) + " but h_D(t,phi(x)) = " +
                                                point_pretty(rhs)});
            } catch (const Error& e) {
                report.failed.push_back(SquareFailure{x, t, std::string(errc_name(e.code())) + ": " + e.what()});
            }
        }
    }
    return report;
}

} // namespace berkline
