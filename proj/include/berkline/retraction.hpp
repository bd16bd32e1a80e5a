#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "berkline/ballpoint.hpp"
#include "berkline/poly.hpp"
#include "berkline/skeleton.hpp"

namespace berkline {

/// Finite set of type-1 points (simple points and possibly infinity).
class Divisor {
public:
    Divisor(const Field& field, std::vector<BallPoint> points);

    const Field& field() const noexcept { return field_; }
    const std::vector<BallPoint>& points() const noexcept { return points_; }
    bool contains(const BallPoint& x) const;
    bool contains_infinity() const;
    Divisor with(const std::vector<BallPoint>& more) const;

private:
    Field field_;
    std::vector<BallPoint> points_; // canonical order, no duplicates
};

/// The standard homotopy: balls in the closed unit region grow to radius t;
/// everything else is handled through u -> 1/u. Throws TimeOutOfRange for t > 1.
BallPoint h_std(const Gamma& t, const BallPoint& x);

struct TrajectoryLeg {
    Interval time;
    FieldElem center;
    Chart chart = Chart::Direct;
    Gamma base_radius; // point at time t: chart(eta(center, max(base_radius, t)))

    BallPoint at(const Gamma& t) const;
};

/// Symbolic form of t -> h_D(t, x).
struct Trajectory {
    BallPoint start;
    std::vector<TrajectoryLeg> legs;
    Gamma stop_time;
    BallPoint end;

    BallPoint at(const Gamma& t) const;
};

/// h_D for a fixed divisor; caches the skeleton C_D = hull(D u {Gauss}).
class Retraction {
public:
    explicit Retraction(Divisor divisor);

    const Divisor& divisor() const noexcept { return divisor_; }
    const Skeleton& skeleton() const noexcept { return skeleton_; }

    Gamma tau(const BallPoint& x) const;
    BallPoint at(const Gamma& t, const BallPoint& x) const;
    Trajectory trajectory(const BallPoint& x) const;

private:
    Divisor divisor_;
    Skeleton skeleton_;
};

Skeleton divisor_hull(const Divisor& D);
Gamma tau(const BallPoint& x, const Divisor& D);
BallPoint h_D(const Gamma& t, const BallPoint& x, const Divisor& D);
Trajectory trajectory(const BallPoint& x, const Divisor& D);

/// scalar * prod factor^exponent; exponents may be negative.
struct RationalFunction {
    FieldElem scalar;
    std::vector<std::pair<Poly, int>> factors;

    static RationalFunction polynomial(const Poly& p);
    static RationalFunction quotient(const Poly& num, const Poly& den);
};

/// |f| at a point, via the Gauss norm of every factor. Empty at a pole.
std::optional<Gamma> abs_value(const RationalFunction& f, const BallPoint& x);

/// Zeros and poles of the functions in K, plus infinity. Throws
/// NonSplitFunction when some factor does not split over the base field.
Divisor divisor_for_functions(const std::vector<RationalFunction>& fns);

} // namespace berkline
