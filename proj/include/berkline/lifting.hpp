#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "berkline/polymap.hpp"
#include "berkline/retraction.hpp"

namespace berkline {

/// Critical values of phi (images of the zeros of phi'), plus infinity,
/// plus `extra`. Throws NonSplitDerivative when phi' does not split.
Divisor required_divisor(const PolyMap& phi, const Divisor& extra);
/// Same, with caller-supplied critical values.
Divisor required_divisor(const PolyMap& phi, const Divisor& extra, const std::vector<FieldElem>& critical_values);

/// t -> h'(t, x) for a starting point on the affine chart.
struct LiftedTrajectory {
    BallPoint source_start;
    Interval time;
    std::optional<PiecewiseMonomial> radius_reparam; // inverse radius map; empty when x is fixed
    Gamma stop_time;
    BallPoint end;
    Trajectory target; // t -> h_D(t, phi(x))

    BallPoint at(const Gamma& t) const;
};

/// The unique lift of h_D along a polynomial cover phi: phi(h'(t,x)) = h_D(t, phi(x)).
/// Construction checks that D contains infinity and every critical value
/// (DivisorTooSmall otherwise).
class Lift {
public:
    Lift(PolyMap phi, Divisor D);
    Lift(PolyMap phi, Divisor D, const std::vector<FieldElem>& critical_values);

    const PolyMap& map() const noexcept { return phi_; }
    const Retraction& downstairs() const noexcept { return retraction_; }

    // Points of phi^{-1}(D) stay fixed.
    bool is_fixed(const BallPoint& x) const;
    BallPoint at(const Gamma& t, const BallPoint& x) const;
    LiftedTrajectory trajectory(const BallPoint& x) const;

private:
    PolyMap phi_;
    Retraction retraction_;
};

BallPoint lift_h(const PolyMap& phi, const Divisor& D, const Gamma& t, const BallPoint& x);

using RootData = std::vector<std::pair<FieldElem, RootList>>; // d -> roots of phi - d

/// hull(phi^{-1}(D) u phi^{-1}(Gauss)); missing fibers are computed with
/// fiber_roots when they split, IncompleteRoots otherwise.
Skeleton lifted_skeleton(const PolyMap& phi, const Divisor& D, const RootData& root_data = {});

struct SquareFailure {
    BallPoint x;
    Gamma t;
    std::string reason;
};

struct SquareReport {
    std::size_t checked = 0;
    std::vector<SquareFailure> failed;
};

/// Checks phi(h'(t,x)) = h_D(t, phi(x)) on every (x, t). Throws
/// DivisorTooSmall before checking when D is undersized.
SquareReport verify_commuting_square(const PolyMap& phi, const Divisor& D, const std::vector<BallPoint>& samples,
                                     const std::vector<Gamma>& times);

} // namespace berkline
