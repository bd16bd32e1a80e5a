#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "berkline/ballpoint.hpp"
#include "berkline/gamma.hpp"
#include "berkline/poly.hpp"

namespace berkline {

using RootList = std::vector<std::pair<FieldElem, int>>;

/// A polynomial map of the line, or a rational map (evaluation only) when a
/// denominator is present.
class PolyMap {
public:
    explicit PolyMap(Poly numerator);
    PolyMap(Poly numerator, Poly denominator);

    const Field& field() const noexcept { return num_.field(); }
    const Poly& numerator() const noexcept { return num_; }
    const std::optional<Poly>& denominator() const noexcept { return den_; }
    bool is_polynomial() const noexcept { return !den_.has_value(); }
    // Degree of the polynomial map; throws InvalidArgument in rational mode.
    long degree() const;
    FieldElem eval(const FieldElem& a) const;

private:
    Poly num_;
    std::optional<Poly> den_;
};

std::vector<FieldElem> taylor_shift(const PolyMap& phi, const FieldElem& a);

/// s(r) = max_{i>=1} |c_i| r^i for the Taylor coefficients of phi at a: the
/// radius of the image of the ball b(a, r).
PiecewiseMonomial radius_map(const PolyMap& phi, const FieldElem& a);

/// Throws DenominatorVanishes in rational mode when the denominator has a
/// zero in the closed ball.
BallPoint image_point(const PolyMap& phi, const BallPoint& x);

/// Roots of phi - b (with multiplicity) for polynomial maps whose fiber
/// splits; std::nullopt when it cannot be computed exactly.
std::optional<RootList> fiber_roots(const PolyMap& phi, const FieldElem& b);

/// Preimages of y = eta(b, s) with multiplicities; `roots` are the roots of
/// phi - b. Throws IncompleteRoots or NotInImage.
std::vector<std::pair<BallPoint, int>> preimage_points(const PolyMap& phi, const BallPoint& y, const RootList& roots);

/// Piecewise-constant count t -> #preimages of eta(b, t). Interval k is
/// [breaks[k-1]; breaks[k]) with breaks[-1] = 0 and breaks[n] = inf.
struct FiberCountProfile {
    std::vector<Gamma> breaks;
    std::vector<long> counts;   // one per interval (breaks.size() + 1)
    std::vector<long> at_break; // count at each breakpoint radius

    long count_at(const Gamma& t) const;
    // Count on (t, t + epsilon).
    long count_just_above(const Gamma& t) const;

    friend bool operator==(const FiberCountProfile&, const FiberCountProfile&) = default;
};

FiberCountProfile fiber_count_ray(const PolyMap& phi, const FieldElem& b, const RootList& roots);

/// True iff the count just above r strictly exceeds the count at r (r > 0).
bool outer_ramification_scan(const FiberCountProfile& profile, const Gamma& r);
/// All outer-ramification points eta(b, r) along the ray at b.
std::vector<BallPoint> scan_ray(const PolyMap& phi, const FieldElem& b, const RootList& roots);

} // namespace berkline
