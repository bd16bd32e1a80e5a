#pragma once

#include <optional>
#include <vector>

#include "berkline/valfield.hpp"

namespace berkline {

enum class Orientation { Forward, Reverse };

/// Closed Gamma_0-interval [lo;hi], traversed lo -> hi (Forward) or hi -> lo.
struct Interval {
    Gamma lo;
    Gamma hi;
    Orientation orientation = Orientation::Forward;

    // Builds the interval traversed from `from` to `to` (either order).
    static Interval path(const Gamma& from, const Gamma& to);

    const Gamma& origin() const { return orientation == Orientation::Forward ? lo : hi; }
    const Gamma& extremity() const { return orientation == Orientation::Forward ? hi : lo; }
    bool contains(const Gamma& g) const { return lo <= g && g <= hi; }

    friend bool operator==(const Interval&, const Interval&) = default;
};

/// r -> scale * r^power, with power in {+1, -1}; used to glue segment pieces.
struct MonomialReparam {
    Gamma scale;
    int power = 1;
    Gamma apply(const Gamma& r) const { return power > 0 ? scale * r : scale / r; }
    friend bool operator==(const MonomialReparam&, const MonomialReparam&) = default;
};

/// Finite concatenation of intervals; the extremity of each piece is
/// identified with the origin of the next one, whatever their values.
class GeneralizedSegment {
public:
    explicit GeneralizedSegment(Interval single);
    explicit GeneralizedSegment(std::vector<Interval> pieces);

    const std::vector<Interval>& pieces() const noexcept { return pieces_; }
    const Gamma& origin() const { return pieces_.front().origin(); }
    const Gamma& extremity() const { return pieces_.back().extremity(); }

    // Pairs (extremity of piece k, origin of piece k+1).
    std::vector<std::pair<Gamma, Gamma>> identifications() const;

    // Single-interval form, reached by gluing each piece with a monomial map
    // r -> c*r or r -> c/r. Not available when an identified endpoint is 0,
    // or when a piece would have to be inverted through 0.
    const std::optional<Interval>& normalized() const noexcept { return normalized_; }
    // Per-piece maps into the normalized interval (empty when not normalizable).
    const std::vector<MonomialReparam>& reparams() const noexcept { return reparams_; }

    friend bool operator==(const GeneralizedSegment& a, const GeneralizedSegment& b) {
        return a.pieces_ == b.pieces_;
    }

private:
    void normalize();
    std::vector<Interval> pieces_;
    std::optional<Interval> normalized_;
    std::vector<MonomialReparam> reparams_;
};

GeneralizedSegment segment_concat(const GeneralizedSegment& a, const GeneralizedSegment& b);

/// One monomial piece r -> coeff * r^power.
struct Monomial {
    Gamma coeff;
    Rational power;
    Gamma eval(const Gamma& r) const;
    friend bool operator==(const Monomial&, const Monomial&) = default;
};

/// Continuous piecewise-monomial self-map of Gamma_0. Piece k is active on
/// [breaks[k-1]; breaks[k]] (with breaks[-1] = domain_lo and
/// breaks[n] = domain_hi, unbounded when absent).
class PiecewiseMonomial {
public:
    PiecewiseMonomial(std::vector<Gamma> breaks, std::vector<Monomial> pieces,
                      Gamma domain_lo = Gamma::zero(), std::optional<Gamma> domain_hi = std::nullopt);

    static PiecewiseMonomial identity();
    // r -> max_i monomials[i](r) over all of Gamma_0. Monomials with Zero
    // coefficient are ignored; at least one must remain.
    static PiecewiseMonomial max_envelope(const std::vector<Monomial>& monomials);

    const std::vector<Gamma>& breaks() const noexcept { return breaks_; }
    const std::vector<Monomial>& pieces() const noexcept { return pieces_; }
    const Gamma& domain_lo() const noexcept { return domain_lo_; }
    const std::optional<Gamma>& domain_hi() const noexcept { return domain_hi_; }

    bool strictly_increasing() const;

    // Throws OutOfDomain.
    Gamma eval(const Gamma& r) const;
    // Throws NotInvertible (flat piece) or NotInImage.
    Gamma invert(const Gamma& s) const;
    // The inverse map as a piecewise monomial (requires strictly_increasing()).
    PiecewiseMonomial inverse() const;

    friend bool operator==(const PiecewiseMonomial&, const PiecewiseMonomial&) = default;

private:
    std::vector<Gamma> breaks_;
    std::vector<Monomial> pieces_;
    Gamma domain_lo_;
    std::optional<Gamma> domain_hi_;
};

inline Gamma pw_eval(const PiecewiseMonomial& f, const Gamma& r) { return f.eval(r); }
inline Gamma pw_invert(const PiecewiseMonomial& f, const Gamma& s) { return f.invert(s); }

} // namespace berkline
