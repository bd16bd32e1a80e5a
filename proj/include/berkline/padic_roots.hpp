#pragma once

// Root-finding over (Q, v_p): Newton polygons, exact rational roots, and
// Hensel lifting at capped precision.

#include <optional>
#include <utility>
#include <vector>

#include "berkline/poly.hpp"
#include "berkline/valfield.hpp"

namespace berkline {

/// p^valuation * unit, known modulo p^precision (absolute precision).
/// An element known to be 0 mod p^precision is stored with unit 0 and
/// valuation == precision.
class CappedPadic {
public:
    CappedPadic(unsigned long p, const Rational& value, long precision);

    unsigned long prime() const noexcept { return p_; }
    long valuation() const noexcept { return valuation_; }
    const Integer& unit() const noexcept { return unit_; }
    long precision() const noexcept { return precision_; }
    bool is_zero() const noexcept { return unit_ == 0; }

    // Representative in [0, p^precision) when valuation >= 0, otherwise the
    // rational p^valuation * unit.
    Rational representative() const;
    // Agreement modulo p^n (n <= both precisions).
    bool agrees_mod(const CappedPadic& o, long n) const;

    friend CappedPadic operator+(const CappedPadic& a, const CappedPadic& b);
    friend CappedPadic operator-(const CappedPadic& a, const CappedPadic& b);
    friend CappedPadic operator*(const CappedPadic& a, const CappedPadic& b);

private:
    CappedPadic() = default;
    unsigned long p_ = 2;
    long valuation_ = 0;
    Integer unit_;
    long precision_ = 0;
};

/// Lower convex hull of {(i, v_p(a_i))}. A segment of slope s and length l
/// stands for l roots (in an algebraic closure) of valuation -s.
struct NewtonPolygon {
    struct Vertex {
        long i;
        Rational w;
    };
    struct Slope {
        Rational slope;
        long length;
    };
    std::vector<Vertex> vertices;
    std::vector<Slope> slopes;

    // Valuations of the nonzero roots, with multiplicity, ascending.
    std::vector<Rational> root_valuations() const;
};

NewtonPolygon newton_polygon(const Poly& f);
NewtonPolygon newton_polygon(const std::vector<Rational>& coeffs, unsigned long p);

/// Root approximation at precision N: v_p(f(a)) >= N and
/// v_p(a - a0) > v_p(f'(a0)). Throws CriterionFails unless
/// v_p(f(a0)) > 2 v_p(f'(a0)); throws PrecisionLoss if the iteration stalls.
CappedPadic hensel_lift(const std::vector<Rational>& f, unsigned long p, const Rational& a0, long N);

/// All rational roots with multiplicity, ascending by value.
std::vector<std::pair<Rational, int>> rational_roots(const std::vector<Rational>& f);

/// Roots in Q_p (beyond the rational ones) certified by Hensel's criterion.
struct PadicRoot {
    CappedPadic value;
    long certified; // the root is known modulo p^certified
};
struct PadicRootReport {
    std::vector<std::pair<Rational, int>> rational;
    std::vector<PadicRoot> lifted; // roots of the deflated part
    long unresolved = 0;           // residue classes left undecided at the search depth
};
PadicRootReport padic_roots(const std::vector<Rational>& f, unsigned long p, long N);

/// Complete factorization into linear factors over the base field when it
/// is reachable exactly: linear polynomials, or Q-coefficient polynomials
/// whose rational roots exhaust the degree. Empty otherwise.
std::optional<std::vector<std::pair<FieldElem, int>>> split_roots(const Poly& f);

} // namespace berkline
