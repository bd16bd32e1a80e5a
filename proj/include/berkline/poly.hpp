#pragma once

#include <vector>

#include "berkline/valfield.hpp"

namespace berkline {

/// Polynomial in the coordinate u with coefficients in a base field,
/// low-to-high, no trailing zeros.
class Poly {
public:
    explicit Poly(const Field& field) : field_(field) {}
    Poly(const Field& field, std::vector<FieldElem> coeffs);
    static Poly from_rationals(const Field& field, const std::vector<Rational>& coeffs);
    // u - a
    static Poly linear_factor(const FieldElem& a);

    const Field& field() const noexcept { return field_; }
    const std::vector<FieldElem>& coeffs() const noexcept { return coeffs_; }
    long degree() const noexcept { return static_cast<long>(coeffs_.size()) - 1; }
    bool is_zero() const noexcept { return coeffs_.empty(); }
    FieldElem coeff(std::size_t i) const;
    const FieldElem& leading() const;
    bool has_rational_coeffs() const;
    std::vector<Rational> rational_coeffs() const;

    FieldElem eval(const FieldElem& x) const;
    Poly derivative() const;
    // Coefficients c_i with p(u) = sum c_i (u - a)^i (repeated synthetic division).
    std::vector<FieldElem> taylor_shift(const FieldElem& a) const;
    // p(q(u)).
    Poly compose(const Poly& q) const;
    // Gauss norm at eta(center, radius): max_i |c_i| radius^i over the
    // Taylor coefficients at center.
    Gamma gauss_value(const FieldElem& center, const Gamma& radius) const;

    friend Poly operator+(const Poly& a, const Poly& b);
    friend Poly operator-(const Poly& a, const Poly& b);
    friend Poly operator*(const Poly& a, const Poly& b);
    Poly scaled(const FieldElem& c) const;
    friend bool operator==(const Poly& a, const Poly& b) { return a.field_ == b.field_ && a.coeffs_ == b.coeffs_; }

private:
    void trim();
    Field field_;
    std::vector<FieldElem> coeffs_;
};

} // namespace berkline
