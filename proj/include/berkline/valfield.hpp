#pragma once

// Exact arithmetic over the two supported valued fields:
//   (Q, v_p)    rationals with the p-adic valuation,
//   (Q(t), v_t) rational functions with the order of vanishing at t = 0.
//
// Absolute values are kept additively: |x| = eps^w with eps = |p| (resp. |t|),
// so a value is a rational exponent w, or +inf for |0| = 0.

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <variant>
#include <vector>

#include <gmpxx.h>

#include "berkline/error.hpp"

namespace berkline {

using Integer = mpz_class;
using Rational = mpq_class;

Rational make_rational(const Integer& num, const Integer& den);
// "a", "-a/b"; throws Errc::Parse.
Rational parse_rational(const std::string& text);
// Always "num/den" with den >= 1.
std::string rational_json(const Rational& q);
// "num" when den == 1, else "num/den".
std::string rational_pretty(const Rational& q);

Integer floor_div(const Rational& q);
Integer ceil_div(const Rational& q);

// v_p of a nonzero integer / rational.
long padic_order(const Integer& n, unsigned long p);
long padic_order(const Rational& q, unsigned long p);

/// Dense polynomial over Q, coefficients low-to-high, no trailing zeros.
class QPoly {
public:
    QPoly() = default;
    explicit QPoly(std::vector<Rational> coeffs);
    static QPoly constant(const Rational& c);
    static QPoly monomial(const Rational& c, std::size_t degree);

    bool is_zero() const noexcept { return coeffs_.empty(); }
    // -1 for the zero polynomial.
    long degree() const noexcept { return static_cast<long>(coeffs_.size()) - 1; }
    const std::vector<Rational>& coeffs() const noexcept { return coeffs_; }
    Rational coeff(std::size_t i) const;
    const Rational& leading() const;
    // Index of the lowest nonzero coefficient (order of vanishing at 0).
    std::size_t low_order() const;

    Rational eval(const Rational& x) const;
    QPoly monic() const;
    QPoly shift_down(std::size_t k) const; // divide by t^k, exact
    QPoly shift_up(std::size_t k) const;   // multiply by t^k
    QPoly truncated(std::size_t n) const;  // mod t^n

    friend QPoly operator+(const QPoly& a, const QPoly& b);
    friend QPoly operator-(const QPoly& a, const QPoly& b);
    friend QPoly operator*(const QPoly& a, const QPoly& b);
    QPoly operator-() const;
    friend bool operator==(const QPoly& a, const QPoly& b) = default;

    // Euclidean division; throws DivisionByZero on b == 0.
    static void divmod(const QPoly& a, const QPoly& b, QPoly& quot, QPoly& rem);
    // Monic gcd (zero if both are zero).
    static QPoly gcd(QPoly a, QPoly b);

private:
    void trim();
    std::vector<Rational> coeffs_;
};

/// Identifies one of the two base fields. Two elements may only be combined
/// when their fields compare equal (same kind and, for Q_p, same prime).
class Field {
public:
    enum class Kind { Padic, Tadic };

    static Field padic(unsigned long p);
    static Field tadic();

    Kind kind() const noexcept { return kind_; }
    bool is_padic() const noexcept { return kind_ == Kind::Padic; }
    unsigned long prime() const noexcept { return prime_; }
    // "2" style for Q_p, "t" for Q(t); used in multiplicative display p^-w.
    std::string uniformizer_name() const;

    friend bool operator==(const Field&, const Field&) = default;

private:
    Field(Kind kind, unsigned long prime) : kind_(kind), prime_(prime) {}
    Kind kind_ = Kind::Padic;
    unsigned long prime_ = 2;
};

/// Reduced quotient of polynomials in t; denominator monic.
struct RatFunc {
    QPoly num;
    QPoly den;
    friend bool operator==(const RatFunc&, const RatFunc&) = default;
};

class FieldElem {
public:
    // Element of `field` equal to the rational constant q.
    FieldElem(const Field& field, const Rational& q);
    FieldElem(const Field& field, long q);
    // Q(t) element num/den; throws DivisionByZero when den == 0.
    static FieldElem ratfunc(const QPoly& num, const QPoly& den);
    // The uniformizer p (resp. t).
    static FieldElem uniformizer(const Field& field);

    const Field& field() const noexcept { return field_; }
    bool is_zero() const noexcept;
    // Valid for Q_p elements, and for constants of Q(t).
    bool is_rational() const noexcept;
    const Rational& rational() const;
    const RatFunc& ratfunc_value() const;

    FieldElem operator+(const FieldElem& o) const;
    FieldElem operator-(const FieldElem& o) const;
    FieldElem operator*(const FieldElem& o) const;
    FieldElem operator/(const FieldElem& o) const;
    FieldElem operator-() const;
    FieldElem inv() const;
    FieldElem pow(unsigned long n) const;

    friend bool operator==(const FieldElem& a, const FieldElem& b);

    // Deterministic text: "num/den" for Q_p, "{num coeffs}/{den coeffs}" for Q(t).
    std::string key() const;
    std::string pretty() const;

private:
    FieldElem(const Field& field, std::variant<Rational, RatFunc> v)
        : field_(field), value_(std::move(v)) {}
    static RatFunc reduce(QPoly num, QPoly den);
    void check_same(const FieldElem& o) const;

    Field field_;
    std::variant<Rational, RatFunc> value_;
};

std::ostream& operator<<(std::ostream& os, const FieldElem& x);

/// Element of the value monoid Gamma_0 = G u {0}, stored as an exponent.
/// Ordering is the multiplicative one: larger exponent = smaller value,
/// and Zero lies below every Exp(w).
class Gamma {
public:
    Gamma() = default; // the value 1
    static Gamma zero() { Gamma g; g.zero_ = true; return g; }
    static Gamma one() { return Gamma(); }
    static Gamma exp(const Rational& w) { Gamma g; g.w_ = w; return g; }
    static Gamma exp(long w) { return exp(Rational(w)); }

    bool is_zero() const noexcept { return zero_; }
    // Requires !is_zero().
    const Rational& exponent() const;

    Gamma operator*(const Gamma& o) const;
    // Throws DivisionByZero when o is Zero.
    Gamma operator/(const Gamma& o) const;
    // Rational power; negative powers of Zero throw DivisionByZero.
    Gamma pow(const Rational& n) const;

    friend bool operator==(const Gamma& a, const Gamma& b);
    friend std::strong_ordering operator<=>(const Gamma& a, const Gamma& b);

    // Exponent text for JSON: "num/den" or "inf".
    std::string exponent_json() const;
    std::string pretty(const Field& field) const; // "2^-3", "0", "1"

private:
    bool zero_ = false;
    Rational w_{0};
};

Gamma val(const FieldElem& x);
Gamma dist(const FieldElem& x, const FieldElem& y);

/// Canonical representative of the class of x modulo the closed ball
/// {y : |y| <= eps^w}: the p-adic (resp. t-adic) expansion of x truncated to
/// exponents strictly below w.
FieldElem truncate_expansion(const FieldElem& x, const Rational& w);

} // namespace berkline
