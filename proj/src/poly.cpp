#include "berkline/poly.hpp"

#include <algorithm>

namespace berkline {

Poly::Poly(const Field& field, std::vector<FieldElem> coeffs) : field_(field), coeffs_(std::move(coeffs)) {
    for (const auto& c : coeffs_)
        if (!(c.field() == field_)) fail(Errc::MixedFields, "polynomial coefficient over a different field");
    trim();
}

Poly Poly::from_rationals(const Field& field, const std::vector<Rational>& coeffs) {
    std::vector<FieldElem> v;
    v.reserve(coeffs.size());
    for (const auto& q : coeffs) v.emplace_back(field, q);
    return Poly(field, std::move(v));
}

Poly Poly::linear_factor(const FieldElem& a) {
    return Poly(a.field(), {-a, FieldElem(a.field(), 1L)});
}

void Poly::trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

FieldElem Poly::coeff(std::size_t i) const {
    return i < coeffs_.size() ? coeffs_[i] : FieldElem(field_, 0L);
}

const FieldElem& Poly::leading() const {
    if (coeffs_.empty()) fail(Errc::InvalidArgument, "leading coefficient of the zero polynomial");
    return coeffs_.back();
}

bool Poly::has_rational_coeffs() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const FieldElem& c) { return c.is_rational(); });
}

std::vector<Rational> Poly::rational_coeffs() const {
    std::vector<Rational> v;
    for (const auto& c : coeffs_) v.push_back(c.rational());
    return v;
}

FieldElem Poly::eval(const FieldElem& x) const {
    FieldElem acc(field_, 0L);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

Poly Poly::derivative() const {
    std::vector<FieldElem> v;
    for (std::size_t i = 1; i < coeffs_.size(); ++i)
        v.push_back(coeffs_[i] * FieldElem(field_, static_cast<long>(i)));
    return Poly(field_, std::move(v));
}

std::vector<FieldElem> Poly::taylor_shift(const FieldElem& a) const {
    std::vector<FieldElem> work(coeffs_);
    const std::size_t n = work.size();
    for (std::size_t k = 0; k + 1 < n; ++k)
        for (std::size_t i = n - 1; i > k; --i) work[i - 1] = work[i - 1] + a * work[i];
    return work;
}

Poly Poly::compose(const Poly& q) const {
    Poly acc(field_);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * q + Poly(field_, {*it});
    return acc;
}

Gamma Poly::gauss_value(const FieldElem& center, const Gamma& radius) const {
    Gamma best = Gamma::zero();
    auto c = taylor_shift(center);
    for (std::size_t i = 0; i < c.size(); ++i)
        best = std::max(best, val(c[i]) * radius.pow(Rational(static_cast<long>(i))));
    return best;
}

Poly operator+(const Poly& a, const Poly& b) {
    if (!(a.field_ == b.field_)) fail(Errc::MixedFields, "polynomials over different fields");
    std::vector<FieldElem> v;
    std::size_t n = std::max(a.coeffs_.size(), b.coeffs_.size());
    for (std::size_t i = 0; i < n; ++i) v.push_back(a.coeff(i) + b.coeff(i));
    return Poly(a.field_, std::move(v));
}

Poly operator-(const Poly& a, const Poly& b) { return a + b.scaled(FieldElem(b.field_, -1L)); }

Poly operator*(const Poly& a, const Poly& b) {
    if (!(a.field_ == b.field_)) fail(Errc::MixedFields, "polynomials over different fields");
    if (a.is_zero() || b.is_zero()) return Poly(a.field_);
    std::vector<FieldElem> v(a.coeffs_.size() + b.coeffs_.size() - 1, FieldElem(a.field_, 0L));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) v[i + j] = v[i + j] + a.coeffs_[i] * b.coeffs_[j];
    return Poly(a.field_, std::move(v));
}

Poly Poly::scaled(const FieldElem& c) const {
    std::vector<FieldElem> v;
    for (const auto& x : coeffs_) v.push_back(x * c);
    return Poly(field_, std::move(v));
}

} // namespace berkline
