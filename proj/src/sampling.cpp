#include "berkline/sampling.hpp"

namespace berkline {

long Sampler::uniform(long lo, long hi) {
    return lo + static_cast<long>(rng_() % static_cast<std::uint64_t>(hi - lo + 1));
}

Rational Sampler::small_rational(long max_num, long max_den) {
    return make_rational(Integer(uniform(-max_num, max_num)), Integer(uniform(1, max_den)));
}

FieldElem Sampler::element(long kmin, long kmax) {
    long k = uniform(kmin, kmax);
    if (field_.is_padic()) {
        Rational q = small_rational(12, 9);
        if (q == 0) return FieldElem(field_, 0L);
        Integer pk;
        mpz_ui_pow_ui(pk.get_mpz_t(), field_.prime(), static_cast<unsigned long>(k < 0 ? -k : k));
        return FieldElem(field_, k < 0 ? Rational(q / pk) : Rational(q * pk));
    }
    if (uniform(0, 9) == 0) return FieldElem(field_, 0L);
    std::vector<Rational> num, den{Rational(1)};
    for (long i = 0, n = uniform(0, 2); i <= n; ++i) num.push_back(small_rational(5, 3));
    if (num.front() == 0) num.front() = 1;
    for (long i = 0, n = uniform(0, 1); i < n; ++i) den.push_back(small_rational(3, 2));
    FieldElem x = FieldElem::ratfunc(QPoly(num), QPoly(den));
    FieldElem t = FieldElem::uniformizer(field_);
    return k < 0 ? x / t.pow(static_cast<unsigned long>(-k)) : x * t.pow(static_cast<unsigned long>(k));
}

Gamma Sampler::radius() {
    if (uniform(0, 4) == 0) return Gamma::zero();
    return Gamma::exp(make_rational(Integer(uniform(-3, 4)), Integer(uniform(1, 3))));
}

BallPoint Sampler::affine_point() { return BallPoint::eta(element(), radius()); }

BallPoint Sampler::point() {
    if (uniform(0, 11) == 0) return BallPoint::infinity(field_);
    return affine_point();
}

Gamma Sampler::time() {
    switch (uniform(0, 9)) {
    case 0: return Gamma::zero();
    case 1: return Gamma::one();
    default: return Gamma::exp(make_rational(Integer(uniform(0, 6)), Integer(uniform(1, 2))));
    }
}

Poly Sampler::split_poly(long max_degree, std::vector<FieldElem>* roots) {
    FieldElem scale = element(-1, 1);
    while (scale.is_zero()) scale = element(-1, 1);
    Poly f(field_, {scale});
    for (long i = 0, n = uniform(1, max_degree); i < n; ++i) {
        FieldElem r = element(-1, 2);
        if (roots) roots->push_back(r);
        f = f * Poly::linear_factor(r);
    }
    return f;
}

} // namespace berkline
