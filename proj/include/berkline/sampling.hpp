#pragma once
// Seeded generators for the property checks and the CLI grids. Same seed,
// same sequence, on every platform (mt19937_64 draws reduced with %).

#include <cstdint>
#include <random>
#include <vector>

#include "berkline/ballpoint.hpp"
#include "berkline/poly.hpp"

namespace berkline {

class Sampler {
public:
    Sampler(Field field, std::uint64_t seed) : field_(field), rng_(seed) {}

    const Field& field() const noexcept { return field_; }

    // Integer in [lo, hi].
    long uniform(long lo, long hi);
    Rational small_rational(long max_num, long max_den);
    // p^k * a/b (resp. t^k * small rational function) with k in [kmin, kmax].
    FieldElem element(long kmin = -2, long kmax = 3);
    Gamma radius();
    // Simple points, balls and (rarely) infinity.
    BallPoint point();
    BallPoint affine_point();
    // A time in [0; 1], including both ends now and then.
    Gamma time();
    // scale * prod (u - r_i), deg in [1, max_degree].
    Poly split_poly(long max_degree, std::vector<FieldElem>* roots = nullptr);

private:
    Field field_;
    std::mt19937_64 rng_;
};

} // namespace berkline
