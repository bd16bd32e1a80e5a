#include <gtest/gtest.h>

#include "berkline/sampling.hpp"
#include "berkline/valfield.hpp"
#include "oracles.hpp"

using namespace berkline;

namespace {

const Field Q2 = Field::padic(2);
const Field Q5 = Field::padic(5);
const Field QT = Field::tadic();

FieldElem q(const Field& F, long n, long d = 1) { return FieldElem(F, make_rational(Integer(n), Integer(d))); }

FieldElem tpoly(std::vector<Rational> num, std::vector<Rational> den = {Rational(1)}) {
    return FieldElem::ratfunc(QPoly(std::move(num)), QPoly(std::move(den)));
}

template <class F>
void expect_errc(Errc want, F&& f) {
    try {
        f();
        ADD_FAILURE() << "expected " << errc_name(want);
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), want) << e.what();
    }
}

} // namespace

TEST(Val, TwelveOverQ2) { EXPECT_EQ(val(q(Q2, 12)), Gamma::exp(2)); }

TEST(Val, ZeroIsAbsorbing) {
    EXPECT_TRUE(val(q(Q2, 0)).is_zero());
    EXPECT_TRUE(val(FieldElem(QT, 0L)).is_zero());
    EXPECT_EQ(Gamma::zero() * Gamma::exp(-5), Gamma::zero());
}

TEST(Val, TCubedOverOnePlusT) {
    EXPECT_EQ(val(tpoly({0, 0, 0, 1}, {1, 1})), Gamma::exp(3));
}

TEST(Val, GammaOrderIsMultiplicative) {
    EXPECT_LT(Gamma::exp(3), Gamma::exp(1));
    EXPECT_LT(Gamma::zero(), Gamma::exp(100));
    EXPECT_LT(Gamma::exp(0), Gamma::exp(-1));
    EXPECT_EQ(Gamma::exp(2) * Gamma::exp(-3), Gamma::exp(-1));
    EXPECT_EQ(Gamma::exp(make_rational(3, 2)).pow(Rational(2)), Gamma::exp(3));
}

TEST(FieldOps, Examples) {
    EXPECT_EQ(q(Q2, 1, 3) + q(Q2, 1, 6), q(Q2, 1, 2));
    EXPECT_EQ(q(Q5, 2) * q(Q5, 1, 2), q(Q5, 1));
    FieldElem x = tpoly({0, 1}, {1, 1}); // t/(1+t)
    EXPECT_EQ(x.inv(), tpoly({1, 1}, {0, 1}));
    EXPECT_EQ(x.inv().ratfunc_value().den, QPoly({0, 1}));
}

TEST(FieldOps, ReducedRepresentation) {
    // (t^2 - 1)/(2t - 2) = (t + 1)/2, with monic denominator
    FieldElem x = tpoly({-1, 0, 1}, {-2, 2});
    EXPECT_EQ(x.ratfunc_value().num, QPoly({make_rational(1, 2), make_rational(1, 2)}));
    EXPECT_EQ(x.ratfunc_value().den, QPoly({1}));
    EXPECT_EQ(q(Q2, 6, 4).rational(), make_rational(3, 2));
}

TEST(FieldOps, Errors) {
    expect_errc(Errc::DivisionByZero, [] { q(Q2, 0).inv(); });
    expect_errc(Errc::DivisionByZero, [] { (void)(q(Q2, 1) / q(Q2, 0)); });
    expect_errc(Errc::MixedFields, [] { (void)(q(Q2, 1) + q(Q5, 1)); });
    expect_errc(Errc::MixedFields, [] { (void)(q(Q2, 1) * FieldElem(QT, 1L)); });
    expect_errc(Errc::MixedFields, [] { dist(q(Q2, 1), q(Q5, 1)); });
    expect_errc(Errc::InvalidArgument, [] { Field::padic(4); });
    expect_errc(Errc::InvalidArgument, [] { Field::padic(1); });
    expect_errc(Errc::Parse, [] { parse_rational("1/"); });
    expect_errc(Errc::Parse, [] { parse_rational("1/0"); });
}

TEST(Dist, Examples) {
    EXPECT_EQ(dist(q(Q2, 1), q(Q2, 3)), Gamma::exp(1));
    EXPECT_TRUE(dist(q(Q2, 7), q(Q2, 7)).is_zero());
    EXPECT_EQ(dist(q(Q5, 1, 5), q(Q5, 0)), Gamma::exp(-1));
}

TEST(Rationals, TextForms) {
    EXPECT_EQ(rational_json(Rational(4)), "4/1");
    EXPECT_EQ(rational_json(make_rational(-6, 4)), "-3/2");
    EXPECT_EQ(parse_rational("-3/6"), make_rational(-1, 2));
    EXPECT_EQ(parse_rational("7"), Rational(7));
    EXPECT_EQ(Gamma::exp(3).pretty(Q2), "2^-3");
    EXPECT_EQ(Gamma::exp(-1).pretty(Q2), "2^1");
    EXPECT_EQ(Gamma::zero().exponent_json(), "inf");
}

TEST(TruncateExpansion, PadicAndTadic) {
    EXPECT_EQ(truncate_expansion(q(Q2, 5), Rational(2)), q(Q2, 1));
    EXPECT_EQ(truncate_expansion(q(Q2, 12), Rational(2)), q(Q2, 0));
    // 1/(1-t) = 1 + t + t^2 + ...
    EXPECT_EQ(truncate_expansion(tpoly({1}, {1, -1}), Rational(3)), tpoly({1, 1, 1}));
    FieldElem x = q(Field::padic(3), 1, 2);
    FieldElem y = truncate_expansion(x, Rational(1));
    EXPECT_EQ(y, q(Field::padic(3), 2));
}

// Properties over many seeded samples.

class ValProperties : public ::testing::TestWithParam<int> {};

TEST_P(ValProperties, UltrametricMultiplicativeStrictTriangle) {
    Field F = GetParam() == 0 ? Field::tadic() : Field::padic(static_cast<unsigned long>(GetParam()));
    Sampler s(F, 1234 + static_cast<std::uint64_t>(GetParam()));
    for (int i = 0; i < 2500; ++i) {
        FieldElem x = s.element(), y = s.element(), z = s.element();
        EXPECT_EQ(val(x), oracle::abs_of(x));
        EXPECT_LE(dist(x, z), std::max(dist(x, y), dist(y, z)));
        EXPECT_EQ(val(x * y), val(x) * val(y));
        if (!(val(x) == val(y))) EXPECT_EQ(val(x + y), std::max(val(x), val(y)));
        EXPECT_EQ(dist(x, y), dist(y, x));
    }
}

INSTANTIATE_TEST_SUITE_P(Fields, ValProperties, ::testing::Values(2, 3, 5, 0));
