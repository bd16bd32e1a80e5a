#include <gtest/gtest.h>

#include "berkline/padic_roots.hpp"
#include "berkline/sampling.hpp"
#include "oracles.hpp"

using namespace berkline;

namespace {

std::vector<Rational> R(std::vector<long> c) {
    std::vector<Rational> r;
    for (long x : c) r.emplace_back(x);
    return r;
}

Integer ipow(unsigned long p, unsigned long k) {
    Integer r;
    mpz_ui_pow_ui(r.get_mpz_t(), p, k);
    return r;
}

// f(a) evaluated exactly, then reduced: true iff p^N divides it.
bool residual_ok(const std::vector<Rational>& f, const Rational& a, unsigned long p, long N) {
    Rational acc(0);
    for (auto it = f.rbegin(); it != f.rend(); ++it) acc = acc * a + *it;
    if (acc == 0) return true;
    Integer m = ipow(p, static_cast<unsigned long>(N));
    Rational scaled = acc / Rational(m);
    // p^N | f(a) iff f(a)/p^N has no p in its denominator.
    return scaled.get_den() % p != 0;
}

std::vector<Rational> from_roots(const std::vector<Rational>& roots, const Rational& scale) {
    std::vector<Rational> f{scale};
    for (const auto& r : roots) {
        std::vector<Rational> g(f.size() + 1, Rational(0));
        for (std::size_t i = 0; i < f.size(); ++i) {
            g[i + 1] += f[i];
            g[i] -= f[i] * r;
        }
        f = g;
    }
    return f;
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

TEST(NewtonPolygon, Examples) {
    auto np = newton_polygon(R({-4, 0, 1}), 2);
    ASSERT_EQ(np.slopes.size(), 1u);
    EXPECT_EQ(np.root_valuations(), (std::vector<Rational>{Rational(1), Rational(1)}));
    EXPECT_EQ(newton_polygon(R({-1, 1}), 2).root_valuations(), (std::vector<Rational>{Rational(0)}));
    // u^2 - 2u = u (u - 2): the root 0 shows up as the polygon starting at i = 1.
    auto z = newton_polygon(R({0, -2, 1}), 2);
    EXPECT_EQ(z.vertices.front().i, 1);
    EXPECT_EQ(z.root_valuations(), (std::vector<Rational>{Rational(1)}));
    // Lower convexity on a three-slope example.
    auto three = newton_polygon(R({8, 0, 2, 1}), 2);
    EXPECT_EQ(three.root_valuations().size(), 3u);
    for (std::size_t k = 0; k + 1 < three.slopes.size(); ++k) EXPECT_LT(three.slopes[k].slope, three.slopes[k + 1].slope);
    expect_errc(Errc::InvalidArgument, [] { newton_polygon(std::vector<Rational>{}, 2); });
}

TEST(NewtonPolygon, SlopesMatchRationalRootValuations) {
    for (unsigned long p : {2UL, 3UL, 5UL}) {
        Sampler rng(Field::padic(p), 9 + p);
        for (int i = 0; i < 100; ++i) {
            std::vector<Rational> roots;
            for (long k = 0, n = rng.uniform(1, 5); k < n; ++k) roots.push_back(rng.element().rational());
            auto f = from_roots(roots, rng.small_rational(5, 5) + Rational(6));
            std::vector<Rational> expect;
            for (const auto& r : roots)
                if (r != 0) expect.push_back(Rational(*oracle::vp(r, p)));
            std::sort(expect.begin(), expect.end());
            EXPECT_EQ(newton_polygon(f, p).root_valuations(), expect);
            std::vector<Rational> found;
            for (const auto& [r, m] : rational_roots(f))
                for (int j = 0; j < m; ++j) found.push_back(r);
            std::sort(roots.begin(), roots.end());
            EXPECT_EQ(found, roots);
        }
    }
}

TEST(Hensel, SquareRootOfTwoOverQ7) {
    auto f = R({-2, 0, 1});
    CappedPadic a = hensel_lift(f, 7, Rational(3), 10);
    EXPECT_TRUE(residual_ok(f, a.representative(), 7, 10));
    EXPECT_EQ(Integer(a.representative().get_num() % 7), 3);
    CappedPadic b = hensel_lift(f, 7, Rational(4), 10);
    EXPECT_TRUE(residual_ok(f, b.representative(), 7, 10));
    EXPECT_FALSE(a.agrees_mod(b, 1));
}

TEST(Hensel, LinearAndErrors) {
    CappedPadic c = hensel_lift(R({-5, 1}), 3, Rational(2), 6);
    EXPECT_TRUE(residual_ok(R({-5, 1}), c.representative(), 3, 6));
    EXPECT_TRUE(c.agrees_mod(CappedPadic(3, Rational(5), 6), 6));
    CappedPadic exact = hensel_lift(R({-1, 3}), 5, make_rational(1, 3), 4);
    EXPECT_TRUE(exact.agrees_mod(CappedPadic(5, make_rational(1, 3), 4), 4));
    expect_errc(Errc::CriterionFails, [] { hensel_lift({Rational(-2), Rational(0), Rational(1)}, 2, Rational(0), 8); });
    expect_errc(Errc::CriterionFails, [] { hensel_lift({Rational(-2), Rational(0), Rational(1)}, 2, Rational(1), 8); });
    expect_errc(Errc::CriterionFails, [] { hensel_lift({Rational(-2), Rational(0), Rational(1)}, 7, Rational(1), 8); });
}

TEST(Hensel, ResidualsAndPrecisionMonotonicity) {
    // Quadratics u^2 - c with c a nonzero square mod p.
    for (unsigned long p : {3UL, 5UL, 7UL, 11UL, 13UL}) {
        for (long a0 = 1; a0 < static_cast<long>(p); ++a0) {
            for (long shift = 0; shift < 3; ++shift) {
                long c = a0 * a0 + shift * static_cast<long>(p);
                auto f = R({-c, 0, 1});
                CappedPadic lo = hensel_lift(f, p, Rational(a0), 5);
                CappedPadic hi = hensel_lift(f, p, Rational(a0), 14);
                EXPECT_TRUE(residual_ok(f, lo.representative(), p, 5));
                EXPECT_TRUE(residual_ok(f, hi.representative(), p, 14));
                EXPECT_TRUE(lo.agrees_mod(hi, 5));
                EXPECT_TRUE(lo.agrees_mod(CappedPadic(p, Rational(a0), 5), 1));
            }
        }
    }
    // sqrt(17) in Q_2: v(f(1)) = 4 > 2 v(f'(1)) = 2.
    auto g = R({-17, 0, 1});
    CappedPadic r = hensel_lift(g, 2, Rational(1), 20);
    EXPECT_TRUE(residual_ok(g, r.representative(), 2, 20));
    EXPECT_TRUE(hensel_lift(g, 2, Rational(1), 8).agrees_mod(r, 7));
}

TEST(RationalRoots, Examples) {
    EXPECT_EQ(rational_roots(R({-1, 0, 1})), (std::vector<std::pair<Rational, int>>{{Rational(-1), 1}, {Rational(1), 1}}));
    EXPECT_EQ(rational_roots(R({-2, -3, 0, 1})),
              (std::vector<std::pair<Rational, int>>{{Rational(-1), 2}, {Rational(2), 1}}));
    EXPECT_TRUE(rational_roots(R({-2, 0, 1})).empty());
    EXPECT_EQ(rational_roots({make_rational(-1, 4), Rational(0), Rational(1)}),
              (std::vector<std::pair<Rational, int>>{{make_rational(-1, 2), 1}, {make_rational(1, 2), 1}}));
    EXPECT_EQ(rational_roots(R({0, 0, 1})), (std::vector<std::pair<Rational, int>>{{Rational(0), 2}}));
}

TEST(PadicRoots, Report) {
    auto rep = padic_roots(R({-2, 0, 1}), 7, 10);
    EXPECT_TRUE(rep.rational.empty());
    ASSERT_EQ(rep.lifted.size(), 2u);
    for (const auto& r : rep.lifted) {
        EXPECT_GE(r.certified, 10);
        EXPECT_TRUE(residual_ok(R({-2, 0, 1}), r.value.representative(), 7, 10));
    }
    EXPECT_EQ(rep.unresolved, 0);

    auto none = padic_roots(R({-2, 0, 1}), 2, 10);
    EXPECT_TRUE(none.lifted.empty());
    EXPECT_EQ(none.unresolved, 0);

    // (u - 1)(u^2 - 2) over Q_7: one rational root and two lifted ones.
    auto mixed = padic_roots(R({2, -2, -1, 1}), 7, 8);
    EXPECT_EQ(mixed.rational, (std::vector<std::pair<Rational, int>>{{Rational(1), 1}}));
    EXPECT_EQ(mixed.lifted.size(), 2u);

    // 49 u^2 - 2 has roots sqrt(2)/7 of valuation -1.
    auto neg = padic_roots(R({-2, 0, 49}), 7, 6);
    ASSERT_EQ(neg.lifted.size(), 2u);
    for (const auto& r : neg.lifted) EXPECT_EQ(r.value.valuation(), -1);

    expect_errc(Errc::InvalidArgument, [] { padic_roots(R({-2, 0, 1}), 6, 10); });
    expect_errc(Errc::InvalidArgument, [] { padic_roots(R({-2, 0, 1}), 7, 0); });
}

TEST(SplitRoots, Cases) {
    const Field Q2 = Field::padic(2);
    auto lin = split_roots(Poly::from_rationals(Q2, R({-3, 2})));
    ASSERT_TRUE(lin.has_value());
    EXPECT_EQ(lin->front().first, FieldElem(Q2, make_rational(3, 2)));
    EXPECT_FALSE(split_roots(Poly::from_rationals(Q2, R({-2, 0, 1}))).has_value());
    auto sq = split_roots(Poly::from_rationals(Q2, R({1, -2, 1})));
    ASSERT_TRUE(sq.has_value());
    EXPECT_EQ(sq->size(), 1u);
    EXPECT_EQ(sq->front().second, 2);
}
