#include <gtest/gtest.h>

#include "berkline/gamma.hpp"
#include "berkline/sampling.hpp"

using namespace berkline;

namespace {

Gamma E(long n, long d = 1) { return Gamma::exp(make_rational(Integer(n), Integer(d))); }
const Gamma Z = Gamma::zero();
const Gamma ONE = Gamma::one();

GeneralizedSegment seg(const Gamma& from, const Gamma& to) { return GeneralizedSegment(Interval::path(from, to)); }

// max(|2| r, r^2) over Q_2
PiecewiseMonomial two_r_or_square() {
    return PiecewiseMonomial::max_envelope({Monomial{E(1), Rational(1)}, Monomial{ONE, Rational(2)}});
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

TEST(SegmentConcat, ZeroToOneAndBack) {
    GeneralizedSegment s = segment_concat(seg(Z, ONE), seg(ONE, Z));
    ASSERT_EQ(s.pieces().size(), 2u);
    EXPECT_TRUE(s.origin().is_zero());
    EXPECT_TRUE(s.extremity().is_zero());
    // The reversed piece would have to be inverted through 0.
    EXPECT_FALSE(s.normalized().has_value());
}

TEST(SegmentConcat, IdentificationThroughZeroIsNotNormalized) {
    GeneralizedSegment s = segment_concat(seg(Z, ONE), seg(Z, ONE));
    ASSERT_EQ(s.identifications().size(), 1u);
    EXPECT_EQ(s.identifications()[0].first, ONE);
    EXPECT_TRUE(s.identifications()[0].second.is_zero());
    EXPECT_FALSE(s.normalized().has_value());
    EXPECT_TRUE(s.reparams().empty());
}

TEST(SegmentConcat, NonzeroEndsNormalize) {
    const Gamma eps = E(3), delta = E(2);
    GeneralizedSegment s = segment_concat(seg(eps, ONE), seg(ONE, delta));
    ASSERT_TRUE(s.normalized().has_value());
    const Interval& n = *s.normalized();
    EXPECT_EQ(n.origin(), eps);
    // The second piece is glued with r -> 1/r, so delta lands on 1/delta.
    EXPECT_EQ(n.extremity(), ONE / delta);
    ASSERT_EQ(s.reparams().size(), 2u);
    EXPECT_EQ(s.reparams()[1].apply(ONE), ONE);
    EXPECT_EQ(s.reparams()[1].apply(delta), n.extremity());
}

TEST(SegmentConcat, SameDirectionGluesBySimilarity) {
    GeneralizedSegment s = segment_concat(seg(E(4), E(2)), seg(E(1), E(-1)));
    ASSERT_TRUE(s.normalized().has_value());
    EXPECT_EQ(s.normalized()->origin(), E(4));
    EXPECT_EQ(s.normalized()->extremity(), E(0));
    for (std::size_t k = 0; k < s.pieces().size(); ++k) {
        const auto& m = s.reparams()[k];
        const auto& p = s.pieces()[k];
        EXPECT_TRUE(s.normalized()->contains(m.apply(p.lo)));
        EXPECT_TRUE(s.normalized()->contains(m.apply(p.hi)));
    }
}

TEST(SegmentConcat, Associative) {
    Sampler rng(Field::padic(2), 99);
    for (int i = 0; i < 200; ++i) {
        auto r = [&] { return rng.uniform(0, 5) == 0 ? Z : E(rng.uniform(-4, 4)); };
        GeneralizedSegment a = seg(r(), r()), b = seg(r(), r()), c = seg(r(), r());
        EXPECT_EQ(segment_concat(segment_concat(a, b), c), segment_concat(a, segment_concat(b, c)));
    }
}

TEST(SegmentConcat, NormalizedEndpointsMatchGluing) {
    Sampler rng(Field::padic(3), 5);
    for (int i = 0; i < 200; ++i) {
        std::vector<Interval> pieces;
        for (long k = 0, n = rng.uniform(1, 4); k < n; ++k)
            pieces.push_back(Interval::path(E(rng.uniform(-4, 4)), E(rng.uniform(-4, 4))));
        GeneralizedSegment s(pieces);
        ASSERT_TRUE(s.normalized().has_value());
        const auto& maps = s.reparams();
        EXPECT_EQ(maps.front().apply(s.origin()), s.normalized()->origin());
        EXPECT_EQ(maps.back().apply(s.extremity()), s.normalized()->extremity());
        for (std::size_t k = 0; k + 1 < pieces.size(); ++k)
            EXPECT_EQ(maps[k].apply(pieces[k].extremity()), maps[k + 1].apply(pieces[k + 1].origin()));
    }
}

TEST(Interval, Validation) {
    expect_errc(Errc::InvalidArgument, [] { GeneralizedSegment(std::vector<Interval>{}); });
    expect_errc(Errc::InvalidArgument, [] { GeneralizedSegment(Interval{ONE, E(2)}); });
}

TEST(PwEval, Examples) {
    EXPECT_EQ(pw_eval(two_r_or_square(), E(3)), E(4));
    EXPECT_EQ(pw_eval(PiecewiseMonomial::identity(), E(7, 3)), E(7, 3));
    auto f = PiecewiseMonomial::max_envelope({Monomial{ONE, Rational(1)}, Monomial{ONE, Rational(2)}});
    EXPECT_EQ(pw_eval(f, ONE), ONE);
    EXPECT_TRUE(pw_eval(two_r_or_square(), Z).is_zero());
}

TEST(PwEval, EnvelopeBreakpoint) {
    auto f = two_r_or_square();
    ASSERT_EQ(f.breaks().size(), 1u);
    EXPECT_EQ(f.breaks()[0], E(1));
    EXPECT_EQ(f.pieces()[0], (Monomial{E(1), Rational(1)}));
    EXPECT_EQ(f.pieces()[1], (Monomial{ONE, Rational(2)}));
}

TEST(PwEval, OutOfDomain) {
    PiecewiseMonomial f({}, {Monomial{ONE, Rational(1)}}, E(2), E(0));
    EXPECT_EQ(f.eval(E(1)), E(1));
    expect_errc(Errc::OutOfDomain, [&] { f.eval(E(3)); });
    expect_errc(Errc::OutOfDomain, [&] { f.eval(E(-1)); });
}

TEST(PwInvert, Examples) {
    EXPECT_EQ(pw_invert(two_r_or_square(), E(2)), E(1));
    auto sq = PiecewiseMonomial({}, {Monomial{ONE, Rational(2)}});
    EXPECT_EQ(pw_invert(sq, ONE), ONE);
    EXPECT_EQ(pw_invert(two_r_or_square(), E(4)), E(3));
}

TEST(PwInvert, Errors) {
    PiecewiseMonomial flat({E(0)}, {Monomial{ONE, Rational(1)}, Monomial{ONE, Rational(0)}});
    expect_errc(Errc::NotInvertible, [&] { flat.invert(ONE); });
    expect_errc(Errc::NotInvertible, [&] { flat.inverse(); });
    PiecewiseMonomial bounded({}, {Monomial{ONE, Rational(1)}}, Z, ONE);
    expect_errc(Errc::NotInImage, [&] { bounded.invert(E(-1)); });
    expect_errc(Errc::InvalidArgument, [] {
        PiecewiseMonomial({E(1)}, {Monomial{ONE, Rational(1)}, Monomial{ONE, Rational(2)}});
    });
}

TEST(PwInvert, RoundTripOnGrids) {
    Sampler rng(Field::padic(2), 7);
    for (int m = 0; m < 8; ++m) {
        std::vector<Monomial> terms;
        for (long i = 1, n = rng.uniform(1, 6); i <= n; ++i)
            if (rng.uniform(0, 3) != 0 || i == n)
                terms.push_back(Monomial{E(rng.uniform(-3, 5), rng.uniform(1, 2)), Rational(i)});
        auto f = PiecewiseMonomial::max_envelope(terms);
        ASSERT_TRUE(f.strictly_increasing());
        auto g = f.inverse();
        for (int k = 0; k < 1000; ++k) {
            Gamma r = E(rng.uniform(-40, 40), rng.uniform(1, 6));
            Gamma s = f.eval(r);
            EXPECT_EQ(f.invert(s), r);
            EXPECT_EQ(g.eval(s), r);
            EXPECT_EQ(f.eval(f.invert(r)), r);
        }
    }
}

TEST(PwEval, ContinuousAtBreaks) {
    Sampler rng(Field::padic(5), 11);
    for (int m = 0; m < 100; ++m) {
        std::vector<Monomial> terms;
        for (long i = 1; i <= 5; ++i) terms.push_back(Monomial{E(rng.uniform(-3, 6)), Rational(i)});
        auto f = PiecewiseMonomial::max_envelope(terms);
        for (std::size_t k = 0; k < f.breaks().size(); ++k) {
            const Gamma& b = f.breaks()[k];
            EXPECT_EQ(f.pieces()[k].eval(b), f.pieces()[k + 1].eval(b));
            // The envelope is the pointwise max of the terms.
            Gamma direct = Z;
            for (const auto& t : terms) direct = std::max(direct, t.eval(b));
            EXPECT_EQ(f.eval(b), direct);
        }
    }
}
