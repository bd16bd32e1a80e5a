#include <gtest/gtest.h>

#include "berkline/sampling.hpp"
#include "berkline/skeleton.hpp"
#include "oracles.hpp"

using namespace berkline;

namespace {

const Field Q2 = Field::padic(2);

Gamma E(long n) { return Gamma::exp(n); }
FieldElem q(const Field& F, long n) { return FieldElem(F, n); }
BallPoint pt(long c) { return BallPoint::simple(q(Q2, c)); }
BallPoint eta(long c, const Gamma& r) { return BallPoint::eta(q(Q2, c), r); }

bool same_vertex_set(const std::vector<BallPoint>& a, const std::vector<BallPoint>& b) {
    if (a.size() != b.size()) return false;
    for (const auto& x : a)
        if (std::none_of(b.begin(), b.end(), [&](const BallPoint& y) { return point_eq(x, y); })) return false;
    return true;
}

std::vector<BallPoint> with_gauss(std::vector<BallPoint> v) {
    v.push_back(BallPoint::gauss(v.front().field()));
    return v;
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

TEST(Hull, ZeroInfinityGaussIsTheCenterZeroRay) {
    Skeleton s = Skeleton::hull({pt(0), BallPoint::infinity(Q2)}, true);
    ASSERT_EQ(s.vertices().size(), 3u);
    EXPECT_TRUE(point_eq(s.vertices()[0], BallPoint::gauss(Q2)));
    EXPECT_TRUE(point_eq(s.vertices()[1], pt(0)));
    EXPECT_TRUE(s.vertices()[2].is_infinity());
    EXPECT_EQ(s.marked(), (std::vector<bool>{false, true, true}));
    EXPECT_TRUE(s.is_tree());
    for (long w = -6; w <= 6; ++w) EXPECT_TRUE(s.contains(eta(0, E(w))));
    EXPECT_FALSE(s.contains(eta(1, E(1))));
    EXPECT_FALSE(s.contains(pt(4)));
}

TEST(Hull, SinglePoint) {
    Skeleton s = Skeleton::hull({pt(3)}, false);
    EXPECT_EQ(s.vertices().size(), 1u);
    EXPECT_TRUE(s.edges().empty());
    EXPECT_TRUE(s.is_tree());
    Skeleton d = Skeleton::hull({pt(3), pt(3), eta(3, Gamma::zero())}, false);
    EXPECT_EQ(d.vertices().size(), 1u);
}

TEST(Hull, FourPointsAgainstJoinClosure) {
    std::vector<BallPoint> input{pt(0), pt(1), pt(2), BallPoint::infinity(Q2)};
    Skeleton s = Skeleton::hull(input, true);
    auto expected = oracle::join_closure(with_gauss(input));
    EXPECT_TRUE(same_vertex_set(s.vertices(), expected));
    // Gauss = join(0, 1) is the branch point; eta(0, 2^-1) = join(0, 2).
    EXPECT_TRUE(s.vertex_index(BallPoint::gauss(Q2)).has_value());
    EXPECT_TRUE(s.vertex_index(eta(0, E(1))).has_value());
    EXPECT_EQ(s.vertices().size(), 6u);
    EXPECT_TRUE(s.is_tree());
}

TEST(Hull, Errors) {
    expect_errc(Errc::InvalidArgument, [] { Skeleton::hull({}, true); });
    expect_errc(Errc::MixedFields, [] { Skeleton::hull({pt(0), BallPoint::gauss(Field::padic(3))}, false); });
}

TEST(Hull, PropertiesOnRandomSets) {
    for (Field F : {Field::padic(2), Field::padic(3), Field::tadic()}) {
        Sampler rng(F, 77);
        for (int trial = 0; trial < 60; ++trial) {
            std::vector<BallPoint> pts;
            for (long i = 0, n = rng.uniform(1, 6); i < n; ++i) pts.push_back(rng.point());
            Skeleton s = Skeleton::hull(pts, true);
            ASSERT_TRUE(s.is_tree());
            EXPECT_TRUE(same_vertex_set(s.vertices(), oracle::join_closure(with_gauss(pts))));
            // Idempotence: the hull of its own vertices is itself.
            Skeleton again = Skeleton::hull(s.vertices(), true);
            EXPECT_TRUE(same_vertex_set(again.vertices(), s.vertices()));
            EXPECT_EQ(again.edges().size(), s.edges().size());
            // Every input is a vertex and sorted order is canonical.
            for (const auto& p : pts) EXPECT_TRUE(s.vertex_index(p).has_value());
            for (std::size_t i = 0; i + 1 < s.vertices().size(); ++i)
                EXPECT_TRUE(canonical_less(s.vertices()[i], s.vertices()[i + 1]));
            // Membership agrees with the path oracle on sampled points.
            for (int k = 0; k < 40; ++k) {
                BallPoint z = rng.point();
                EXPECT_EQ(s.contains(z), oracle::in_tree(z, s.vertices())) << point_pretty(z);
            }
            // Points on pairwise paths are in the skeleton.
            for (const auto& a : pts)
                for (const auto& b : pts) {
                    SegmentPath path = segment_between(a, b);
                    for (const auto& leg : path.legs) {
                        EXPECT_TRUE(s.contains(leg.at(leg.radii.lo)));
                        EXPECT_TRUE(s.contains(leg.at(leg.radii.hi)));
                    }
                }
        }
    }
}

TEST(Project, Examples) {
    Skeleton T = Skeleton::hull({pt(0), BallPoint::infinity(Q2)}, true);
    BallPoint in = eta(0, E(3));
    EXPECT_TRUE(point_eq(project(in, T), in));
    EXPECT_TRUE(point_eq(project(eta(3, E(2)), T), BallPoint::gauss(Q2)));
    EXPECT_TRUE(point_eq(project(eta(4, E(3)), T), eta(0, E(2))));
}

TEST(Project, MissesPath) {
    Skeleton T = Skeleton::hull({pt(1)}, false);
    expect_errc(Errc::SkeletonMissesPath, [&] { project(pt(0), T); });
    expect_errc(Errc::SkeletonMissesPath, [&] { project(BallPoint::infinity(Q2), T); });
}

TEST(Project, AgreesWithSweepAndMinJoin) {
    for (Field F : {Field::padic(2), Field::padic(5), Field::tadic()}) {
        Sampler rng(F, 313);
        for (int trial = 0; trial < 40; ++trial) {
            std::vector<BallPoint> pts;
            for (long i = 0, n = rng.uniform(1, 5); i < n; ++i) pts.push_back(BallPoint::simple(rng.element()));
            if (rng.uniform(0, 1)) pts.push_back(BallPoint::infinity(F));
            Skeleton T = Skeleton::hull(pts, true);
            const BallPoint gauss = BallPoint::gauss(F);
            for (int k = 0; k < 50; ++k) {
                BallPoint x = rng.point();
                BallPoint e = project(x, T);
                EXPECT_TRUE(oracle::in_tree(e, T.vertices()));
                EXPECT_TRUE(oracle::on_path(e, x, gauss));
                EXPECT_TRUE(point_eq(project(e, T), e));
                auto sweep = oracle::sweep_entry(x, T.vertices());
                ASSERT_TRUE(sweep.has_value());
                EXPECT_TRUE(point_eq(e, *sweep)) << point_pretty(x) << " -> " << point_pretty(e) << " vs "
                                                 << point_pretty(*sweep);
                // Inside the unit region the entry point is the smallest join
                // with a divisor point, capped at Gauss.
                if (in_unit_region(x)) {
                    BallPoint best = gauss;
                    for (const auto& d : pts)
                        if (!d.is_infinity() && leq(join(x, d), best)) best = join(x, d);
                    EXPECT_TRUE(point_eq(e, best));
                }
            }
        }
    }
}
