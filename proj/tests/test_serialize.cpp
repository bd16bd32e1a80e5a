#include <gtest/gtest.h>

#include "berkline/sampling.hpp"
#include "berkline/serialize.hpp"

using namespace berkline;

namespace {

const Field Q2 = Field::padic(2);

FieldElem q(const Field& F, long n, long d = 1) { return FieldElem(F, make_rational(Integer(n), Integer(d))); }

template <class F>
void expect_errc(Errc want, F&& f) {
    try {
        f();
        ADD_FAILURE() << "expected " << errc_name(want);
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), want) << e.what();
    }
}

std::vector<Field> fields() { return {Field::padic(2), Field::padic(5), Field::tadic()}; }

} // namespace

TEST(Scalars, RationalForms) {
    EXPECT_EQ(rational_from_json(Json(3)), Rational(3));
    EXPECT_EQ(rational_from_json(Json("-7")), Rational(-7));
    EXPECT_EQ(rational_from_json(Json("6/4")), Rational(3, 2));
    EXPECT_EQ(rational_to_json(Rational(3, 2)), Json("3/2"));
    EXPECT_EQ(rational_to_json(Rational(5)), Json("5/1"));
    expect_errc(Errc::Parse, [] { rational_from_json(Json("x")); });
    expect_errc(Errc::Parse, [] { rational_from_json(Json(1.5)); });
}

TEST(Scalars, GammaForms) {
    EXPECT_EQ(gamma_to_json(Gamma::exp(3)), Json::parse(R"({"w":"3/1"})"));
    EXPECT_EQ(gamma_to_json(Gamma::zero()), Json::parse(R"({"w":"inf"})"));
    EXPECT_EQ(gamma_from_json(Json::parse(R"({"w":"inf"})")), Gamma::zero());
    EXPECT_EQ(gamma_from_json(Json::parse(R"({"w":"-1/2"})")), Gamma::exp(Rational(-1, 2)));
    EXPECT_EQ(gamma_from_json(Json(2)), Gamma::exp(2));
    expect_errc(Errc::Parse, [] { gamma_from_json(Json::parse(R"({"v":1})")); });
}

TEST(Scalars, TadicElements) {
    const Field F = Field::tadic();
    FieldElem t = FieldElem::uniformizer(F);
    FieldElem x = (t + q(F, 1)) / (t * t - q(F, 2));
    Json j = elem_to_json(x);
    ASSERT_TRUE(j.is_object());
    EXPECT_TRUE(j.contains("num") && j.contains("den"));
    EXPECT_EQ(elem_from_json(F, j), x);
    EXPECT_EQ(elem_to_json(q(F, 3, 4)), Json("3/4"));
    expect_errc(Errc::Parse, [&] { elem_from_json(F, Json::parse(R"({"num":[1]})")); });
}

TEST(RoundTrip, PointsPolysDivisors) {
    for (Field F : fields()) {
        Sampler rng(F, 11);
        for (int i = 0; i < 200; ++i) {
            BallPoint x = rng.point();
            BallPoint back = point_from_json(F, point_to_json(x));
            EXPECT_TRUE(back.same_repr(canonicalize(x)) || point_eq(back, x)) << point_pretty(x);
            EXPECT_TRUE(point_eq(back, x));
            EXPECT_EQ(dump(point_to_json(back)), dump(point_to_json(x)));

            Poly f = rng.split_poly(4);
            EXPECT_EQ(poly_from_json(F, poly_to_json(f)), f);

            std::vector<BallPoint> pts{BallPoint::infinity(F)};
            for (int k = 0; k < 3; ++k) pts.push_back(BallPoint::simple(rng.element()));
            Divisor D(F, pts);
            Divisor E = divisor_from_json(F, divisor_to_json(D));
            EXPECT_EQ(dump(divisor_to_json(E)), dump(divisor_to_json(D)));
        }
    }
}

TEST(RoundTrip, BareForms) {
    EXPECT_TRUE(point_from_json(Q2, Json("inf")).is_infinity());
    EXPECT_TRUE(point_eq(point_from_json(Q2, Json(3)), BallPoint::simple(q(Q2, 3))));
    RootList r = roots_from_json(Q2, Json::parse(R"([1, {"root": "1/2", "mult": 3}])"));
    ASSERT_EQ(r.size(), 2u);
    EXPECT_EQ(r[1].first, q(Q2, 1, 2));
    EXPECT_EQ(r[1].second, 3);
    EXPECT_EQ(roots_from_json(Q2, roots_to_json(r)), r);
    expect_errc(Errc::Parse, [] { point_from_json(Q2, Json::parse(R"({"pt":"eta","w":"1"})")); });
    expect_errc(Errc::Parse, [] { divisor_from_json(Q2, Json(4)); });
}

TEST(RoundTrip, SkeletaAndProfiles) {
    for (Field F : fields()) {
        Sampler rng(F, 23);
        for (int i = 0; i < 30; ++i) {
            std::vector<BallPoint> pts;
            for (long k = 0, n = rng.uniform(1, 5); k < n; ++k) pts.push_back(rng.point());
            Skeleton s = Skeleton::hull(pts, true);
            Json j = skeleton_to_json(s);
            EXPECT_EQ(dump(skeleton_to_json(skeleton_from_json(F, j))), dump(j));
        }
        std::vector<FieldElem> roots;
        Sampler prng(F, 29);
        for (int i = 0; i < 20; ++i) {
            roots.clear();
            Poly f = prng.split_poly(4, &roots);
            RootList rl;
            for (const auto& r : roots) {
                auto it = std::find_if(rl.begin(), rl.end(), [&](const auto& e) { return e.first == r; });
                if (it == rl.end()) rl.emplace_back(r, 1);
                else ++it->second;
            }
            FiberCountProfile p = fiber_count_ray(PolyMap(f), FieldElem(F, 0L), rl);
            EXPECT_EQ(profile_from_json(profile_to_json(p)), p);
            PiecewiseMonomial s = radius_map(PolyMap(f), roots.front());
            EXPECT_EQ(piecewise_from_json(piecewise_to_json(s)), s);
        }
    }
}

TEST(RoundTrip, TrajectoriesAndReports) {
    for (Field F : fields()) {
        Sampler rng(F, 31);
        Divisor D(F, {BallPoint::simple(rng.element()), BallPoint::simple(rng.element()), BallPoint::infinity(F)});
        Retraction R(D);
        for (int i = 0; i < 50; ++i) {
            BallPoint x = rng.point();
            Trajectory tr = R.trajectory(x);
            Json j = trajectory_to_json(tr);
            Trajectory back = trajectory_from_json(F, j);
            EXPECT_EQ(dump(trajectory_to_json(back)), dump(j));
            for (int k = 0; k < 5; ++k) {
                Gamma t = rng.time();
                EXPECT_TRUE(point_eq(back.at(t), R.at(t, x)));
            }
        }
    }
    SquareReport r;
    r.checked = 7;
    r.failed.push_back({BallPoint::simple(q(Q2, 1)), Gamma::exp(2), "mismatch"});
    SquareReport back = report_from_json(Q2, report_to_json(r));
    EXPECT_EQ(back.checked, 7u);
    ASSERT_EQ(back.failed.size(), 1u);
    EXPECT_EQ(back.failed[0].reason, "mismatch");
    EXPECT_EQ(back.failed[0].t, Gamma::exp(2));
}

TEST(Text, DotForZeroInfinity) {
    Skeleton s = divisor_hull(Divisor(Q2, {BallPoint::simple(q(Q2, 0)), BallPoint::infinity(Q2)}));
    EXPECT_EQ(skeleton_to_dot(s),
              "digraph skeleton {\n"
              "  rankdir=BT;\n"
              "  node [shape=ellipse];\n"
              "  v0 [label=\"η(0, 1)\", peripheries=2, style=bold];\n"
              "  v1 [label=\"η(0, 0)\", shape=box];\n"
              "  v2 [label=\"∞\", shape=box];\n"
              "  v0 -> v2 [label=\"[1; ∞]\"];\n"
              "  v1 -> v0 [label=\"[0; 1]\"];\n"
              "}\n");
}

TEST(Text, ProfileTable) {
    const PolyMap u2(Poly::from_rationals(Q2, {Rational(0), Rational(0), Rational(1)}));
    FiberCountProfile p = fiber_count_ray(u2, q(Q2, 1), {{q(Q2, 1), 1}, {q(Q2, -1), 1}});
    std::string table = profile_table(Q2, p);
    EXPECT_EQ(table.substr(0, table.find('\n')), "radius interval\tcount");
    EXPECT_NE(table.find("\t2\n"), std::string::npos);
    EXPECT_NE(table.find("\t1\n"), std::string::npos);
}

TEST(Text, DumpIsStable) {
    Json j = Json::parse(R"({"b":1,"a":[1,2]})");
    EXPECT_EQ(dump(j), "{\n  \"b\": 1,\n  \"a\": [\n    1,\n    2\n  ]\n}\n");
}
