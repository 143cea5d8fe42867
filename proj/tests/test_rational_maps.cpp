#include "birat/error.hpp"
#include "birat/poly_gcd.hpp"
#include "birat/rational_maps.hpp"
#include "support/random_params.hpp"

#include <gtest/gtest.h>

using namespace birat;

namespace {

MultiPoly P(const char* s, const VarList& v = vars_xy()) { return parse_poly(s, v); }
MultiPoly H(const char* s) { return parse_poly(s, vars_proj()); }

ParameterTuple T(Triple a, Triple b, Triple g) { return ParameterTuple(a, b, g); }

ProjectiveMap PM(const char* a, const char* b, const char* c) { return ProjectiveMap::make({H(a), H(b), H(c)}); }

} // namespace

TEST(RationalMaps, RejectsFlatDenominator) {
    EXPECT_THROW(T({0, 1, 0}, {0, 0, 1}, {1, 0, 0}), InvariantViolation);
}

TEST(RationalMaps, BuildsFamilyMembers) {
    EXPECT_EQ(build_family_map(T({0, 0, 1}, {0, 1, 0}, {0, 0, 1})), parse_plane_map("y", "(x)/(y)"));
    EXPECT_EQ(build_family_map(T({0, 1, 0}, {0, 0, 1}, {0, 1, 0})), parse_plane_map("x", "(y)/(x)"));
    EXPECT_EQ(build_family_map(T({0, 1, 1}, {1, 0, 0}, {0, 1, 0})), parse_plane_map("x+y", "(1)/(x)"));
}

TEST(RationalMaps, BirationalityClauses) {
    BirationalityReport dep = birationality_check(T({0, 1, 1}, {0, 1, 0}, {0, 2, 0}));
    EXPECT_FALSE(dep.is_birational);
    ASSERT_FALSE(dep.violated_conditions.empty());
    EXPECT_NE(dep.violated_conditions.front().find("linearly independent"), std::string::npos);

    BirationalityReport ag = birationality_check(T({0, 0, 1}, {0, 1, 0}, {0, 0, 1}));
    EXPECT_TRUE(ag.is_birational);
    EXPECT_EQ(ag.degeneracy, Degeneracy::DegenerateAlphaGamma);

    BirationalityReport bg = birationality_check(T({0, 1, 1}, {1, 0, 0}, {0, 1, 0}));
    EXPECT_TRUE(bg.is_birational);
    EXPECT_EQ(bg.degeneracy, Degeneracy::DegenerateBetaGamma);

    // f depends only on x + y
    BirationalityReport flat = birationality_check(T({0, 1, 1}, {1, 0, 0}, {0, 1, 1}));
    EXPECT_FALSE(flat.is_birational);
    EXPECT_EQ(flat.degeneracy, Degeneracy::DegenerateBoth);

    BirationalityReport gen = birationality_check(T({0, 1, 0}, {1, 0, 1}, {0, 1, 1}));
    EXPECT_TRUE(gen.is_birational);
    EXPECT_EQ(gen.degeneracy, Degeneracy::NonDegenerate);
}

TEST(RationalMaps, ExplicitInverses) {
    EXPECT_EQ(invert_family(T({0, 1, 1}, {1, 0, 0}, {0, 1, 0})), parse_plane_map("(1)/(y)", "(x*y-1)/(y)"));
    EXPECT_EQ(invert_family(T({0, 0, 1}, {0, 1, 0}, {0, 0, 1})), parse_plane_map("x*y", "x"));
    try {
        invert_family(T({0, 1, 1}, {0, 1, 0}, {0, 2, 0}));
        FAIL() << "expected NotBirational";
    } catch (const NotBirational& e) {
        EXPECT_EQ(e.clause(), kClauseIndependent);
    }
}

TEST(RationalMaps, InverseRoundTripRandom) {
    std::mt19937_64 rng(101);
    for (int k = 0; k < 40; ++k) {
        ParameterTuple p = testkit::random_birational(rng, k % 3 == 0);
        PlaneMap f = build_family_map(p);
        PlaneMap g = invert_family(p);
        EXPECT_TRUE(f.compose(g).is_identity()) << p.str();
        EXPECT_TRUE(g.compose(f).is_identity()) << p.str();
        EXPECT_TRUE(compose_reduce(homogenize(f), homogenize(g)).is_identity()) << p.str();
    }
}

TEST(RationalMaps, JacobianNumeratorsExample) {
    ParameterTuple p = T({0, 0, 1}, {0, 1, 0}, {0, 0, 1});
    auto [j1, j2] = jacobian_numerators(p);
    EXPECT_EQ(j1, P("y"));
    EXPECT_EQ(j2, P("-x"));

    auto [d1, d2] = jacobian_numerators(T({0, 1, 1}, {0, 1, 0}, {0, 2, 0}));
    EXPECT_TRUE(d1.is_zero());
    EXPECT_TRUE(d2.is_zero());
}

TEST(RationalMaps, JacobianNumeratorsMatchDifferentiation) {
    std::mt19937_64 rng(103);
    for (int k = 0; k < 40; ++k) {
        ParameterTuple p = testkit::random_birational(rng, k % 2 == 1);
        auto [j1, j2] = jacobian_numerators(p);
        const Triple& g = p.gamma();
        MultiPoly c = MultiPoly(vars_xy(), g[0]) + g[1] * P("x") + g[2] * P("y");
        MultiPoly e = MultiPoly(vars_xy(), p.ab(1, 2)) - p.ag(1, 2) * P("y");
        EXPECT_EQ(jacobian_determinant(build_family_map(p)), reduce_fraction(-j1, c * c)) << p.str();
        EXPECT_EQ(jacobian_determinant(invert_family(p)), reduce_fraction(j2, e * e)) << p.str();
    }
}

TEST(RationalMaps, Homogenization) {
    EXPECT_EQ(homogenize(parse_plane_map("y", "(x)/(y)")), PM("x0*x2", "x2^2", "x0*x1"));
    EXPECT_EQ(homogenize(parse_plane_map("x", "(y)/(x)")), PM("x0*x1", "x1^2", "x0*x2"));
    EXPECT_EQ(homogenize(parse_plane_map("x+y", "(1)/(x)")), PM("x0*x1", "x1^2+x1*x2", "x0^2"));
    PlaneMap f = parse_plane_map("x+y", "(1)/(x)");
    EXPECT_EQ(dehomogenize(homogenize(f)), f);
}

TEST(RationalMaps, FamilyDegree) {
    std::mt19937_64 rng(107);
    for (int k = 0; k < 30; ++k) {
        ParameterTuple p = testkit::random_birational(rng);
        ProjectiveMap F = homogenize(build_family_map(p));
        EXPECT_LE(F.degree(), 2);
    }
    EXPECT_EQ(homogenize(build_family_map(T({1, 2, 3}, {1, -1, 2}, {2, 1, 1}))).degree(), 2);
}

TEST(RationalMaps, ComposeReduce) {
    ProjectiveMap F = PM("x0*x2", "x2^2", "x0*x1");
    ProjectiveMap FF = compose_reduce(F, F);
    EXPECT_EQ(FF.degree(), 3);
    EXPECT_EQ(FF, PM("x0*x1*x2", "x0*x1^2", "x2^3"));

    ProjectiveMap G = PM("x0*x1", "x1^2", "x0*x2");
    EXPECT_EQ(compose_reduce(G, G), PM("x0*x1^2", "x1^3", "x0^2*x2"));

    EXPECT_EQ(compose_reduce(F, ProjectiveMap::identity()), F);
    EXPECT_EQ(compose_reduce(ProjectiveMap::identity(), F), F);
}

TEST(RationalMaps, ComposeReduceStaysReduced) {
    std::mt19937_64 rng(109);
    for (int k = 0; k < 20; ++k) {
        ProjectiveMap F = homogenize(build_family_map(testkit::random_birational(rng)));
        ProjectiveMap G = homogenize(build_family_map(testkit::random_birational(rng)));
        ProjectiveMap FG = compose_reduce(F, G);
        EXPECT_TRUE(poly_gcd(std::span<const MultiPoly>(FG.components().data(), 3)).is_one());
        EXPECT_EQ(dehomogenize(FG), dehomogenize(F).compose(dehomogenize(G)));
    }
}

TEST(RationalMaps, DegenerateComposition) {
    // inner lands on [0:0:1], where every component of outer vanishes
    ProjectiveMap outer = PM("x0*x1", "x1^2", "x0^2");
    ProjectiveMap inner = PM("0", "0", "x2");
    EXPECT_THROW(compose_reduce(outer, inner), DegenerateComposition);
}
