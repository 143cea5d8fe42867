#include "birat/error.hpp"
#include "birat/poly_gcd.hpp"
#include "support/random_poly.hpp"

#include <gtest/gtest.h>

using namespace birat;
using birat::testkit::random_poly;

namespace {

MultiPoly P(const char* s, const VarList& v = vars_xy()) { return parse_poly(s, v); }

bool divides(const MultiPoly& d, const MultiPoly& p) { return p.divide_exact(d).has_value(); }

} // namespace

TEST(PolyGcd, MonomialGcd) {
    EXPECT_EQ(poly_gcd(P("x0^2*x1*x2", vars_proj()), P("x0^2*x1^2", vars_proj())), P("x0^2*x1", vars_proj()));
}

TEST(PolyGcd, ComponentsOfSelfComposition) {
    std::vector<MultiPoly> f{P("x0*x2", vars_proj()), P("x2^2", vars_proj()), P("x0*x1", vars_proj())};
    std::vector<MultiPoly> ff;
    for (const auto& c : f) ff.push_back(c.substitute(f));
    EXPECT_EQ(ff[0], P("x0^2*x1*x2", vars_proj()));
    EXPECT_EQ(ff[1], P("x0^2*x1^2", vars_proj()));
    EXPECT_EQ(ff[2], P("x0*x2^3", vars_proj()));
    EXPECT_EQ(poly_gcd(ff), P("x0", vars_proj()));
}

TEST(PolyGcd, UnitCases) {
    std::mt19937_64 rng(1);
    for (int k = 0; k < 20; ++k) {
        MultiPoly p = random_poly(rng, vars_xy(), 5, 5, k % 2 == 0);
        if (p.is_zero()) continue;
        EXPECT_EQ(poly_gcd(p, MultiPoly(vars_xy(), 1)), MultiPoly(vars_xy(), 1));
        EXPECT_EQ(poly_gcd(p, MultiPoly(vars_xy())), p.monic());
    }
    EXPECT_THROW(poly_gcd(MultiPoly(vars_xy()), MultiPoly(vars_xy())), DomainError);
}

TEST(PolyGcd, KnownFactors) {
    EXPECT_EQ(poly_gcd(P("x^2-1"), P("x^2+2*x+1")), P("x+1"));
    EXPECT_EQ(poly_gcd(P("x^2-y^2"), P("x^3-y^3")), P("x-y"));
    EXPECT_EQ(poly_gcd(P("x^2+1"), P("x^3-i*x^2+x-i")), P("x^2+1"));
    EXPECT_EQ(poly_gcd(P("x^2+1"), P("x-i")), P("x-i"));
    EXPECT_EQ(poly_gcd(P("z^4-1", vars_z()), P("z^6-1", vars_z())), P("z^2-1", vars_z()));
}

TEST(PolyGcd, DividesBothInputsRandom) {
    std::mt19937_64 rng(7);
    for (int k = 0; k < 120; ++k) {
        bool gauss = k % 4 == 0;
        const VarList& v = k % 2 ? vars_xy() : vars_z();
        MultiPoly g = random_poly(rng, v, 3, 4, gauss);
        MultiPoly a = random_poly(rng, v, 4, 5) * g;
        MultiPoly b = random_poly(rng, v, 4, 5, gauss) * g;
        if (a.is_zero() || b.is_zero()) continue;
        MultiPoly d = poly_gcd(a, b);
        EXPECT_TRUE(divides(d, a));
        EXPECT_TRUE(divides(d, b));
        if (!g.is_zero()) EXPECT_TRUE(divides(g, d)) << g.str() << " vs " << d.str();
        EXPECT_TRUE(d.leading_coef().is_one());
    }
}

TEST(PolyGcd, ModularAgreesWithSubresultant) {
    // Scaling one input by i routes it through the subresultant path; the
    // normalized gcd must not change.
    std::mt19937_64 rng(13);
    for (int k = 0; k < 60; ++k) {
        MultiPoly g = random_poly(rng, vars_xy(), 3, 4);
        MultiPoly a = random_poly(rng, vars_xy(), 3, 4) * g;
        MultiPoly b = random_poly(rng, vars_xy(), 3, 4) * g;
        if (a.is_zero() || b.is_zero()) continue;
        MultiPoly ai = a * GaussianRational::i();
        EXPECT_EQ(poly_gcd(a, b), poly_gcd(ai, b));
    }
}

TEST(PolyGcd, HomogeneousTriples) {
    std::mt19937_64 rng(19);
    for (int k = 0; k < 40; ++k) {
        MultiPoly g = testkit::random_homogeneous(rng, 3, 5, k % 5 == 0);
        std::vector<MultiPoly> polys;
        for (int j = 0; j < 3; ++j) polys.push_back(testkit::random_homogeneous(rng, 4, 6) * g);
        if (g.is_zero()) continue;
        GcdWithCofactors r = gcd_with_cofactors(polys);
        EXPECT_TRUE(divides(g, r.gcd));
        for (int j = 0; j < 3; ++j) EXPECT_EQ(r.gcd * r.cofactors[j], polys[j]);
        EXPECT_FALSE(certify_coprime(polys));
    }
}

TEST(PolyGcd, CoprimeCertificate) {
    EXPECT_TRUE(certify_coprime(std::vector<MultiPoly>{P("x^2+y"), P("x*y+1")}));
    EXPECT_FALSE(certify_coprime(std::vector<MultiPoly>{P("x^2-1"), P("x^2+2*x+1")}));
    EXPECT_FALSE(certify_coprime(std::vector<MultiPoly>{P("x0*x1", vars_proj()), P("x0^2", vars_proj())}));
}

TEST(PolyGcd, LargeModularCase) {
    // Degree ~40 bivariate inputs with a degree-12 common factor.
    std::mt19937_64 rng(31);
    MultiPoly g = random_poly(rng, vars_xy(), 12, 20);
    MultiPoly a = random_poly(rng, vars_xy(), 28, 40) * g;
    MultiPoly b = random_poly(rng, vars_xy(), 28, 40) * g;
    GcdWithCofactors r = gcd_with_cofactors(std::vector<MultiPoly>{a, b});
    EXPECT_EQ(r.gcd, g.monic());
    EXPECT_EQ(r.gcd * r.cofactors[0], a);
    EXPECT_EQ(r.gcd * r.cofactors[1], b);
}
