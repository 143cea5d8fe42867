#include "birat/error.hpp"
#include "birat/rational_function.hpp"
#include "support/random_poly.hpp"

#include <gtest/gtest.h>

using namespace birat;
using birat::testkit::random_poly;

namespace {

MultiPoly P(const char* s, const VarList& v = vars_xy()) { return parse_poly(s, v); }

} // namespace

TEST(RationalFunction, ReducesCommonFactors) {
    RationalFunction r = reduce_fraction(P("x^2-1"), P("x-1"));
    EXPECT_EQ(r.num(), P("x+1"));
    EXPECT_TRUE(r.den().is_one());

    RationalFunction s = reduce_fraction(P("x0^2*x1*x2", vars_proj()), P("x0*x2^3", vars_proj()));
    EXPECT_EQ(s.num(), P("x0*x1", vars_proj()));
    EXPECT_EQ(s.den(), P("x2^2", vars_proj()));
}

TEST(RationalFunction, NormalizesDenominator) {
    RationalFunction r = reduce_fraction(P("2*x"), P("4*y+2"));
    EXPECT_EQ(r.num(), P("1/2*x"));
    EXPECT_EQ(r.den(), P("y+1/2"));
    RationalFunction z = reduce_fraction(MultiPoly(vars_xy()), P("x+y"));
    EXPECT_TRUE(z.is_zero());
    EXPECT_TRUE(z.den().is_one());
    EXPECT_THROW(reduce_fraction(P("x"), MultiPoly(vars_xy())), DomainError);
}

TEST(RationalFunction, CancelsRandomProducts) {
    std::mt19937_64 rng(41);
    for (int k = 0; k < 100; ++k) {
        MultiPoly p = random_poly(rng, vars_xy(), 3, 4, k % 3 == 0);
        MultiPoly q = random_poly(rng, vars_xy(), 3, 4, k % 5 == 0);
        if (q.is_zero()) continue;
        RationalFunction r = reduce_fraction(p * q, q);
        EXPECT_EQ(r, RationalFunction(p));
    }
}

TEST(RationalFunction, ReductionIsIdempotent) {
    std::mt19937_64 rng(43);
    for (int k = 0; k < 100; ++k) {
        MultiPoly a = random_poly(rng, vars_xy(), 3, 4, k % 2 == 0);
        MultiPoly b = random_poly(rng, vars_xy(), 3, 4);
        MultiPoly c = random_poly(rng, vars_xy(), 2, 3);
        if (b.is_zero() || c.is_zero()) continue;
        RationalFunction r = reduce_fraction(a * c, b * c);
        RationalFunction again = reduce_fraction(r.num(), r.den());
        EXPECT_EQ(again, r);
    }
}

TEST(RationalFunction, FieldArithmetic) {
    std::mt19937_64 rng(47);
    for (int k = 0; k < 40; ++k) {
        RationalFunction a = reduce_fraction(random_poly(rng, vars_xy(), 2, 3), random_poly(rng, vars_xy(), 2, 3) + P("1"));
        RationalFunction b = reduce_fraction(random_poly(rng, vars_xy(), 2, 3, true), random_poly(rng, vars_xy(), 2, 3) + P("x"));
        if (a.is_zero() || b.is_zero()) continue;
        EXPECT_EQ((a + b) - b, a);
        EXPECT_EQ((a * b) / b, a);
        EXPECT_EQ(a * (a + b), a * a + a * b);
    }
}

TEST(RationalFunction, ComposeMatchesHandExpansion) {
    RationalFunction h = parse_rational_function("(x*y)/(x+1)", vars_xy());
    std::vector<RationalFunction> img{parse_rational_function("y", vars_xy()),
                                      parse_rational_function("(1)/(x)", vars_xy())};
    // (y * 1/x) / (y + 1) = y / (x*y + x)
    EXPECT_EQ(h.compose(img), reduce_fraction(P("y"), P("x*y+x")));
}

TEST(RationalFunction, DerivativeQuotientRule) {
    RationalFunction r = parse_rational_function("(x^2)/(x+y)", vars_xy());
    EXPECT_EQ(r.derivative(0), reduce_fraction(P("x^2+2*x*y"), P("x^2+2*x*y+y^2")));
    EXPECT_EQ(r.derivative(1), reduce_fraction(P("-x^2"), P("x^2+2*x*y+y^2")));
}

TEST(RationalFunction, EvaluationAndPoles) {
    RationalFunction r = parse_rational_function("(x)/(y-1)", vars_xy());
    std::vector<GaussianRational> pt{3, 2};
    EXPECT_EQ(r.eval(pt), GaussianRational(3));
    std::vector<GaussianRational> pole{3, 1};
    EXPECT_THROW(r.eval(pole), DomainError);
}
