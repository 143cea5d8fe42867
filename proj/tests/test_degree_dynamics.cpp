#include "birat/degree_dynamics.hpp"
#include "birat/error.hpp"
#include "support/random_params.hpp"

#include <gtest/gtest.h>

using namespace birat;

namespace {

ParameterTuple T(Triple a, Triple b, Triple g) { return ParameterTuple(a, b, g); }

std::vector<long> L(std::initializer_list<long> v) { return v; }

MultiPoly Z(const char* s) { return parse_poly(s, vars_z()); }

// Degrees of f^n computed by affine composition, independent of compose_reduce.
std::vector<long> affine_degrees(const PlaneMap& f, int n) {
    std::vector<long> out;
    PlaneMap g = f;
    for (int k = 1; k <= n; ++k) {
        out.push_back(homogenize(g).degree());
        g = f.compose(g);
    }
    return out;
}

} // namespace

TEST(DegreeDynamics, ReferenceSequences) {
    EXPECT_EQ(degree_sequence(T({0, 0, 1}, {0, 1, 0}, {0, 0, 1}), 5).degrees, L({2, 3, 5, 8, 13}));
    EXPECT_EQ(degree_sequence(T({0, 1, 0}, {0, 0, 1}, {0, 1, 0}), 5).degrees, L({2, 3, 4, 5, 6}));
    EXPECT_EQ(degree_sequence(T({0, 1, 1}, {0, 1, 0}, {0, 1, 1}), 5).degrees, L({2, 4, 8, 16, 32}));
}

TEST(DegreeDynamics, AgreesWithAffineComposition) {
    std::mt19937_64 rng(307);
    for (int k = 0; k < 12; ++k) {
        ParameterTuple p = testkit::random_birational(rng, k % 3 == 0);
        EXPECT_EQ(degree_sequence(p, 4).degrees, affine_degrees(build_family_map(p), 4)) << p.str();
    }
}

TEST(DegreeDynamics, TermBudgetTruncates) {
    DegreeSequence s = degree_sequence(T({0, 1, 1}, {0, 1, 0}, {0, 1, 1}), 10, 20);
    EXPECT_TRUE(s.truncated);
    EXPECT_LT(s.size(), 10u);
    EXPECT_EQ(s.degrees.front(), 2);
}

TEST(DegreeDynamics, FitKnownSequences) {
    EXPECT_EQ(fit_recurrence(L({2, 3, 5, 8, 13, 21, 34, 55})).char_poly, Z("z^2-z-1"));
    EXPECT_EQ(fit_recurrence(L({2, 3, 4, 5, 6, 7, 8, 9})).char_poly, Z("z^2-2*z+1"));
    RecurrenceFit geo = fit_recurrence(L({2, 4, 8, 16, 32, 64, 128, 256}));
    EXPECT_EQ(geo.char_poly, Z("z-2"));
    ASSERT_EQ(geo.coefficients.size(), 1u);
    EXPECT_EQ(geo.coefficients[0], GaussianRational(2));
    EXPECT_EQ(fit_recurrence(L({2, 2, 2, 1, 2, 2, 2, 1})).char_poly, Z("z^4-1"));
    EXPECT_EQ(fit_recurrence(L({2, 3, 3, 3, 3, 3})).char_poly, Z("z^2-z"));
}

TEST(DegreeDynamics, FitErrors) {
    EXPECT_THROW(fit_recurrence(L({1, 2, 3})), InconclusiveFit);
    EXPECT_THROW(fit_recurrence(L({1, 0, 0, 0, 0, 7})), InconclusiveFit);
}

TEST(DegreeDynamics, FitRecoversRandomRecurrences) {
    std::mt19937_64 rng(311);
    std::uniform_int_distribution<int> coef(-3, 3), seed(-5, 5);
    for (int k = 0; k < 50; ++k) {
        int order = 1 + k % 4;
        std::vector<long> c(order), s;
        for (auto& v : c) v = coef(rng);
        if (c[0] == 0) c[0] = 1;
        for (int i = 0; i < order; ++i) s.push_back(seed(rng));
        while (s.size() < 16) {
            long next = 0;
            for (int i = 0; i < order; ++i) next += c[i] * s[s.size() - order + i];
            s.push_back(next);
        }
        RecurrenceFit fit = fit_recurrence(s);
        EXPECT_LE(fit.order, order);
        EXPECT_FALSE(first_violation(fit.char_poly, s).has_value());
    }
}

TEST(DegreeDynamics, FitIsStableOnLongerRuns) {
    ParameterTuple p = T({0, 1, 1}, {1, 0, 0}, {0, 1, 0});
    RecurrenceFit fit = fit_recurrence(degree_sequence(p, 6));
    EXPECT_FALSE(first_violation(fit.char_poly, degree_sequence(p, 10).degrees).has_value());
}

TEST(DegreeDynamics, FirstViolation) {
    EXPECT_FALSE(first_violation(Z("z^2-z-1"), L({2, 3, 5, 8, 13})).has_value());
    auto v = first_violation(Z("z^2-z-1"), L({2, 3, 5, 8, 14}));
    ASSERT_TRUE(v.has_value());
    EXPECT_EQ(*v, 5u);
    // (-z)(z-1)^2 with the k = 3 sequence: annihilated from d_1 on
    EXPECT_FALSE(first_violation(Z("-z^3+2*z^2-z"), L({2, 3, 3, 3, 3, 3})).has_value());
    EXPECT_TRUE(first_violation(Z("-z^3+2*z^2-z"), L({1, 2, 3, 3, 3, 3})).has_value());
}

TEST(DegreeDynamics, RatioEstimate) {
    DegreeSequence fib;
    fib.degrees = {2, 3, 5, 8, 13, 21, 34, 55, 89, 144};
    EXPECT_EQ(dynamical_degree_estimate(fib), mpq_class(144, 89));
    EXPECT_NEAR(dynamical_degree_estimate(fib).get_d(), (1 + std::sqrt(5.0)) / 2, 1e-2);
    DegreeSequence geo;
    geo.degrees = {2, 4, 8, 16};
    EXPECT_EQ(dynamical_degree_estimate(geo), mpq_class(2));
    DegreeSequence flat;
    flat.degrees = {2, 2, 2, 2};
    EXPECT_EQ(dynamical_degree_estimate(flat), mpq_class(1));
}

TEST(DegreeDynamics, GrowthClasses) {
    DegreeSequence s;
    s.degrees = {2, 3, 5, 8, 13, 21, 34, 55};
    GrowthClass fib = growth_class(fit_recurrence(s), s);
    EXPECT_EQ(fib.tag, Growth::Exponential);
    EXPECT_NEAR(fib.dynamical_degree, (1 + std::sqrt(5.0)) / 2, 1e-12);

    s.degrees = {2, 3, 4, 5, 6, 7, 8, 9};
    EXPECT_EQ(growth_class(fit_recurrence(s), s).tag, Growth::Linear);

    s.degrees = {2, 2, 2, 1, 2, 2, 2, 1};
    GrowthClass per = growth_class(fit_recurrence(s), s);
    EXPECT_EQ(per.tag, Growth::Bounded);
    EXPECT_EQ(per.dynamical_degree_exact, "1");

    s.degrees = {2, 4, 8, 16, 32, 64};
    GrowthClass two = growth_class(fit_recurrence(s), s);
    EXPECT_EQ(two.tag, Growth::Exponential);
    EXPECT_EQ(two.dynamical_degree_exact, "2");

    s.degrees = {2, 3, 3, 3, 3, 3};
    EXPECT_EQ(growth_class(fit_recurrence(s), s).tag, Growth::Bounded);

    s.degrees = {1, 3, 6, 10, 15, 21, 28, 36};
    EXPECT_EQ(growth_class(fit_recurrence(s), s).tag, Growth::Quadratic);
}
