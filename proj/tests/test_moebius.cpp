#include "birat/error.hpp"
#include "birat/moebius.hpp"
#include "support/random_poly.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace birat;

namespace {

const GaussianRational I = GaussianRational::i();

} // namespace

TEST(Moebius, FromH) {
    EXPECT_EQ(moebius_from_h(0, 1), MoebiusMap(0, 1, 1, 0));
    EXPECT_EQ(moebius_from_h(1, -1), MoebiusMap(0, -1, 1, 1));
    EXPECT_THROW(moebius_from_h(0, 0), DomainError);
    EXPECT_THROW(MoebiusMap(1, 2, 2, 4), DomainError);
    EXPECT_EQ(moebius_from_affine(3, 2).as_function(vars_z()), reduce_fraction(parse_poly("2*z+3", vars_z()),
                                                                               MultiPoly(vars_z(), 1)));
}

TEST(Moebius, PeriodicityExamples) {
    PeriodReport inv = periodicity_exact(moebius_from_h(0, 1));
    EXPECT_TRUE(inv.periodic);
    EXPECT_EQ(inv.period, 2u);
    EXPECT_EQ(inv.trace_invariant, GaussianRational(0));

    PeriodReport three = periodicity_exact(moebius_from_h(1, -1));
    EXPECT_EQ(three.trace_invariant, GaussianRational(1));
    EXPECT_EQ(three.period, 3u);
    EXPECT_EQ(three.kind, MoebiusKind::FiniteOrder);

    PeriodReport par = periodicity_exact(moebius_from_h(2, -1));
    EXPECT_FALSE(par.periodic);
    EXPECT_EQ(par.kind, MoebiusKind::Parabolic);

    PeriodReport gold = periodicity_exact(moebius_from_h(1, 1));
    EXPECT_FALSE(gold.periodic);
    EXPECT_EQ(gold.trace_invariant, GaussianRational(-1));
    EXPECT_EQ(gold.kind, MoebiusKind::NonPeriodic);

    EXPECT_EQ(periodicity_exact(MoebiusMap(I, 0, 0, I)).kind, MoebiusKind::Identity);
    EXPECT_EQ(periodicity_exact(moebius_from_affine(0, I)).period, 4u);
    EXPECT_EQ(periodicity_exact(moebius_from_affine(1, 1)).kind, MoebiusKind::Parabolic);
    EXPECT_EQ(periodicity_exact(moebius_from_h(3, -3)).period, 6u);
    EXPECT_EQ(periodicity_exact(moebius_from_h(I, 1)).period, 3u);
    EXPECT_EQ(periodicity_exact(moebius_from_h(I, I)).kind, MoebiusKind::NonPeriodic);
}

TEST(Moebius, PeriodicityMatchesComposition) {
    std::mt19937_64 rng(301);
    const VarList& v = vars_z();
    RationalFunction z = RationalFunction(MultiPoly::variable(v, 0));
    int periodic = 0;
    for (int k = 0; k < 200; ++k) {
        GaussianRational g0, b0;
        if (k % 4 == 0) {
            // tr^2/det in {0,1,2,3}: gamma0^2 = -j beta0
            static const int js[] = {0, 1, 2, 3};
            int j = js[(k / 4) % 4];
            GaussianRational t = testkit::random_nonzero(rng, 5, k % 8 == 0);
            g0 = j == 0 ? GaussianRational(0) : t;
            b0 = j == 0 ? t : -(t * t) / j;
        } else {
            g0 = testkit::random_scalar(rng, 4, k % 3 == 0);
            b0 = testkit::random_nonzero(rng, 4, k % 3 == 0);
        }
        MoebiusMap M = moebius_from_h(g0, b0);
        RationalFunction h = M.as_function(v);
        std::optional<unsigned> brute;
        RationalFunction cur = h;
        for (unsigned n = 1; n <= 12; ++n) {
            if (cur == z) {
                brute = n;
                break;
            }
            cur = h.compose(std::vector<RationalFunction>{cur});
        }
        PeriodReport r = periodicity_exact(M);
        EXPECT_EQ(r.periodic, brute.has_value()) << M.str();
        if (brute) {
            ++periodic;
            EXPECT_EQ(r.period, *brute) << M.str();
        }
    }
    EXPECT_GE(periodic, 40);
}

TEST(Moebius, GeometricSum) {
    EXPECT_EQ(geometric_sum_vanishing(I, 2, 12), 1u);
    EXPECT_FALSE(geometric_sum_vanishing(1, 2, 12).has_value());
    EXPECT_EQ(geometric_sum_vanishing(-1, 3, 12), 1u);
    EXPECT_EQ(geometric_sum_vanishing(I, 1, 12), 3u);
    EXPECT_FALSE(geometric_sum_vanishing(I, 1, 2).has_value());
    EXPECT_FALSE(geometric_sum_vanishing(2, 1, 12).has_value());
    EXPECT_THROW(geometric_sum_vanishing(0, 1, 12), DomainError);
}

TEST(Moebius, GeometricSumMatchesDirectSum) {
    for (GaussianRational a : {GaussianRational(1), GaussianRational(-1), I, -I}) {
        for (unsigned k = 1; k <= 6; ++k) {
            for (unsigned n_max = 1; n_max <= 12; ++n_max) {
                std::optional<unsigned> direct;
                GaussianRational s = 1, w = a.pow(long(k)), pw = 1;
                for (unsigned n = 1; n <= n_max; ++n) {
                    pw *= w;
                    s += pw;
                    if (s.is_zero()) {
                        direct = n;
                        break;
                    }
                }
                EXPECT_EQ(geometric_sum_vanishing(a, k, n_max), direct) << format_scalar(a) << " " << k;
            }
        }
    }
}

TEST(Moebius, RootPairData) {
    RootPair r = root_pair_data(0, 1);
    ASSERT_TRUE(r.exact);
    EXPECT_EQ(r.p, GaussianRational(1));
    EXPECT_EQ(r.q, GaussianRational(-1));
    EXPECT_EQ(r.m * r.m, r.q / r.p);
    EXPECT_EQ(r.m, I);

    RootPair six = root_pair_data(1, -1);
    EXPECT_FALSE(six.exact);
    EXPECT_EQ(six.min_poly, parse_poly("z^2-z+1", vars_z()));

    EXPECT_THROW(root_pair_data(2, -1), DomainError);

    RootPair s = root_pair_data(3, -2); // roots 2, 1
    EXPECT_TRUE(s.roots_exact);
    EXPECT_EQ(s.p, GaussianRational(2));
    EXPECT_EQ(s.q, GaussianRational(1));
    EXPECT_FALSE(s.exact); // 1/2 is not a square
}
