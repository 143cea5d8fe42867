#include "birat/corpus.hpp"
#include "birat/error.hpp"
#include "support/random_params.hpp"

#include <gtest/gtest.h>

#include <set>

using namespace birat;

namespace {

ParameterTuple T(Triple a, Triple b, Triple g) { return ParameterTuple(a, b, g); }

const GaussianRational I = GaussianRational::i();

} // namespace

TEST(CaseClassifier, Examples) {
    CaseReport cd2 = classify(T({0, 0, 1}, {0, 1, 0}, {0, 0, 1}));
    EXPECT_EQ(cd2.family, Family::AlphaGamma);
    EXPECT_EQ(cd2.subcase, Subcase::CD2_ii);
    EXPECT_FALSE(cd2.both_families);

    CaseReport c = classify(T({0, I, 1}, {1, 0, 0}, {0, 0, 1}));
    EXPECT_EQ(c.family, Family::BetaGammaGamma1);
    EXPECT_EQ(c.subcase, Subcase::G1_i_c);
    EXPECT_EQ(c.parameter("k"), 2);
    EXPECT_EQ(c.parameter("n"), 1);
    EXPECT_EQ(c.parameter("alpha1_order"), 4);

    CaseReport g2 = classify(T({0, 0, 1}, {1, 0, 0}, {1, 1, 0}));
    EXPECT_EQ(g2.family, Family::BetaGammaGamma2);
    EXPECT_EQ(g2.subcase, Subcase::G2_b1);

    CaseReport b = classify(T({0, 1, 1}, {-1, 0, 0}, {1, 0, 1}));
    EXPECT_EQ(b.subcase, Subcase::G1_i_b);
    EXPECT_EQ(b.parameter("k"), 3);
    EXPECT_EQ(b.parameter("p"), 1);
    EXPECT_FALSE(b.parameter("n").has_value());

    // alpha1 = -1, h 3-periodic: 1 + (-1)^3 = 0
    CaseReport c3 = classify(T({0, -1, 1}, {-1, 0, 0}, {1, 0, 1}));
    EXPECT_EQ(c3.subcase, Subcase::G1_i_c);
    EXPECT_EQ(predicted_model(c3).period, 6u);
}

TEST(CaseClassifier, Errors) {
    EXPECT_THROW(classify(T({0, 1, 0}, {1, 0, 1}, {0, 1, 1})), OutOfScope);
    EXPECT_THROW(classify(T({0, 1, 1}, {1, 0, 0}, {0, 1, 1})), NotBirational);
}

TEST(CaseClassifier, SubcaseTags) {
    EXPECT_EQ(all_subcases().size(), 14u);
    for (Subcase s : all_subcases()) EXPECT_EQ(parse_subcase(to_string(s)), s);
    EXPECT_FALSE(parse_subcase("CD4-i").has_value());
}

TEST(CaseClassifier, CharacteristicPolynomial) {
    EXPECT_EQ(characteristic_polynomial({{2, 1}, {-1, -1}}), parse_poly("z^2-z-1", vars_z()));
    EXPECT_EQ(characteristic_polynomial({{2, 1}, {-1, 0}}), parse_poly("z^2-2*z+1", vars_z()));
    EXPECT_EQ(characteristic_polynomial({{0, 1, 0}, {0, 0, 1}, {1, 0, 0}}), parse_poly("z^3-1", vars_z()));
    EXPECT_EQ(characteristic_polynomial({{3}}), parse_poly("z-3", vars_z()));
}

TEST(CaseClassifier, PredictedModels) {
    PredictionModel fib = predicted_model(classify(corpus_entry(Subcase::CD2_ii).params));
    EXPECT_EQ(*fib.char_poly, parse_poly("z^2-z-1", vars_z()));
    EXPECT_EQ(fib.initial_degrees, (std::vector<long>{2, 3}));
    EXPECT_EQ(fib.term(10), 144);
    ASSERT_TRUE(fib.picard_matrix.has_value());
    EXPECT_EQ(characteristic_polynomial(*fib.picard_matrix), *fib.char_poly);

    // h(y) = 1/y is 2-periodic and alpha1 = 1
    PredictionModel k2 = predicted_model(classify(T({0, 1, 1}, {1, 0, 0}, {0, 0, 1})));
    EXPECT_EQ(k2.closed_form, ClosedForm::EventuallyConstant);
    for (std::size_t n = 1; n <= 10; ++n) EXPECT_EQ(k2.term(n), 2);

    PredictionModel g2 = predicted_model(classify(corpus_entry(Subcase::G2_b2).params));
    EXPECT_EQ(g2.period, 6u);
    EXPECT_EQ(g2.initial_degrees, (std::vector<long>{2, 2, 2, 2, 2, 1}));

    PredictionModel exp = predicted_model(classify(corpus_entry(Subcase::CD2_i).params));
    EXPECT_FALSE(exp.char_poly.has_value());
    EXPECT_EQ(exp.term(8), 256);

    for (Subcase s : all_subcases()) {
        PredictionModel m = predicted_model(classify(corpus_entry(s).params));
        if (m.picard_matrix) EXPECT_EQ(characteristic_polynomial(*m.picard_matrix), *m.char_poly);
    }
}

TEST(CaseClassifier, CorpusCoversEverySubcase) {
    std::set<Subcase> seen;
    for (const auto& e : reference_corpus()) {
        EXPECT_EQ(classify(e.params).subcase, e.subcase) << e.name;
        seen.insert(e.subcase);
    }
    EXPECT_EQ(seen.size(), all_subcases().size());
}

TEST(CaseClassifier, CrossCheckCheapCorpus) {
    for (const auto& e : reference_corpus()) {
        PredictionModel m = predicted_model(classify(e.params));
        if (m.growth == Growth::Exponential) continue; // covered by the acceptance suite
        VerificationReport v = cross_check(e.params, e.iterations);
        EXPECT_TRUE(v.passed) << e.name;
    }
    VerificationReport fib = cross_check(corpus_entry(Subcase::CD2_ii).params, 10);
    EXPECT_TRUE(fib.passed);
    EXPECT_EQ(fib.sequence.degrees, (std::vector<long>{2, 3, 5, 8, 13, 21, 34, 55, 89, 144}));
}

TEST(CaseClassifier, CrossCheckReportsMismatch) {
    VerificationReport v = cross_check(corpus_entry(Subcase::G2_b2).params, 3);
    // too short for any recurrence fit
    EXPECT_FALSE(v.passed);
    EXPECT_FALSE(v.checks.back().passed);
    EXPECT_NE(v.checks.back().detail.find("inconclusive"), std::string::npos);
}

TEST(CaseClassifier, TotalOnRandomDegenerateTuples) {
    std::mt19937_64 rng(401);
    std::set<Subcase> seen;
    for (int k = 0; k < 150; ++k) {
        ParameterTuple p = testkit::random_degenerate(rng, k % 5 == 0);
        CaseReport r = classify(p);
        seen.insert(r.subcase);
        PredictionModel m = predicted_model(r);
        std::size_t n = m.growth == Growth::Exponential ? 4 : 7;
        VerificationReport v = cross_check(p, n);
        for (std::size_t c = 0; c < 3; ++c) EXPECT_TRUE(v.checks[c].passed) << p.str() << " " << v.checks[c].detail;
    }
    EXPECT_GE(seen.size(), 8u);
}
