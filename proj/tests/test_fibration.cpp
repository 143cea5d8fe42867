#include "birat/corpus.hpp"
#include "birat/degree_dynamics.hpp"
#include "birat/error.hpp"
#include "birat/fibration.hpp"

#include <gtest/gtest.h>

using namespace birat;

namespace {

const GaussianRational I = GaussianRational::i();

ParameterTuple T(Triple a, Triple b, Triple g) { return ParameterTuple(a, b, g); }

RationalFunction rf(const std::string& num, const std::string& den) {
    return reduce_fraction(parse_poly(num, vars_xy()), parse_poly(den, vars_xy()));
}

const FibrationSpec& find(const std::vector<FibrationSpec>& specs, const std::string& label) {
    for (const auto& s : specs)
        if (s.label == label) return s;
    throw std::runtime_error("no spec " + label);
}

} // namespace

TEST(Fibration, NormalFormShapes) {
    // (1 - x, (1 + y)/x) is already normal
    NormalFormMap a = normal_form(T({1, -1, 0}, {1, 0, 1}, {0, 1, 0}));
    EXPECT_EQ(a.source_case, Subcase::CD2_iii);
    EXPECT_EQ(a.shape, NormalShape::AffineOverX);
    EXPECT_EQ(a.alpha0, GaussianRational(1));
    EXPECT_EQ(a.alpha1, GaussianRational(-1));
    EXPECT_EQ(a.beta0, GaussianRational(1));
    EXPECT_EQ(a.map, a.original);

    NormalFormMap g1 = normal_form(T({0, 2, 3}, {1, 0, 5}, {1, 0, 2}));
    EXPECT_EQ(g1.shape, NormalShape::SkewMoebius);
    EXPECT_TRUE(g1.alpha0.is_zero()); // alpha1 != 1 so translated away
    EXPECT_EQ(g1.alpha1, GaussianRational(2));
    EXPECT_EQ(g1.map, g1.conjugation.inverse_map().compose(g1.original.compose(g1.conjugation.as_map())));

    NormalFormMap sw = normal_form(T({1, 0, 3}, {2, 1, 0}, {1, 2, 0}));
    EXPECT_EQ(sw.shape, NormalShape::Swap);
    EXPECT_EQ(sw.map.first, RationalFunction(MultiPoly::variable(vars_xy(), 1)));

    NormalFormMap sum = normal_form(corpus_entry(Subcase::CD3_iii).params);
    EXPECT_EQ(sum.shape, NormalShape::AffineOverSum);

    EXPECT_THROW(normal_form(corpus_entry(Subcase::CD2_ii).params), UnsupportedCase);
    EXPECT_THROW(normal_form(corpus_entry(Subcase::G2_a).params), UnsupportedCase);
}

TEST(Fibration, FirstIntegralOfReflection) {
    NormalFormMap form = normal_form(T({1, -1, 0}, {1, 0, 1}, {0, 1, 0}));
    auto specs = builtin_fibrations(form);
    const FibrationSpec& w = find(specs, "W");
    EXPECT_EQ(*w.function, rf("x - x^2", "1"));
    EXPECT_EQ(w.transform.kind, TransformKind::Invariant);
    EXPECT_EQ(verify_fibration(form.map, w).verdict, Verdict::Pass);
    EXPECT_FALSE(verify_fibration(form.map, w).numeric);
    const FibrationSpec& v = find(specs, "V");
    EXPECT_EQ(v.transform.kind, TransformKind::Moebius);
    EXPECT_TRUE(verify_fibration(form.map, v).passed());
}

TEST(Fibration, ParabolicSwapPair) {
    NormalFormMap form = normal_form(T({0, 0, 1}, {-1, 0, 0}, {2, 1, 0}));
    ASSERT_EQ(form.shape, NormalShape::Swap);
    auto specs = builtin_fibrations(form);
    const FibrationSpec& k1 = find(specs, "K1");
    const FibrationSpec& k2 = find(specs, "K2");
    const FibrationSpec& w = find(specs, "W");
    EXPECT_EQ(*k2.function, rf("x + y + 2", "x*y + x + y + 1"));
    EXPECT_EQ(k1.transform.kind, TransformKind::Scale);
    EXPECT_EQ(k1.transform.scale, GaussianRational(-1));
    EXPECT_EQ(k2.transform.kind, TransformKind::Translate);
    EXPECT_EQ(w.transform.kind, TransformKind::Invariant);
    EXPECT_EQ(*w.function, k1.function->pow(2));
    for (const auto* s : {&k1, &k2, &w}) EXPECT_EQ(verify_fibration(form.map, *s).verdict, Verdict::Pass) << s->label;

    TransversalityVerdict t = transversality(k1, k2);
    EXPECT_TRUE(t.transverse);
    EXPECT_EQ(*t.determinant, rf("4", "1") / (rf("x + 1", "1").pow(2) * rf("y + 1", "1").pow(2)));
    EXPECT_EQ(*t.determinant, *expected_jacobian(form));
}

TEST(Fibration, InvolutionSwapPair) {
    NormalFormMap form = normal_form(T({0, 0, 1}, {1, 0, 0}, {0, 1, 0}));
    auto specs = builtin_fibrations(form);
    const FibrationSpec& h1 = find(specs, "H1");
    const FibrationSpec& h2 = find(specs, "H2");
    EXPECT_EQ(*h1.function, rf("-1 + i*x - i*y + x*y", "x*y + x + y + 1"));
    EXPECT_EQ(h1.transform.scale, I);
    EXPECT_EQ(h2.transform.scale, -I);
    EXPECT_TRUE(verify_fibration(form.map, h1).passed());
    EXPECT_TRUE(verify_fibration(form.map, h2).passed());
    EXPECT_FALSE(verify_fibration(form.map, h1).numeric);

    TransversalityVerdict t = transversality(h1, h2);
    EXPECT_TRUE(t.transverse);
    EXPECT_EQ(*t.determinant, rf("4*i", "1") / (rf("x + 1", "1").pow(2) * rf("y + 1", "1").pow(2)));
    EXPECT_EQ(*t.determinant, *expected_jacobian(form));

    // f^2 = id, so the squares are first integrals
    EXPECT_TRUE(verify_fibration(form.map, find(specs, "H1^4")).passed());
}

TEST(Fibration, WrongTransformFails) {
    NormalFormMap form = normal_form(T({0, 0, 1}, {1, 0, 0}, {0, 1, 0}));
    FibrationSpec h1 = find(builtin_fibrations(form), "H1");
    h1.transform = Transform::scaled(-I);
    EXPECT_EQ(verify_fibration(form.map, h1).verdict, Verdict::Fail);
    h1.transform = Transform::invariant();
    EXPECT_EQ(verify_fibration(form.map, h1).verdict, Verdict::Fail);
}

TEST(Fibration, NotTransverse) {
    FibrationSpec a;
    a.function = rf("x", "1");
    FibrationSpec b = a;
    TransversalityVerdict t = transversality(a, b);
    EXPECT_FALSE(t.transverse);
    EXPECT_TRUE(t.determinant->is_zero());
}

TEST(Fibration, DegenerateSpec) {
    // alpha1 = -1: x + m(x) = alpha0 is constant
    NormalFormMap form = normal_form(T({3, -1, 0}, {-1, 0, 0}, {1, 0, 1}));
    ASSERT_EQ(form.shape, NormalShape::SplitMoebius);
    auto specs = builtin_fibrations(form);
    const FibrationSpec& h2 = find(specs, "H2");
    EXPECT_TRUE(h2.degenerate);
    EXPECT_EQ(verify_fibration(form.map, h2).verdict, Verdict::Degenerate);
    const FibrationSpec& h1 = find(specs, "H1");
    EXPECT_FALSE(h1.degenerate);
    EXPECT_TRUE(verify_fibration(form.map, h1).passed());
}

TEST(Fibration, SkewVariants) {
    struct Case {
        Triple a, b, g;
        TransformKind v2;
        bool h2;
    };
    // b1: alpha1 = 2; b2: alpha1 = -1, k = 2; b3: alpha1 = 1 with k = 2, 3, 4, 6; c: alpha1 = i, k = 2
    std::vector<Case> cases = {
        {{0, 2, 1}, {1, 0, 0}, {0, 0, 1}, TransformKind::Scale, false},
        {{0, -1, 1}, {1, 0, 0}, {0, 0, 1}, TransformKind::Translate, false},
        {{1, 1, 1}, {1, 0, 0}, {0, 0, 1}, TransformKind::Translate, false},
        {{1, 1, 1}, {-1, 0, 0}, {1, 0, 1}, TransformKind::Translate, false},
        {{1, 1, 1}, {-2, 0, 0}, {2, 0, 1}, TransformKind::Translate, false},
        {{1, 1, 1}, {-3, 0, 0}, {3, 0, 1}, TransformKind::Translate, false},
        {{0, I, 1}, {1, 0, 0}, {0, 0, 1}, TransformKind::Scale, true},
    };
    for (const Case& c : cases) {
        ParameterTuple p = T(c.a, c.b, c.g);
        NormalFormMap form = normal_form(p);
        ASSERT_EQ(form.shape, NormalShape::SkewMoebius) << p.str();
        auto specs = builtin_fibrations(form);
        EXPECT_EQ(find(specs, "V2").transform.kind, c.v2) << p.str();
        bool has_h2 = std::any_of(specs.begin(), specs.end(), [](const auto& s) { return s.label == "H2"; });
        EXPECT_EQ(has_h2, c.h2) << p.str();
        for (const auto& s : specs) {
            EXPECT_TRUE(verify_fibration(form.map, s).passed()) << p.str() << " " << s.label;
            EXPECT_TRUE(verify_fibration(form.original, pull_back(s, form.conjugation)).passed())
                << p.str() << " " << s.label;
        }
    }
}

TEST(Fibration, NonPeriodicMoebiusGivesSingleFibration) {
    NormalFormMap form = normal_form(corpus_entry(Subcase::G1_i_a).params);
    auto specs = builtin_fibrations(form);
    ASSERT_EQ(specs.size(), 1u);
    EXPECT_EQ(specs[0].label, "V1");
}

TEST(Fibration, CatalogHoldsOnCorpus) {
    for (const CorpusEntry& e : reference_corpus()) {
        NormalFormMap form;
        try {
            form = normal_form(e.params);
        } catch (const UnsupportedCase&) {
            continue;
        }
        EXPECT_EQ(form.map, form.conjugation.inverse_map().compose(form.original.compose(form.conjugation.as_map())));
        for (const FibrationSpec& s : builtin_fibrations(form)) {
            FibrationVerdict direct = verify_fibration(form.map, s);
            FibrationVerdict pulled = verify_fibration(form.original, pull_back(s, form.conjugation));
            EXPECT_EQ(direct.verdict, s.degenerate ? Verdict::Degenerate : Verdict::Pass) << e.name << " " << s.label;
            EXPECT_EQ(direct.verdict, pulled.verdict) << e.name << " " << s.label;
            EXPECT_EQ(direct.numeric, !s.is_exact());
        }
    }
}

TEST(Fibration, NumericSwap) {
    NormalFormMap form = normal_form(corpus_entry(Subcase::G2_b2).params);
    auto specs = builtin_fibrations(form);
    const FibrationSpec& h1 = find(specs, "H1");
    const FibrationSpec& h2 = find(specs, "H2");
    EXPECT_FALSE(h1.is_exact());
    FibrationVerdict v = verify_fibration(form.map, h1);
    EXPECT_TRUE(v.passed());
    EXPECT_TRUE(v.numeric);
    EXPECT_EQ(v.samples, kNumericSamples);
    EXPECT_LE(v.max_error, kNumericTolerance);
    EXPECT_TRUE(verify_fibration(form.map, find(specs, "H1^6")).passed());
    EXPECT_TRUE(transversality(h1, h2).transverse);
    EXPECT_FALSE(expected_jacobian(form).has_value());

    FibrationSpec wrong = h1;
    wrong.transform = Transform::invariant();
    EXPECT_EQ(verify_fibration(form.map, wrong).verdict, Verdict::Fail);
}

TEST(Fibration, ScaleIterates) {
    std::vector<ParameterTuple> tuples = {T({0, 0, 1}, {1, 0, 0}, {0, 1, 0}), T({0, 0, 1}, {-1, 0, 0}, {2, 1, 0}),
                                          T({0, 2, 1}, {1, 0, 0}, {0, 0, 1}), T({0, I, 1}, {1, 0, 0}, {0, 0, 1})};
    for (const ParameterTuple& p : tuples) {
        NormalFormMap form = normal_form(p);
        for (const FibrationSpec& s : builtin_fibrations(form)) {
            if (s.transform.kind != TransformKind::Scale || !s.is_exact()) continue;
            PlaneMap fn = form.map;
            for (int n = 1; n <= 6; ++n, fn = form.map.compose(fn)) {
                std::array<RationalFunction, 2> images{fn.first, fn.second};
                EXPECT_EQ(s.function->compose(images), s.transform.scale.pow(n) * *s.function)
                    << p.str() << " " << s.label << " N=" << n;
            }
        }
    }
}

TEST(Fibration, DetectPeriodicity) {
    PlaneMap skew{rf("i*x + y", "1"), rf("1", "y")};
    EXPECT_EQ(detect_periodicity(skew), 4u);
    PlaneMap swap{rf("y", "1"), rf("-1", "1 + x")};
    EXPECT_EQ(detect_periodicity(swap), 6u);
    PlaneMap fib{rf("x + y", "1"), rf("1", "x")};
    EXPECT_EQ(detect_periodicity(fib, 24), std::nullopt);
    EXPECT_EQ(detect_periodicity(PlaneMap::identity()), 1u);
    EXPECT_EQ(detect_periodicity(swap, 5), std::nullopt);
    EXPECT_THROW(detect_periodicity(swap, 0), DomainError);
    EXPECT_EQ(detect_periodicity(PlaneMap{rf("y", "1"), rf("1", "x")}), 4u);
}

TEST(Fibration, PeriodMatchesDegrees) {
    for (const CorpusEntry& e : reference_corpus()) {
        if (e.name == "cd2-i" || e.name == "cd3-i" || e.name == "cd3-ii" || e.name == "g2-a") continue;
        auto period = detect_periodicity(build_family_map(e.params));
        if (!period) continue;
        DegreeSequence seq = degree_sequence(e.params, 2 * *period + 1);
        for (std::size_t i = 0; i + *period < seq.degrees.size(); ++i)
            EXPECT_EQ(seq.degrees[i], seq.degrees[i + *period]) << e.name;
        EXPECT_EQ(growth_class(fit_recurrence(seq), seq).tag, Growth::Bounded) << e.name;
    }
    EXPECT_EQ(detect_periodicity(build_family_map(corpus_entry(Subcase::G1_i_c).params)), 4u);
    EXPECT_EQ(detect_periodicity(build_family_map(corpus_entry(Subcase::G2_b2).params)), 6u);
}

TEST(Fibration, TransformFolding) {
    EXPECT_EQ(Transform::moebius(MoebiusMap(1, 0, 0, 1)).kind, TransformKind::Invariant);
    EXPECT_EQ(Transform::moebius(MoebiusMap(1, 1, 0, 1)).kind, TransformKind::Translate);
    Transform s = Transform::moebius(MoebiusMap(6, 0, 0, 3));
    EXPECT_EQ(s.kind, TransformKind::Scale);
    EXPECT_EQ(s.scale, GaussianRational(2));
    EXPECT_EQ(Transform::moebius(MoebiusMap(0, 1, 1, 0)).kind, TransformKind::Moebius);
}
