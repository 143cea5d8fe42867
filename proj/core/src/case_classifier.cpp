#include "birat/case_classifier.hpp"

#include "birat/error.hpp"
#include "upoly_q.hpp"

#include <cmath>

namespace birat {

namespace {

const GaussianRational kZero(0);

struct SubcaseName {
    Subcase s;
    const char* tag;
};

constexpr SubcaseName kNames[] = {
    {Subcase::CD2_i, "CD2-i"},     {Subcase::CD2_ii, "CD2-ii"},   {Subcase::CD2_iii, "CD2-iii"},
    {Subcase::CD3_i, "CD3-i"},     {Subcase::CD3_ii, "CD3-ii"},   {Subcase::CD3_iii, "CD3-iii"},
    {Subcase::G1_i_a, "G1-i-a"},   {Subcase::G1_i_b, "G1-i-b"},   {Subcase::G1_i_c, "G1-i-c"},
    {Subcase::G1_ii_a, "G1-ii-a"}, {Subcase::G1_ii_b, "G1-ii-b"}, {Subcase::G2_a, "G2-a"},
    {Subcase::G2_b1, "G2-b1"},     {Subcase::G2_b2, "G2-b2"},
};

MultiPoly zpoly(const char* s) { return parse_poly(s, vars_z()); }

const double kGolden = (1 + std::sqrt(5.0)) / 2;

} // namespace

std::string to_string(Family f) {
    switch (f) {
    case Family::AlphaGamma: return "AlphaGamma";
    case Family::BetaGammaGeneric: return "BetaGamma-generic";
    case Family::BetaGammaGamma1: return "BetaGamma-gamma1";
    case Family::BetaGammaGamma2: return "BetaGamma-gamma2";
    }
    return "?";
}

std::string to_string(Subcase s) {
    for (const auto& n : kNames)
        if (n.s == s) return n.tag;
    return "?";
}

std::optional<Subcase> parse_subcase(const std::string& tag) {
    for (const auto& n : kNames)
        if (tag == n.tag) return n.s;
    return std::nullopt;
}

const std::vector<Subcase>& all_subcases() {
    static const std::vector<Subcase> v = [] {
        std::vector<Subcase> r;
        for (const auto& n : kNames) r.push_back(n.s);
        return r;
    }();
    return v;
}

std::optional<long> CaseReport::parameter(const std::string& name) const {
    for (const auto& d : parameters_used)
        if (d.name == name) return d.value;
    return std::nullopt;
}

CaseReport classify(const ParameterTuple& p) {
    require_birational(p);
    BirationalityReport b = birationality_check(p);
    const Triple& a = p.alpha();
    const Triple& be = p.beta();
    const Triple& g = p.gamma();
    CaseReport r;

    if (b.degeneracy == Degeneracy::NonDegenerate)
        throw OutOfScope("(alpha gamma)12 and (beta gamma)12 are both nonzero: three exceptional lines, no subcase applies");

    if (b.degeneracy == Degeneracy::DegenerateAlphaGamma) {
        r.family = Family::AlphaGamma;
        bool a1 = !a[1].is_zero(), a2 = !a[2].is_zero(), g1 = !g[1].is_zero(), g2 = !g[2].is_zero();
        if (a1 && a2 && g1 && g2) r.subcase = Subcase::CD2_i;
        else if (!a1 && !g1) r.subcase = Subcase::CD2_ii;
        else if (!a2 && !g2) r.subcase = Subcase::CD2_iii;
        else throw InvariantViolation("(alpha gamma)12 = 0 tuple outside the three admissible zero patterns: " + p.str());
        return r;
    }

    if (!g[1].is_zero() && !g[2].is_zero()) {
        r.family = Family::BetaGammaGeneric;
        if (a[1].is_zero()) r.subcase = Subcase::CD3_ii;
        else if (a[2].is_zero()) r.subcase = Subcase::CD3_iii;
        else r.subcase = Subcase::CD3_i;
        return r;
    }

    if (g[1].is_zero()) {
        r.family = Family::BetaGammaGamma1;
        // second component is (beta0 + beta2 y)/(gamma0 + gamma2 y)
        MoebiusMap h(be[2], be[0], g[2], g[0]);
        r.h = h;
        PeriodReport pr = periodicity_exact(h);
        bool a2 = !a[2].is_zero();
        if (!pr.periodic) {
            r.subcase = a2 ? Subcase::G1_i_a : Subcase::G1_ii_a;
            return r;
        }
        long k = long(pr.period);
        r.parameters_used.push_back({"k", k, "period of h from its trace invariant"});
        if (!a2) {
            r.subcase = Subcase::G1_ii_b;
            return r;
        }
        r.parameters_used.push_back({"p", k - 2, "k - 2"});
        if (auto ord = root_of_unity_order(a[1]))
            r.parameters_used.push_back({"alpha1_order", long(*ord), "root-of-unity order of alpha1"});
        // the sum 1 + w + ... + w^n with w = alpha1^k vanishes for some n iff w has order 2 or 4
        auto n = geometric_sum_vanishing(a[1], unsigned(k), 4);
        if (!n) {
            r.subcase = Subcase::G1_i_b;
        } else {
            r.subcase = Subcase::G1_i_c;
            r.parameters_used.push_back({"n", long(*n), "minimal n with 1 + alpha1^k + ... + alpha1^(nk) = 0"});
        }
        return r;
    }

    r.family = Family::BetaGammaGamma2;
    if (!a[1].is_zero()) {
        r.subcase = Subcase::G2_a;
        return r;
    }
    // f = (alpha0 + alpha2 y, M(x)); the first component of f^2 is (alpha0 + alpha2 t) o M
    MoebiusMap h = moebius_from_affine(a[0], a[2]) * MoebiusMap(be[1], be[0], g[1], g[0]);
    r.h = h;
    PeriodReport pr = periodicity_exact(h);
    if (!pr.periodic) {
        r.subcase = Subcase::G2_b1;
        return r;
    }
    r.parameters_used.push_back({"k", long(pr.period), "period of h from its trace invariant"});
    r.subcase = Subcase::G2_b2;
    return r;
}

std::string to_string(ClosedForm c) {
    switch (c) {
    case ClosedForm::PowerOfTwo: return "2^n";
    case ClosedForm::Fibonacci: return "Fibonacci-recurrent";
    case ClosedForm::OnePlusN: return "1+n";
    case ClosedForm::EventuallyConstant: return "eventually-constant";
    case ClosedForm::Periodic: return "periodic";
    case ClosedForm::ConstantTwo: return "2 constant";
    }
    return "?";
}

MultiPoly characteristic_polynomial(const IntMatrix& m) {
    // Faddeev-LeVerrier
    std::size_t n = m.size();
    using Mat = std::vector<std::vector<mpq_class>>;
    Mat A(n, std::vector<mpq_class>(n)), M(n, std::vector<mpq_class>(n, 0));
    for (std::size_t i = 0; i < n; ++i) {
        if (m[i].size() != n) throw DomainError("characteristic polynomial needs a square matrix");
        for (std::size_t j = 0; j < n; ++j) A[i][j] = m[i][j];
    }
    detail::UPolyQ c(n + 1, 0);
    c[n] = 1;
    for (std::size_t k = 1; k <= n; ++k) {
        Mat next(n, std::vector<mpq_class>(n, 0));
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j)
                for (std::size_t l = 0; l < n; ++l) next[i][j] += A[i][l] * M[l][j];
            next[i][i] += c[n - k + 1];
        }
        M = std::move(next);
        mpq_class tr = 0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t l = 0; l < n; ++l) tr += A[i][l] * M[l][i];
        c[n - k] = -tr / long(k);
    }
    return detail::to_multipoly(c);
}

std::optional<long> PredictionModel::term(std::size_t n) const {
    if (n == 0) return 1;
    switch (closed_form) {
    case ClosedForm::PowerOfTwo:
        if (n > 62) return std::nullopt;
        return 1L << n;
    case ClosedForm::Fibonacci: {
        long x = initial_degrees[0], y = initial_degrees[1];
        for (std::size_t i = 1; i < n; ++i) {
            long z = x + y;
            x = y;
            y = z;
        }
        return x;
    }
    case ClosedForm::OnePlusN: return long(n) + 1;
    case ClosedForm::EventuallyConstant: return long(n) < plateau ? long(n) + 1 : plateau;
    case ClosedForm::ConstantTwo: return 2;
    case ClosedForm::Periodic:
        if (n % period == 0) return 1;
        if (pattern_known) return 2;
        return std::nullopt;
    }
    return std::nullopt;
}

PredictionModel predicted_model(const CaseReport& r) {
    PredictionModel m;
    m.subcase = r.subcase;
    auto set_poly = [&](const char* p, const char* text) {
        m.char_poly = zpoly(p);
        m.char_poly_text = text;
    };
    switch (r.subcase) {
    case Subcase::CD2_i:
    case Subcase::CD3_i:
        m.closed_form = ClosedForm::PowerOfTwo;
        m.closed_form_text = "d_n = 2^n";
        m.char_poly_text = "none: exponential 2^n";
        m.initial_degrees = {2};
        m.growth = Growth::Exponential;
        m.dynamical_degree = 2;
        break;
    case Subcase::CD2_ii:
    case Subcase::CD3_ii:
    case Subcase::G2_a:
        m.closed_form = ClosedForm::Fibonacci;
        m.closed_form_text = "d_(n+2) = d_(n+1) + d_n";
        set_poly("z^2-z-1", "z^2-z-1");
        m.picard_matrix = IntMatrix{{2, 1}, {-1, -1}};
        m.picard_note = "action on <L, E> after blowing up the single orbit collision";
        m.initial_degrees = {2, 3};
        m.growth = Growth::Exponential;
        m.dynamical_degree = kGolden;
        break;
    case Subcase::CD2_iii:
    case Subcase::CD3_iii:
    case Subcase::G1_i_a:
        m.closed_form = ClosedForm::OnePlusN;
        m.closed_form_text = "d_n = 1 + n";
        set_poly("z^2-2*z+1", "(z-1)^2");
        m.picard_matrix = IntMatrix{{2, 1}, {-1, 0}};
        m.picard_note = "action on <L, E> after one blow-up";
        m.initial_degrees = {2, 3};
        m.growth = Growth::Linear;
        break;
    case Subcase::G1_i_b: {
        long k = *r.parameter("k");
        long p = k - 2;
        m.closed_form = ClosedForm::EventuallyConstant;
        m.closed_form_text = "d_n = 1 + n for n <= " + std::to_string(k - 1) + ", d_n = " + std::to_string(k) +
                             " for n >= " + std::to_string(k);
        m.plateau = k;
        MultiPoly z = MultiPoly::variable(vars_z(), 0);
        m.char_poly = z.pow(unsigned(p)) * zpoly("z^2-2*z+1");
        m.char_poly_text = "(-z)^" + std::to_string(p) + " (z-1)^2";
        for (long i = 1; i < k; ++i) m.initial_degrees.push_back(i + 1);
        m.initial_degrees.push_back(k);
        m.growth = Growth::Bounded;
        break;
    }
    case Subcase::G1_i_c: {
        long k = *r.parameter("k"), n = *r.parameter("n");
        m.closed_form = ClosedForm::Periodic;
        m.period = unsigned((n + 1) * k);
        m.pattern_known = false;
        m.closed_form_text = std::to_string(m.period) + "-periodic, d_n = 1 at multiples of " + std::to_string(m.period);
        break;
    }
    case Subcase::G1_ii_a:
    case Subcase::G2_b1:
        m.closed_form = ClosedForm::ConstantTwo;
        m.closed_form_text = "d_n = 2";
        set_poly("z-1", "z-1");
        m.initial_degrees = {2};
        m.growth = Growth::Bounded;
        break;
    case Subcase::G1_ii_b:
    case Subcase::G2_b2: {
        long k = *r.parameter("k");
        m.closed_form = ClosedForm::Periodic;
        m.period = unsigned(r.subcase == Subcase::G2_b2 ? 2 * k : k);
        m.closed_form_text = std::to_string(m.period) + "-periodic, d_n = 1 at multiples of " +
                             std::to_string(m.period) + " and 2 otherwise";
        break;
    }
    }
    if (m.closed_form == ClosedForm::Periodic) {
        MultiPoly z = MultiPoly::variable(vars_z(), 0);
        m.char_poly = z.pow(m.period) - MultiPoly(vars_z(), 1);
        m.char_poly_text = "z^" + std::to_string(m.period) + "-1";
        m.growth = Growth::Bounded;
        if (m.pattern_known)
            for (unsigned i = 1; i <= m.period; ++i) m.initial_degrees.push_back(*m.term(i));
    }
    if (m.picard_matrix && characteristic_polynomial(*m.picard_matrix) != *m.char_poly)
        throw InvariantViolation("Picard matrix does not match the characteristic polynomial for " + to_string(m.subcase));
    return m;
}

VerificationReport cross_check(const ParameterTuple& p, std::size_t n, std::size_t term_budget) {
    VerificationReport v;
    v.report = classify(p);
    v.model = predicted_model(v.report);
    v.sequence = degree_sequence(p, n, term_budget);
    const std::vector<long>& d = v.sequence.degrees;

    CheckItem complete{"sequence complete", !v.sequence.truncated, "", std::nullopt};
    complete.detail = std::to_string(d.size()) + " of " + std::to_string(n) + " terms";
    if (v.sequence.truncated) complete.first_failing_index = d.size() + 1;
    v.checks.push_back(complete);

    CheckItem closed{"closed form", true, v.model.closed_form_text, std::nullopt};
    for (std::size_t i = 1; i <= d.size() && closed.passed; ++i) {
        auto t = v.model.term(i);
        bool ok = !t || *t == d[i - 1];
        if (ok && v.model.closed_form == ClosedForm::Periodic && i > v.model.period)
            ok = d[i - 1] == d[i - 1 - v.model.period];
        if (!ok) {
            closed.passed = false;
            closed.first_failing_index = i;
            closed.detail += "; d_" + std::to_string(i) + " = " + std::to_string(d[i - 1]);
            if (t) closed.detail += ", predicted " + std::to_string(*t);
        }
    }
    v.checks.push_back(closed);

    CheckItem ann{"characteristic polynomial", true, v.model.char_poly_text, std::nullopt};
    if (v.model.char_poly) {
        if (auto bad = first_violation(*v.model.char_poly, d)) {
            ann.passed = false;
            ann.first_failing_index = bad;
            ann.detail += " fails on the window ending at d_" + std::to_string(*bad);
        } else {
            ann.detail += " annihilates d_1..d_" + std::to_string(d.size());
        }
    }
    v.checks.push_back(ann);

    CheckItem gr{"growth class", false, "", std::nullopt};
    try {
        v.fit = fit_recurrence(d);
        v.growth = growth_class(*v.fit, v.sequence);
        gr.passed = v.growth->tag == v.model.growth;
        if (gr.passed && v.model.growth == Growth::Exponential)
            gr.passed = std::abs(v.growth->dynamical_degree - v.model.dynamical_degree) < 1e-9;
        gr.detail = "fit " + format_poly(v.fit->char_poly) + " -> " + to_string(v.growth->tag) + ", expected " +
                    to_string(v.model.growth);
    } catch (const InconclusiveFit& e) {
        gr.detail = std::string("inconclusive: ") + e.what();
    }
    v.checks.push_back(gr);

    v.passed = true;
    for (const auto& c : v.checks) v.passed = v.passed && c.passed;
    return v;
}

} // namespace birat
