#include "birat/fibration.hpp"

#include "birat/error.hpp"
#include "modular.hpp"
#include "numeric_function.hpp"

#include <algorithm>
#include <random>

namespace birat {

namespace {

using R = RationalFunction;

R X() { return R(MultiPoly::variable(vars_xy(), 0)); }
R Y() { return R(MultiPoly::variable(vars_xy(), 1)); }
R C(const GaussianRational& c) { return R(vars_xy(), c); }

GaussianRational coeff(const MultiPoly& p, unsigned ex, unsigned ey) {
    for (const Term& t : p.terms()) {
        Exponents e = unpack(t.key);
        if (e[0] == ex && e[1] == ey) return t.coef;
    }
    return 0;
}

GaussianRational poly_coeff(const R& f, unsigned ex, unsigned ey) {
    if (!f.is_polynomial()) throw InvariantViolation("expected a polynomial component, got " + f.str());
    return coeff(f.num(), ex, ey) / coeff(f.den(), 0, 0);
}

PlaneMap conjugate(const PlaneMap& f, const AffineConjugation& c) {
    return c.inverse_map().compose(f.compose(c.as_map()));
}

PlaneMap shape_template(const NormalFormMap& n) {
    R x = X(), y = Y();
    switch (n.shape) {
    case NormalShape::AffineOverX: return {C(n.alpha0) + n.alpha1 * x, (C(n.beta0) + y) / x};
    case NormalShape::AffineOverSum: return {C(n.alpha0) + n.alpha1 * x, C(n.beta0) / (x + y)};
    case NormalShape::SkewMoebius: return {C(n.alpha0) + n.alpha1 * x + y, C(n.beta0) / (C(n.gamma0) + y)};
    case NormalShape::SplitMoebius: return {C(n.alpha0) + n.alpha1 * x, C(n.beta0) / (C(n.gamma0) + y)};
    case NormalShape::Swap: return {y, C(n.beta0) / (C(n.gamma0) + x)};
    }
    throw InvariantViolation("unknown shape");
}

void read_parameters(NormalFormMap& n) {
    const PlaneMap& g = n.map;
    switch (n.shape) {
    case NormalShape::AffineOverX:
        n.alpha0 = poly_coeff(g.first, 0, 0);
        n.alpha1 = poly_coeff(g.first, 1, 0);
        n.beta0 = coeff(g.second.num(), 0, 0);
        break;
    case NormalShape::AffineOverSum:
        n.alpha0 = poly_coeff(g.first, 0, 0);
        n.alpha1 = poly_coeff(g.first, 1, 0);
        n.beta0 = coeff(g.second.num(), 0, 0) / coeff(g.second.den(), 1, 0);
        break;
    case NormalShape::SkewMoebius:
    case NormalShape::SplitMoebius:
        n.alpha0 = poly_coeff(g.first, 0, 0);
        n.alpha1 = poly_coeff(g.first, 1, 0);
        n.beta0 = coeff(g.second.num(), 0, 0);
        n.gamma0 = coeff(g.second.den(), 0, 0);
        break;
    case NormalShape::Swap:
        n.beta0 = coeff(g.second.num(), 0, 0);
        n.gamma0 = coeff(g.second.den(), 0, 0);
        break;
    }
}

} // namespace

PlaneMap AffineConjugation::as_map() const { return {a * X() + C(b), c * Y() + C(d)}; }

PlaneMap AffineConjugation::inverse_map() const {
    return {a.inverse() * (X() - C(b)), c.inverse() * (Y() - C(d))};
}

std::string to_string(NormalShape s) {
    switch (s) {
    case NormalShape::AffineOverX: return "(alpha0 + alpha1 x, (beta0 + y)/x)";
    case NormalShape::AffineOverSum: return "(alpha0 + alpha1 x, beta0/(x + y))";
    case NormalShape::SkewMoebius: return "(alpha0 + alpha1 x + y, beta0/(gamma0 + y))";
    case NormalShape::SplitMoebius: return "(alpha0 + alpha1 x, beta0/(gamma0 + y))";
    case NormalShape::Swap: return "(y, beta0/(gamma0 + x))";
    }
    return "?";
}

MoebiusMap NormalFormMap::h() const { return moebius_from_h(gamma0, beta0); }
MoebiusMap NormalFormMap::m() const { return moebius_from_affine(alpha0, alpha1); }

NormalFormMap normal_form(const ParameterTuple& p, const CaseReport& report) {
    const Triple& a = p.alpha();
    const Triple& be = p.beta();
    const Triple& g = p.gamma();
    NormalFormMap n;
    n.original = build_family_map(p);
    n.source_case = report.subcase;
    AffineConjugation& c = n.conjugation;
    switch (report.subcase) {
    case Subcase::CD2_iii:
        n.shape = NormalShape::AffineOverX;
        c = {be[2] / g[1], -g[0] / g[1], be[2].inverse(), be[1] / g[1]};
        break;
    case Subcase::CD3_iii: {
        n.shape = NormalShape::AffineOverSum;
        GaussianRational lambda = be[1] / g[1];
        c = {g[1].inverse(), -(g[0] + g[2] * lambda) / g[1], g[2].inverse(), lambda};
        break;
    }
    case Subcase::G1_i_a:
    case Subcase::G1_i_b:
    case Subcase::G1_i_c:
        n.shape = NormalShape::SkewMoebius;
        c = {a[2] / g[2], 0, g[2].inverse(), be[2] / g[2]};
        break;
    case Subcase::G1_ii_a:
    case Subcase::G1_ii_b:
        n.shape = NormalShape::SplitMoebius;
        c = {1, 0, g[2].inverse(), be[2] / g[2]};
        break;
    case Subcase::G2_b1:
    case Subcase::G2_b2:
        n.shape = NormalShape::Swap;
        c = {g[1].inverse(), (a[0] * g[1] + a[2] * be[1]) / g[1], (g[1] * a[2]).inverse(), be[1] / g[1]};
        break;
    default:
        throw UnsupportedCase("no normal form for " + to_string(report.subcase) + " (positive entropy)");
    }
    n.map = conjugate(n.original, c);
    read_parameters(n);
    if (n.shape == NormalShape::SkewMoebius && !n.alpha1.is_one()) {
        // translate x so that alpha0 = 0
        GaussianRational s = n.alpha0 / (GaussianRational(1) - n.alpha1);
        c.b = c.a * s;
        n.map = conjugate(n.original, c);
        read_parameters(n);
    }
    if (n.map != shape_template(n))
        throw InvariantViolation("conjugated map " + n.map.str() + " does not have the form " + to_string(n.shape));
    return n;
}

NormalFormMap normal_form(const ParameterTuple& p) { return normal_form(p, classify(p)); }

std::string to_string(TransformKind k) {
    switch (k) {
    case TransformKind::Invariant: return "Invariant";
    case TransformKind::Scale: return "Scale";
    case TransformKind::Translate: return "Translate";
    case TransformKind::Moebius: return "Moebius";
    }
    return "?";
}

Transform Transform::invariant() { return {}; }

Transform Transform::translate() {
    Transform t;
    t.kind = TransformKind::Translate;
    return t;
}

Transform Transform::scaled(const GaussianRational& c) {
    Transform t;
    t.kind = TransformKind::Scale;
    t.scale = c;
    t.scale_text = format_scalar(c);
    return t;
}

Transform Transform::moebius(const MoebiusMap& phi) {
    if (phi.c().is_zero()) {
        GaussianRational k = phi.a() / phi.d(), s = phi.b() / phi.d();
        if (s.is_zero()) return k.is_one() ? invariant() : scaled(k);
        if (k.is_one() && s.is_one()) return translate();
    }
    Transform t;
    t.kind = TransformKind::Moebius;
    t.phi = phi;
    return t;
}

std::string Transform::str() const {
    switch (kind) {
    case TransformKind::Invariant: return "Invariant";
    case TransformKind::Scale: return "Scale(" + scale_text + ")";
    case TransformKind::Translate: return "Translate";
    case TransformKind::Moebius: return "Moebius" + phi->str();
    }
    return "?";
}

std::string to_string(Verdict v) {
    switch (v) {
    case Verdict::Pass: return "pass";
    case Verdict::Fail: return "fail";
    case Verdict::Degenerate: return "degenerate";
    }
    return "?";
}

// ---------------------------------------------------------------- numeric

NComplex to_complex(const GaussianRational& v) {
    auto q = [](const mpq_class& r) {
        return NReal(r.get_num().get_str()) / NReal(r.get_den().get_str());
    };
    return NComplex(q(v.re()), q(v.im()));
}

namespace {

NComplex ipow(const NComplex& z, int e) {
    NComplex r(1);
    for (int i = 0; i < e; ++i) r *= z;
    return r;
}

NComplex eval_poly(const NumPoly& p, const NComplex& u, const NComplex& v) {
    NComplex s(0);
    for (const auto& t : p) s += t.c * ipow(u, t.ex) * ipow(v, t.ey);
    return s;
}

NumPoly diff_poly(const NumPoly& p, int var) {
    NumPoly r;
    for (const auto& t : p) {
        int e = var == 0 ? t.ex : t.ey;
        if (e == 0) continue;
        NumTerm d = t;
        d.c *= e;
        (var == 0 ? d.ex : d.ey) -= 1;
        r.push_back(d);
    }
    return r;
}

NReal cabs(const NComplex& z) { return abs(z); }

} // namespace

std::optional<NComplex> NumericFunction::eval(const NComplex& x, const NComplex& y, const NReal& min_den) const {
    NComplex u = a * x + b, v = c * y + d;
    NComplex D = eval_poly(den, u, v);
    if (cabs(D) < min_den) return std::nullopt;
    return ipow(eval_poly(num, u, v) / D, power);
}

std::optional<std::array<NComplex, 2>> NumericFunction::gradient(const NComplex& x, const NComplex& y,
                                                                  const NReal& min_den) const {
    NComplex u = a * x + b, v = c * y + d;
    NComplex D = eval_poly(den, u, v);
    if (cabs(D) < min_den) return std::nullopt;
    NComplex N = eval_poly(num, u, v);
    NComplex outer = NComplex(power) * ipow(N / D, power - 1);
    std::array<NComplex, 2> g;
    for (int var = 0; var < 2; ++var) {
        NComplex Nd = eval_poly(diff_poly(num, var), u, v), Dd = eval_poly(diff_poly(den, var), u, v);
        g[var] = outer * (Nd * D - N * Dd) / (D * D) * (var == 0 ? a : c);
    }
    return g;
}

// ---------------------------------------------------------------- catalog

namespace {

FibrationSpec exact_spec(std::string label, std::string description, Transform t, R fn) {
    FibrationSpec s;
    s.label = std::move(label);
    s.description = std::move(description);
    s.transform = std::move(t);
    s.formula = fn.str();
    s.degenerate = fn.is_constant();
    s.function = std::move(fn);
    return s;
}

R h_iter(const NormalFormMap& n, unsigned i) { return n.h().pow(i).as_function(vars_xy(), 1); }
R m_iter(const NormalFormMap& n, unsigned i) { return n.m().pow(i).as_function(vars_xy(), 0); }

// Terms of H1 (sign = +1) or H2 (sign = -1) over (x + p)(y + p), generic in the scalar type.
template <class T>
void swap_pair_terms(const T& p, const T& m, int sign, std::vector<std::pair<T, std::array<int, 2>>>& num,
                     std::vector<std::pair<T, std::array<int, 2>>>& den) {
    T s(sign);
    num = {{m * m * p * p, {0, 0}}, {s * m * p, {1, 0}}, {p * (m * m - s * m + T(1)), {0, 1}}, {T(1), {1, 1}}};
    den = {{p * p, {0, 0}}, {p, {1, 0}}, {p, {0, 1}}, {T(1), {1, 1}}};
}

R exact_from_terms(const std::vector<std::pair<GaussianRational, std::array<int, 2>>>& terms) {
    std::vector<Term> t;
    for (const auto& [c, e] : terms) t.push_back({pack({unsigned(e[0]), unsigned(e[1]), 0}), c});
    return R(MultiPoly::from_terms(vars_xy(), std::move(t)));
}

NumPoly numeric_from_terms(const std::vector<std::pair<NComplex, std::array<int, 2>>>& terms) {
    NumPoly p;
    for (const auto& [c, e] : terms) p.push_back({c, e[0], e[1]});
    return p;
}

void swap_catalog(const NormalFormMap& n, std::vector<FibrationSpec>& out) {
    GaussianRational disc = n.gamma0 * n.gamma0 + 4 * n.beta0;
    R x = X(), y = Y();
    if (disc.is_zero()) {
        R c = C(n.gamma0);
        R den = (2 * x + c) * (2 * y + c);
        R k1 = (c * c - 2 * c * x + 6 * c * y + 4 * x * y) / den;
        R k2 = 2 * c * (x + y + c) / den;
        out.push_back(exact_spec("K1", "anti-invariant fibration", Transform::scaled(-1), k1));
        out.push_back(exact_spec("K2", "translated fibration", Transform::translate(), k2));
        out.push_back(exact_spec("W", "first integral K1^2", Transform::invariant(), k1 * k1));
        return;
    }
    PeriodReport pr = periodicity_exact(n.h());
    RootPair rp = root_pair_data(n.gamma0, n.beta0);
    for (int sign : {1, -1}) {
        std::string label = sign > 0 ? "H1" : "H2";
        if (rp.exact) {
            std::vector<std::pair<GaussianRational, std::array<int, 2>>> num, den;
            swap_pair_terms(rp.p, rp.m, sign, num, den);
            R H = exact_from_terms(num) / exact_from_terms(den);
            out.push_back(exact_spec(label, "scaled fibration", Transform::scaled(sign * rp.m), H));
            if (pr.periodic) {
                unsigned e = 2 * pr.period;
                out.push_back(exact_spec(label + "^" + std::to_string(e), "first integral", Transform::invariant(),
                                         H.pow(int(e))));
            }
            continue;
        }
        // p, q, m outside Q(i)
        NComplex g0 = to_complex(n.gamma0), b0 = to_complex(n.beta0);
        NComplex s = sqrt(g0 * g0 + NComplex(4) * b0);
        NComplex p = (g0 + s) / NComplex(2), q = (g0 - s) / NComplex(2);
        if (cabs(p) == 0) std::swap(p, q);
        NComplex m = sqrt(q / p);
        std::vector<std::pair<NComplex, std::array<int, 2>>> num, den;
        swap_pair_terms(p, m, sign, num, den);
        auto fn = std::make_shared<NumericFunction>();
        fn->num = numeric_from_terms(num);
        fn->den = numeric_from_terms(den);
        fn->scale = NComplex(sign) * m;
        std::string roots = "p, q roots of " + format_poly(rp.min_poly) + ", m^2 = q/p";
        FibrationSpec spec;
        spec.label = label;
        spec.description = "scaled fibration (numeric coefficients)";
        spec.transform.kind = TransformKind::Scale;
        spec.transform.scale_text = std::string(sign > 0 ? "m" : "-m") + " = " + fn->scale.str(20);
        spec.formula = sign > 0 ? "(m^2 p^2 + m p x + p (m^2 - m + 1) y + x y)/((x + p)(y + p)); " + roots
                                : "(m^2 p^2 - m p x + p (m^2 + m + 1) y + x y)/((x + p)(y + p)); " + roots;
        spec.numeric = fn;
        out.push_back(spec);
        if (pr.periodic) {
            unsigned e = 2 * pr.period;
            auto pw = std::make_shared<NumericFunction>(*fn);
            pw->power = int(e);
            pw->scale = 1;
            FibrationSpec inv;
            inv.label = label + "^" + std::to_string(e);
            inv.description = "first integral (numeric coefficients)";
            inv.transform = Transform::invariant();
            inv.formula = "(" + spec.formula + ")^" + std::to_string(e);
            inv.numeric = pw;
            out.push_back(inv);
        }
    }
}

void skew_catalog(const NormalFormMap& n, std::vector<FibrationSpec>& out) {
    R x = X(), y = Y();
    out.push_back(exact_spec("V1", "fibration y", Transform::moebius(n.h()), y));
    PeriodReport pr = periodicity_exact(n.h());
    if (!pr.periodic) return;
    unsigned k = pr.period;
    const GaussianRational& a1 = n.alpha1;
    R H1 = C(0);
    for (unsigned i = 0; i < k; ++i) H1 = H1 + h_iter(n, i);
    out.push_back(exact_spec("H1", "first integral y + h(y) + ... + h^(k-1)(y)", Transform::invariant(), H1));

    // sum_i a1^(k-1-i) h^i(y), i < k
    R weighted = C(0);
    for (unsigned i = 0; i < k; ++i) weighted = weighted + a1.pow(long(k - 1 - i)) * h_iter(n, i);
    auto n_vanish = geometric_sum_vanishing(a1, k, 4);
    GaussianRational ak = a1.pow(long(k));
    if (n_vanish || !ak.is_one()) {
        R V2 = (ak - GaussianRational(1)) * x + weighted;
        out.push_back(exact_spec("V2", "scaled fibration", Transform::scaled(a1), V2));
        if (n_vanish) {
            unsigned e = (*n_vanish + 1) * k;
            out.push_back(exact_spec("H2", "first integral V2^" + std::to_string(e), Transform::invariant(),
                                     V2.pow(int(e))));
        }
        return;
    }
    // k x + sum_i (k-1-i) a1^(k-1-i) h^i(y), i < k - 1
    R num = GaussianRational(long(k)) * x;
    for (unsigned i = 0; i + 1 < k; ++i)
        num = num + GaussianRational(long(k - 1 - i)) * a1.pow(long(k - 1 - i)) * h_iter(n, i);
    R den = a1.is_one() ? C(GaussianRational(long(k)) * n.alpha0) + weighted : weighted;
    out.push_back(exact_spec("V2", "translated fibration", Transform::translate(), num / den));
}

void affine_catalog(const NormalFormMap& n, std::vector<FibrationSpec>& out) {
    out.push_back(exact_spec("V", "fibration x", Transform::moebius(n.m()), X()));
    auto order = root_of_unity_order(n.alpha1);
    if (!order || *order == 1) return;
    R W = X();
    for (unsigned i = 1; i < *order; ++i) W = W * m_iter(n, i);
    out.push_back(exact_spec("W", "first integral x m(x) ... m^(p-1)(x)", Transform::invariant(), W));
}

void split_catalog(const NormalFormMap& n, std::vector<FibrationSpec>& out) {
    out.push_back(exact_spec("V1", "fibration x", Transform::moebius(n.m()), X()));
    out.push_back(exact_spec("V2", "fibration y", Transform::moebius(n.h()), Y()));
    PeriodReport ph = periodicity_exact(n.h());
    if (ph.periodic) {
        R H1 = C(0);
        for (unsigned i = 0; i < ph.period; ++i) H1 = H1 + h_iter(n, i);
        out.push_back(exact_spec("H1", "first integral y + h(y) + ... + h^(k-1)(y)", Transform::invariant(), H1));
    }
    PeriodReport pm = periodicity_exact(n.m());
    if (pm.periodic) {
        R H2 = C(0);
        for (unsigned i = 0; i < pm.period; ++i) H2 = H2 + m_iter(n, i);
        out.push_back(exact_spec("H2", "first integral x + m(x) + ... + m^(p-1)(x)", Transform::invariant(), H2));
    }
}

} // namespace

std::vector<FibrationSpec> builtin_fibrations(const NormalFormMap& form) {
    std::vector<FibrationSpec> out;
    switch (form.shape) {
    case NormalShape::AffineOverX:
    case NormalShape::AffineOverSum: affine_catalog(form, out); break;
    case NormalShape::SkewMoebius: skew_catalog(form, out); break;
    case NormalShape::SplitMoebius: split_catalog(form, out); break;
    case NormalShape::Swap: swap_catalog(form, out); break;
    }
    return out;
}

FibrationSpec pull_back(const FibrationSpec& spec, const AffineConjugation& conj) {
    FibrationSpec r = spec;
    if (spec.function) {
        PlaneMap inv = conj.inverse_map();
        std::array<R, 2> images{inv.first, inv.second};
        r.function = spec.function->compose(images);
        r.formula = r.function->str();
        return r;
    }
    auto fn = std::make_shared<NumericFunction>(*spec.numeric);
    // pre-map o conj^-1
    NComplex ia = NComplex(1) / to_complex(conj.a), ic = NComplex(1) / to_complex(conj.c);
    fn->b = fn->b - fn->a * ia * to_complex(conj.b);
    fn->a = fn->a * ia;
    fn->d = fn->d - fn->c * ic * to_complex(conj.d);
    fn->c = fn->c * ic;
    r.numeric = fn;
    r.formula = "(" + spec.formula + ") o conjugation^-1";
    return r;
}

namespace {

GaussianRational random_coordinate(std::mt19937_64& rng) {
    std::uniform_int_distribution<long> num(-40, 40), den(1, 9);
    return GaussianRational(mpq_class(num(rng), den(rng)));
}

FibrationVerdict verify_exact(const PlaneMap& f, const FibrationSpec& spec) {
    FibrationVerdict v;
    const R& H = *spec.function;
    std::array<R, 2> images{f.first, f.second};
    R lhs = H.compose(images);
    R rhs;
    const Transform& t = spec.transform;
    switch (t.kind) {
    case TransformKind::Invariant: rhs = H; break;
    case TransformKind::Scale: rhs = t.scale * H; break;
    case TransformKind::Translate: rhs = H + C(1); break;
    case TransformKind::Moebius: {
        const MoebiusMap& p = *t.phi;
        rhs = (p.a() * H + C(p.b())) / (p.c() * H + C(p.d()));
        break;
    }
    }
    v.verdict = lhs == rhs ? Verdict::Pass : Verdict::Fail;
    v.detail = v.passed() ? "H o f = " + t.str() + " applied to H" : "H o f = " + lhs.str() + ", expected " + rhs.str();
    return v;
}

FibrationVerdict verify_numeric(const PlaneMap& f, const FibrationSpec& spec, std::uint64_t seed) {
    FibrationVerdict v;
    v.numeric = true;
    const NumericFunction& H = *spec.numeric;
    const NReal min_den("1e-3");
    std::mt19937_64 rng(seed);
    NReal worst = 0;
    std::size_t attempts = 0;
    while (v.samples < kNumericSamples && attempts++ < 50 * kNumericSamples) {
        GaussianRational x = random_coordinate(rng), y = random_coordinate(rng);
        std::array<GaussianRational, 2> fx;
        try {
            fx = f.eval(x, y);
        } catch (const DomainError&) {
            continue;
        }
        auto at = H.eval(to_complex(x), to_complex(y), min_den);
        auto image = H.eval(to_complex(fx[0]), to_complex(fx[1]), min_den);
        if (!at || !image) continue;
        NComplex rhs;
        const Transform& t = spec.transform;
        switch (t.kind) {
        case TransformKind::Invariant: rhs = *at; break;
        case TransformKind::Scale: rhs = H.scale * *at; break;
        case TransformKind::Translate: rhs = *at + NComplex(1); break;
        case TransformKind::Moebius: {
            const MoebiusMap& p = *t.phi;
            rhs = (to_complex(p.a()) * *at + to_complex(p.b())) / (to_complex(p.c()) * *at + to_complex(p.d()));
            break;
        }
        }
        NReal err = cabs(*image - rhs) / std::max(NReal(1), cabs(rhs));
        worst = std::max(worst, err);
        ++v.samples;
    }
    v.max_error = worst.convert_to<double>();
    if (v.samples < kNumericSamples) {
        v.detail = "only " + std::to_string(v.samples) + " usable sample points";
        return v;
    }
    v.verdict = worst <= NReal(kNumericTolerance) ? Verdict::Pass : Verdict::Fail;
    v.detail = "max relative error " + worst.str(3) + " over " + std::to_string(v.samples) + " points";
    return v;
}

} // namespace

FibrationVerdict verify_fibration(const PlaneMap& f, const FibrationSpec& spec, std::uint64_t seed) {
    if (spec.degenerate || (spec.function && spec.function->is_constant())) {
        FibrationVerdict v;
        v.verdict = Verdict::Degenerate;
        v.detail = "constant function " + spec.formula;
        return v;
    }
    if (spec.function) return verify_exact(f, spec);
    if (!spec.numeric) throw DomainError("fibration spec " + spec.label + " has no function");
    return verify_numeric(f, spec, seed);
}

TransversalityVerdict transversality(const FibrationSpec& h1, const FibrationSpec& h2, std::uint64_t seed) {
    TransversalityVerdict v;
    if (h1.function && h2.function) {
        v.determinant = jacobian_determinant(*h1.function, *h2.function);
        v.transverse = !v.determinant->is_zero();
        v.detail = "det = " + v.determinant->str();
        return v;
    }
    if (!h1.numeric || !h2.numeric) throw UnsupportedCase("transversality of an exact and a numeric fibration");
    v.numeric = true;
    const NReal min_den("1e-3");
    std::mt19937_64 rng(seed);
    NReal largest = 0;
    std::size_t used = 0, attempts = 0;
    while (used < kNumericSamples && attempts++ < 50 * kNumericSamples) {
        NComplex x = to_complex(random_coordinate(rng)), y = to_complex(random_coordinate(rng));
        auto g1 = h1.numeric->gradient(x, y, min_den);
        auto g2 = h2.numeric->gradient(x, y, min_den);
        if (!g1 || !g2) continue;
        largest = std::max(largest, cabs((*g1)[0] * (*g2)[1] - (*g1)[1] * (*g2)[0]));
        ++used;
    }
    v.transverse = largest > NReal("1e-20");
    v.detail = "max |det| " + largest.str(6) + " over " + std::to_string(used) + " points";
    return v;
}

std::optional<RationalFunction> expected_jacobian(const NormalFormMap& form) {
    if (form.shape != NormalShape::Swap) return std::nullopt;
    R x = X(), y = Y();
    GaussianRational disc = form.gamma0 * form.gamma0 + 4 * form.beta0;
    if (disc.is_zero()) {
        R c = C(form.gamma0);
        return 16 * c * c / ((2 * y + c).pow(2) * (2 * x + c).pow(2));
    }
    RootPair rp = root_pair_data(form.gamma0, form.beta0);
    if (!rp.exact) return std::nullopt;
    const GaussianRational &p = rp.p, &m = rp.m;
    return C(GaussianRational(-2) * p * p * m * (m * m - GaussianRational(1))) /
           ((C(p) + x).pow(2) * (C(p) + y).pow(2));
}

// ---------------------------------------------------------------- periodicity

namespace {

struct ModEval {
    const detail::GaussPrime& gp;
    bool ok = true;

    detail::u64 scalar(const GaussianRational& c) {
        using namespace detail;
        u64 p = gp.p;
        auto q = [&](const mpq_class& r) -> u64 {
            u64 den = mpz_mod(r.get_den(), p);
            if (den == 0) {
                ok = false;
                return 0;
            }
            return mulmod(mpz_mod(r.get_num(), p), invmod(den, p), p);
        };
        return addmod(q(c.re()), mulmod(q(c.im()), gp.sqrt_m1, p), p);
    }

    detail::u64 poly(const MultiPoly& P, detail::u64 x, detail::u64 y) {
        using namespace detail;
        u64 p = gp.p, s = 0;
        for (const Term& t : P.terms()) {
            Exponents e = unpack(t.key);
            s = addmod(s, mulmod(scalar(t.coef), mulmod(powmod(x, e[0], p), powmod(y, e[1], p), p), p), p);
        }
        return s;
    }

    // false at a pole
    bool apply(const RationalFunction& r, detail::u64 x, detail::u64 y, detail::u64& out) {
        using namespace detail;
        u64 d = poly(r.den(), x, y);
        if (d == 0) return false;
        out = mulmod(poly(r.num(), x, y), invmod(d, gp.p), gp.p);
        return true;
    }
};

// Periods N <= bound at which two random points mod p return to themselves; nullopt if no usable prime.
std::optional<std::vector<unsigned>> modular_candidates(const PlaneMap& f, unsigned bound) {
    std::mt19937_64 rng(7);
    for (std::size_t pi = 0; pi < 4; ++pi) {
        ModEval ev{detail::gauss_prime(pi)};
        std::vector<unsigned> cand(bound);
        for (unsigned i = 0; i < bound; ++i) cand[i] = i + 1;
        int good_points = 0;
        for (int attempt = 0; attempt < 20 && good_points < 2 && ev.ok; ++attempt) {
            std::uniform_int_distribution<detail::u64> dist(0, ev.gp.p - 1);
            detail::u64 x0 = dist(rng), y0 = dist(rng), x = x0, y = y0;
            std::vector<unsigned> returns;
            bool pole = false;
            for (unsigned n = 1; n <= bound; ++n) {
                detail::u64 nx, ny;
                if (!ev.apply(f.first, x, y, nx) || !ev.apply(f.second, x, y, ny)) {
                    pole = true;
                    break;
                }
                x = nx;
                y = ny;
                if (x == x0 && y == y0) returns.push_back(n);
            }
            if (pole || !ev.ok) continue;
            std::vector<unsigned> keep;
            std::set_intersection(cand.begin(), cand.end(), returns.begin(), returns.end(), std::back_inserter(keep));
            cand = std::move(keep);
            ++good_points;
        }
        if (ev.ok && good_points == 2) return cand;
    }
    return std::nullopt;
}

} // namespace

std::optional<unsigned> detect_periodicity(const PlaneMap& f, unsigned bound) {
    if (bound == 0) throw DomainError("period bound must be positive");
    auto cand = modular_candidates(f, bound);
    if (!cand) {
        PlaneMap cur = f;
        for (unsigned n = 1; n <= bound; ++n, cur = f.compose(cur))
            if (cur.is_identity()) return n;
        return std::nullopt;
    }
    for (unsigned n : *cand)
        if (f.pow(n).is_identity()) return n;
    return std::nullopt;
}

} // namespace birat
