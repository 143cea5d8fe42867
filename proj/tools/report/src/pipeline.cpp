#include "birat/report/pipeline.hpp"

#include "birat/case_classifier.hpp"
#include "birat/degree_dynamics.hpp"
#include "birat/error.hpp"
#include "birat/fibration.hpp"
#include "birat/plane_geometry.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

namespace birat::report {

namespace {

std::vector<std::string> texts(const Triple& t) {
    return {format_scalar(t[0]), format_scalar(t[1]), format_scalar(t[2])};
}

bool wants(const JobConfig& cfg, Command c) {
    return std::find(cfg.commands.begin(), cfg.commands.end(), c) != cfg.commands.end();
}

BirationalityRecord birationality_record(const ParameterTuple& p) {
    BirationalityReport b = birationality_check(p);
    return {b.is_birational, b.violated_conditions, to_string(b.degeneracy)};
}

CaseRecord case_record(const CaseReport& r) {
    CaseRecord c;
    c.family = to_string(r.family);
    c.subcase = to_string(r.subcase);
    for (const auto& d : r.parameters_used) c.parameters.push_back({d.name, d.value, d.provenance});
    c.both_families = r.both_families;
    if (r.h) c.h = r.h->as_function(vars_z()).str();
    return c;
}

FitRecord fit_record(const DegreeSequence& seq) {
    RecurrenceFit fit = fit_recurrence(seq);
    GrowthClass g = growth_class(fit, seq);
    FitRecord f;
    f.char_poly = format_poly(fit.char_poly);
    f.order = fit.order;
    for (const auto& c : fit.coefficients) f.coefficients.push_back(format_scalar(c));
    f.growth = to_string(g.tag);
    f.dynamical_degree = g.dynamical_degree_exact;
    f.estimate = dynamical_degree_estimate(seq).get_str();
    f.diagnostics = g.diagnostics;
    return f;
}

LociRecord loci_record(const ParameterTuple& p) {
    SpecialLoci l = special_loci(p);
    LociRecord r;
    for (const auto& x : l.exceptional) r.exceptional.push_back({x.name, x.line.str()});
    for (const auto& x : l.indeterminacy_f) r.indeterminacy.push_back({x.name, x.point.str()});
    for (const auto& x : l.exceptional_inv) r.exceptional_inverse.push_back({x.name, x.line.str()});
    for (const auto& x : l.indeterminacy_inv) r.indeterminacy_inverse.push_back({x.name, x.point.str()});
    for (std::size_t k = 0; k < l.collapse_targets.size(); ++k)
        r.collapses.push_back({l.exceptional[k].name, l.indeterminacy_inv[l.collapse_targets[k]].name});
    for (std::size_t k = 0; k < l.inv_collapse_targets.size(); ++k)
        r.collapses.push_back({l.exceptional_inv[k].name, l.indeterminacy_f[l.inv_collapse_targets[k]].name});
    return r;
}

AsRecord as_record(const ParameterTuple& p, std::size_t horizon) {
    ASReport a = as_diagnostic(p, horizon);
    AsRecord r;
    r.algebraically_stable = a.is_as_on_p2;
    r.horizon = a.horizon;
    for (const auto& c : a.collisions) r.collisions.push_back({c.line, c.target, c.step, c.hit});
    return r;
}

NormalFormRecord normal_form_record(const NormalFormMap& n) {
    NormalFormRecord r;
    r.shape = to_string(n.shape);
    r.map = n.map.str();
    const AffineConjugation& c = n.conjugation;
    r.conjugation = {{"a", format_scalar(c.a)}, {"b", format_scalar(c.b)}, {"c", format_scalar(c.c)},
                     {"d", format_scalar(c.d)}};
    switch (n.shape) {
    case NormalShape::AffineOverX:
    case NormalShape::AffineOverSum:
        r.parameters = {{"alpha0", format_scalar(n.alpha0)}, {"alpha1", format_scalar(n.alpha1)},
                        {"beta0", format_scalar(n.beta0)}};
        break;
    case NormalShape::SkewMoebius:
    case NormalShape::SplitMoebius:
        r.parameters = {{"alpha0", format_scalar(n.alpha0)}, {"alpha1", format_scalar(n.alpha1)},
                        {"beta0", format_scalar(n.beta0)}, {"gamma0", format_scalar(n.gamma0)}};
        break;
    case NormalShape::Swap:
        r.parameters = {{"beta0", format_scalar(n.beta0)}, {"gamma0", format_scalar(n.gamma0)}};
        break;
    }
    return r;
}

// Pairs the catalog asserts to be transverse.
std::vector<std::pair<std::string, std::string>> transverse_pairs(NormalShape s) {
    switch (s) {
    case NormalShape::Swap: return {{"H1", "H2"}, {"K1", "K2"}};
    case NormalShape::SkewMoebius:
    case NormalShape::SplitMoebius: return {{"V1", "V2"}};
    default: return {};
    }
}

FibrationsRecord fibrations_record(const NormalFormMap& form, std::uint64_t seed, std::vector<std::string>& failures) {
    FibrationsRecord r;
    std::vector<FibrationSpec> specs = builtin_fibrations(form);
    for (const FibrationSpec& s : specs) {
        // checked against the original map through the conjugation
        FibrationVerdict v = verify_fibration(form.original, pull_back(s, form.conjugation), seed);
        FibrationRecord f;
        f.label = s.label;
        f.description = s.description;
        f.transform = s.transform.str();
        f.formula = s.formula;
        f.verdict = to_string(v.verdict);
        f.expected_degenerate = s.degenerate;
        f.numeric = v.numeric;
        f.samples = v.samples;
        f.detail = v.detail;
        bool ok = v.passed() || (v.verdict == Verdict::Degenerate && s.degenerate);
        if (!ok) failures.push_back("fibration " + s.label + ": " + v.detail);
        r.fibrations.push_back(std::move(f));
    }
    auto find = [&](const std::string& label) -> const FibrationSpec* {
        for (const auto& s : specs)
            if (s.label == label && !s.degenerate) return &s;
        return nullptr;
    };
    for (const auto& [a, b] : transverse_pairs(form.shape)) {
        const FibrationSpec *s1 = find(a), *s2 = find(b);
        if (!s1 || !s2) continue;
        TransversalityVerdict t = transversality(*s1, *s2, seed);
        TransversalityRecord tr;
        tr.first = a;
        tr.second = b;
        tr.transverse = t.transverse;
        tr.numeric = t.numeric;
        tr.detail = t.detail;
        if (form.shape == NormalShape::Swap && t.determinant) {
            if (auto expected = expected_jacobian(form)) tr.matches_closed_form = *expected == *t.determinant;
        }
        if (!t.transverse) failures.push_back("transversality " + a + "," + b + ": " + t.detail);
        if (tr.matches_closed_form == false) failures.push_back("transversality " + a + "," + b + ": closed form");
        r.transversality.push_back(std::move(tr));
    }
    return r;
}

} // namespace

MapRecord run_map(const NamedMap& map, const JobConfig& cfg) {
    MapRecord rec;
    rec.name = map.name;
    const ParameterTuple& p = map.params;
    rec.alpha = texts(p.alpha());
    rec.beta = texts(p.beta());
    rec.gamma = texts(p.gamma());
    rec.birationality = birationality_record(p);
    const std::size_t n = map.n_iterates.value_or(cfg.n_iterates);
    rec.n_iterates = n;

    auto guarded = [&](Command c, auto&& body) {
        if (!wants(cfg, c)) return;
        try {
            body();
        } catch (const std::exception& e) {
            rec.errors.push_back({to_string(c), e.what()});
        }
    };

    std::optional<CaseReport> report;
    auto need_case = [&]() -> const CaseReport& {
        if (!report) report = classify(p);
        return *report;
    };
    std::optional<DegreeSequence> seq;
    auto need_degrees = [&]() -> const DegreeSequence& {
        if (!seq) {
            require_birational(p);
            seq = degree_sequence(p, n);
        }
        return *seq;
    };

    guarded(Command::Classify, [&] { rec.classification = case_record(need_case()); });
    // before degrees, so its sequence is reused
    guarded(Command::CrossCheck, [&] {
        VerificationReport v = cross_check(p, n);
        if (!seq && !v.sequence.truncated) seq = v.sequence;
        CrossCheckRecord c;
        c.passed = v.passed;
        c.closed_form = v.model.closed_form_text;
        c.char_poly = v.model.char_poly_text;
        for (const auto& item : v.checks) c.checks.push_back({item.name, item.passed, item.detail});
        rec.crosscheck = c;
        if (!v.passed) rec.failures.push_back("crosscheck");
    });
    guarded(Command::Degrees, [&] {
        const DegreeSequence& s = need_degrees();
        rec.degrees = DegreesRecord{s.degrees, s.truncated};
        if (s.truncated) rec.failures.push_back("degrees: term budget exhausted");
    });
    guarded(Command::Fit, [&] {
        const DegreeSequence& s = need_degrees();
        if (!rec.degrees) rec.degrees = DegreesRecord{s.degrees, s.truncated};
        rec.fit = fit_record(s);
    });
    guarded(Command::Loci, [&] {
        require_birational(p);
        rec.loci = loci_record(p);
    });
    guarded(Command::AsCheck, [&] {
        require_birational(p);
        rec.as_check = as_record(p, cfg.horizon);
    });
    std::optional<NormalFormMap> form;
    guarded(Command::NormalForm, [&] {
        form = normal_form(p, need_case());
        rec.normal_form = normal_form_record(*form);
    });
    guarded(Command::VerifyFibrations, [&] {
        if (!form) form = normal_form(p, need_case());
        rec.fibrations = fibrations_record(*form, cfg.seed, rec.failures);
    });
    guarded(Command::Period, [&] {
        require_birational(p);
        rec.period = PeriodRecord{cfg.period_bound, detect_periodicity(build_family_map(p), cfg.period_bound)};
    });
    return rec;
}

JobReport run(const JobConfig& cfg) {
    JobReport r;
    r.seed = cfg.seed;
    for (Command c : cfg.commands) r.commands.push_back(to_string(c));
    r.n_iterates = cfg.n_iterates;
    r.horizon = cfg.horizon;
    r.period_bound = cfg.period_bound;
    r.maps.resize(cfg.maps.size());

    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i; (i = next++) < cfg.maps.size();) r.maps[i] = run_map(cfg.maps[i], cfg);
    };
    unsigned n = std::max(1u, std::min<unsigned>(cfg.workers, unsigned(cfg.maps.size())));
    std::vector<std::thread> pool;
    for (unsigned t = 1; t < n; ++t) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();

    std::sort(r.maps.begin(), r.maps.end(), [](const MapRecord& a, const MapRecord& b) { return a.name < b.name; });
    r.passed = std::all_of(r.maps.begin(), r.maps.end(), [](const MapRecord& m) { return m.ok(); });
    return r;
}

} // namespace birat::report
