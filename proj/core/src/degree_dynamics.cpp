#include "birat/degree_dynamics.hpp"

#include "birat/error.hpp"
#include "upoly_q.hpp"

namespace birat {

using detail::UPolyQ;

DegreeSequence degree_sequence(const ProjectiveMap& F, std::size_t n, std::size_t term_budget) {
    DegreeSequence s;
    s.requested = n;
    if (n == 0) return s;
    ProjectiveMap cur = F;
    s.degrees.push_back(cur.degree());
    while (s.degrees.size() < n) {
        if (cur.term_count() > term_budget) {
            s.truncated = true;
            break;
        }
        cur = compose_reduce(F, cur);
        s.degrees.push_back(cur.degree());
    }
    return s;
}

DegreeSequence degree_sequence(const ParameterTuple& p, std::size_t n, std::size_t term_budget) {
    require_birational(p);
    return degree_sequence(homogenize(build_family_map(p)), n, term_budget);
}

RecurrenceFit fit_recurrence(const std::vector<long>& seq) {
    if (seq.size() < 4) throw InconclusiveFit("need at least 4 terms to fit a recurrence");
    std::size_t n = seq.size();
    UPolyQ c{1}, b{1};
    std::size_t len = 0, m = 1;
    mpq_class bd = 1;
    for (std::size_t k = 0; k < n; ++k) {
        mpq_class d = seq[k];
        for (std::size_t i = 1; i <= len && i < c.size(); ++i) d += c[i] * seq[k - i];
        if (sgn(d) == 0) {
            ++m;
            continue;
        }
        UPolyQ t = c;
        mpq_class coef = d / bd;
        if (c.size() < b.size() + m) c.resize(b.size() + m, 0);
        for (std::size_t i = 0; i < b.size(); ++i) c[i + m] -= coef * b[i];
        if (2 * len <= k) {
            len = k + 1 - len;
            b = std::move(t);
            bd = d;
            m = 1;
        } else {
            ++m;
        }
    }
    if (2 * len > n)
        throw InconclusiveFit("recurrence order " + std::to_string(len) + " exceeds half of " +
                              std::to_string(n) + " terms");
    c.resize(len + 1, 0);

    RecurrenceFit fit;
    fit.order = int(len);
    UPolyQ cp(len + 1);
    for (std::size_t i = 0; i <= len; ++i) cp[len - i] = c[i];
    for (std::size_t j = 0; j < len; ++j) fit.coefficients.emplace_back(mpq_class(-cp[j]));
    fit.char_poly = detail::to_multipoly(cp);
    return fit;
}

std::optional<std::size_t> first_violation(const MultiPoly& char_poly, const std::vector<long>& seq) {
    UPolyQ p = detail::from_multipoly(char_poly);
    std::size_t len = p.size() - 1;
    for (std::size_t t = 0; t + len < seq.size(); ++t) {
        mpq_class acc = 0;
        for (std::size_t j = 0; j <= len; ++j) acc += p[j] * seq[t + j];
        if (sgn(acc) != 0) return t + len + 1;
    }
    return std::nullopt;
}

mpq_class dynamical_degree_estimate(const DegreeSequence& s) {
    if (s.size() < 2) throw DomainError("need at least 2 terms for a degree ratio");
    mpq_class r(s.degrees.back(), s.degrees[s.size() - 2]);
    r.canonicalize();
    return r;
}

std::string to_string(Growth g) {
    switch (g) {
    case Growth::Bounded: return "Bounded";
    case Growth::Linear: return "Linear";
    case Growth::Quadratic: return "Quadratic";
    case Growth::Exponential: return "Exponential";
    case Growth::Unclassified: return "Unclassified";
    }
    return "?";
}

namespace {

// Largest multiplicity of a root when every root of p is an M-th root of unity
// for some M <= max_order, else 0.
int root_of_unity_multiplicity(const UPolyQ& p, int max_order) {
    for (int order = 1; order <= max_order; ++order) {
        UPolyQ zm(std::size_t(order) + 1, 0);
        zm[0] = -1;
        zm[std::size_t(order)] = 1;
        UPolyQ rest = p;
        int mult = 0;
        while (detail::degree(rest) > 0) {
            UPolyQ g = detail::gcd(rest, zm);
            if (detail::degree(g) < 1) break;
            UPolyQ q, r;
            detail::divmod(rest, g, q, r);
            rest = std::move(q);
            ++mult;
        }
        if (detail::degree(rest) == 0) return std::max(mult, 1);
    }
    return 0;
}

} // namespace

GrowthClass growth_class(const RecurrenceFit& fit, const DegreeSequence& s) {
    GrowthClass g;
    UPolyQ p = detail::from_multipoly(fit.char_poly);
    while (p.size() > 1 && sgn(p[0]) == 0) p.erase(p.begin());

    UPolyQ rest = p;
    int mult_one = 0;
    for (;;) {
        UPolyQ q, r;
        detail::divmod(rest, UPolyQ{-1, 1}, q, r);
        if (!r.empty()) break;
        rest = std::move(q);
        ++mult_one;
    }
    long observed_max = 0;
    for (long d : s.degrees) observed_max = std::max(observed_max, d);
    std::string observed = "; observed max d_n = " + std::to_string(observed_max);

    if (detail::roots_above(rest, 1) > 0) {
        mpq_class root = detail::largest_real_root(p, 80);
        g.tag = Growth::Exponential;
        g.dynamical_degree = root.get_d();
        mpq_class shifted = root + mpq_class(1, 2);
        mpz_class nearest;
        mpz_fdiv_q(nearest.get_mpz_t(), shifted.get_num_mpz_t(), shifted.get_den_mpz_t());
        if (sgn(detail::eval(p, mpq_class(nearest))) == 0) g.dynamical_degree_exact = nearest.get_str();
        else g.dynamical_degree_exact = "largest real root of " + format_poly(fit.char_poly);
        g.diagnostics = "real root > 1" + observed;
        return g;
    }
    int mult = root_of_unity_multiplicity(p, 2 * int(p.size() * p.size()) + 2);
    if (mult == 0) {
        g.tag = Growth::Unclassified;
        g.diagnostics = "spectrum is not a set of roots of unity and has no real root > 1" + observed;
        return g;
    }
    g.dynamical_degree = 1;
    g.dynamical_degree_exact = "1";
    g.diagnostics = "roots of unity, max multiplicity " + std::to_string(mult) + ", root 1 multiplicity " +
                    std::to_string(mult_one) + observed;
    switch (mult) {
    case 1: g.tag = Growth::Bounded; break;
    case 2: g.tag = Growth::Linear; break;
    case 3: g.tag = Growth::Quadratic; break;
    default: g.tag = Growth::Unclassified; break;
    }
    return g;
}

} // namespace birat
