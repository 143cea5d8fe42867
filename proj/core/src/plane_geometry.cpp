#include "birat/plane_geometry.hpp"

#include <algorithm>
#include <ostream>

namespace birat {

namespace {

Triple normalized(Triple c, const char* what) {
    for (int k = 0; k < 3; ++k) {
        if (c[k].is_zero()) continue;
        if (!c[k].is_one()) {
            GaussianRational s = c[k].inverse();
            for (auto& v : c) v *= s;
        }
        return c;
    }
    throw DomainError(std::string(what) + " with all coordinates zero");
}

std::string triple_text(const Triple& c, const char* sep) {
    return format_scalar(c[0]) + sep + format_scalar(c[1]) + sep + format_scalar(c[2]);
}

} // namespace

ProjPoint::ProjPoint(GaussianRational x0, GaussianRational x1, GaussianRational x2)
    : c_(normalized({std::move(x0), std::move(x1), std::move(x2)}, "projective point")) {}

std::string ProjPoint::str() const { return "[" + triple_text(c_, ":") + "]"; }

ProjLine::ProjLine(GaussianRational d0, GaussianRational d1, GaussianRational d2)
    : c_(normalized({std::move(d0), std::move(d1), std::move(d2)}, "projective line")) {}

bool ProjLine::contains(const ProjPoint& p) const {
    return (c_[0] * p[0] + c_[1] * p[1] + c_[2] * p[2]).is_zero();
}

MultiPoly ProjLine::equation() const {
    MultiPoly e(vars_proj());
    for (int k = 0; k < 3; ++k) e += c_[k] * MultiPoly::variable(vars_proj(), k);
    return e;
}

std::string ProjLine::str() const { return "{" + equation().str() + " = 0}"; }

std::ostream& operator<<(std::ostream& os, const ProjPoint& p) { return os << p.str(); }
std::ostream& operator<<(std::ostream& os, const ProjLine& l) { return os << l.str(); }

SpecialLoci special_loci(const ParameterTuple& p) {
    BirationalityReport br = birationality_check(p);
    if (!br.is_birational)
        throw NotBirational("loci need a birational map: violates " + br.violated_conditions.front(),
                            br.violated_conditions.front());
    const Triple& a = p.alpha();
    const Triple& g = p.gamma();
    GaussianRational bg12 = p.bg(1, 2), bg02 = p.bg(0, 2), bg01 = p.bg(0, 1);
    GaussianRational ab12 = p.ab(1, 2), ag12 = p.ag(1, 2);

    SpecialLoci L;
    L.exceptional.push_back({"S0", ProjLine(1, 0, 0)});
    L.exceptional.push_back({"S1", ProjLine(g[0], g[1], g[2])});
    L.indeterminacy_inv.push_back({"A0", ProjPoint(0, 1, 0)});
    L.indeterminacy_inv.push_back({"A1", ProjPoint(0, 0, 1)});
    ProjPoint o_alpha(0, a[2], -a[1]);
    GaussianRational t0_coef = g[0] * ab12 - g[1] * p.ab(0, 2) + g[2] * p.ab(0, 1);

    switch (br.degeneracy) {
    case Degeneracy::DegenerateAlphaGamma:
        L.indeterminacy_f.push_back({"O0", ProjPoint(bg12, p.bg(2, 0), bg01)});
        L.indeterminacy_f.push_back({"O1", o_alpha});
        L.exceptional_inv.push_back({"T0", ProjLine(t0_coef, -bg12, 0)});
        L.exceptional_inv.push_back({"T1", ProjLine(1, 0, 0)});
        break;
    case Degeneracy::DegenerateBetaGamma:
        L.indeterminacy_f.push_back({"O0", ProjPoint(0, g[2], -g[1])});
        L.indeterminacy_f.push_back({"O1", o_alpha});
        L.exceptional_inv.push_back({"T0", ProjLine(1, 0, 0)});
        L.exceptional_inv.push_back({"T1", ProjLine(ab12, 0, -ag12)});
        break;
    default:
        L.exceptional.push_back({"S2", ProjLine(a[1] * bg02 - a[2] * bg01, a[1] * bg12, a[2] * bg12)});
        L.indeterminacy_f.push_back({"O0", ProjPoint(bg12, p.bg(2, 0), bg01)});
        L.indeterminacy_f.push_back({"O1", o_alpha});
        L.indeterminacy_f.push_back({"O2", ProjPoint(0, g[2], -g[1])});
        L.exceptional_inv.push_back({"T0", ProjLine(t0_coef, -bg12, 0)});
        L.exceptional_inv.push_back({"T1", ProjLine(ab12, 0, -ag12)});
        L.exceptional_inv.push_back({"T2", ProjLine(1, 0, 0)});
        L.indeterminacy_inv.push_back(
            {"A2", ProjPoint(bg12 * ag12, (a[0] * bg12 - a[1] * bg02 + a[2] * bg01) * ag12, ab12 * bg12)});
        break;
    }
    for (std::size_t k = 0; k < L.exceptional.size(); ++k) L.collapse_targets.push_back(k);
    for (std::size_t k = 0; k < L.exceptional_inv.size(); ++k) L.inv_collapse_targets.push_back(k);
    return L;
}

ProjPoint apply_map(const ProjectiveMap& F, const ProjPoint& p) {
    Triple img;
    for (int k = 0; k < 3; ++k) img[k] = F[k].eval(p.coords());
    if (img[0].is_zero() && img[1].is_zero() && img[2].is_zero()) throw IndeterminatePoint(p);
    return ProjPoint(img);
}

OrbitRecord orbit_of_point(const ProjectiveMap& F, const ProjPoint& start, const SpecialLoci& loci,
                           std::size_t horizon) {
    OrbitRecord r;
    ProjPoint cur = start;
    for (std::size_t n = 0;; ++n) {
        auto hit = std::find_if(loci.indeterminacy_f.begin(), loci.indeterminacy_f.end(),
                                [&](const NamedPoint& o) { return o.point == cur; });
        if (hit != loci.indeterminacy_f.end()) {
            r.points.push_back(cur);
            r.collision_step = n;
            r.collision_with = hit->name;
            return r;
        }
        auto seen = std::find(r.points.begin(), r.points.end(), cur);
        if (seen != r.points.end()) {
            r.cycle_start = std::size_t(seen - r.points.begin());
            return r;
        }
        r.points.push_back(cur);
        if (n == horizon) return r;
        try {
            cur = apply_map(F, cur);
        } catch (const IndeterminatePoint&) {
            r.collision_step = n;
            r.collision_with = cur.str();
            return r;
        }
    }
}

ASReport as_diagnostic(const ParameterTuple& p, std::size_t horizon) {
    SpecialLoci L = special_loci(p);
    ProjectiveMap F = homogenize(build_family_map(p));
    ASReport rep;
    rep.horizon = horizon;
    for (std::size_t k = 0; k < L.exceptional.size(); ++k) {
        const NamedPoint& target = L.indeterminacy_inv[L.collapse_targets[k]];
        OrbitRecord orb = orbit_of_point(F, target.point, L, horizon);
        if (orb.collision_step)
            rep.collisions.push_back({L.exceptional[k].name, target.name, *orb.collision_step, *orb.collision_with});
    }
    rep.is_as_on_p2 = rep.collisions.empty();
    return rep;
}

} // namespace birat
