#include "birat/rational_maps.hpp"

#include "birat/error.hpp"
#include "birat/poly_gcd.hpp"

#include <map>
#include <ostream>
#include <sstream>

namespace birat {

namespace {

MultiPoly X() { return MultiPoly::variable(vars_xy(), 0); }
MultiPoly Y() { return MultiPoly::variable(vars_xy(), 1); }
MultiPoly C(const GaussianRational& c) { return MultiPoly(vars_xy(), c); }

MultiPoly linear(const Triple& t) { return C(t[0]) + t[1] * X() + t[2] * Y(); }

std::string triple_str(const Triple& t) {
    return "(" + format_scalar(t[0]) + ", " + format_scalar(t[1]) + ", " + format_scalar(t[2]) + ")";
}

} // namespace

GaussianRational bracket(const Triple& d, const Triple& e, int i, int j) {
    return d[i] * e[j] - d[j] * e[i];
}

ParameterTuple::ParameterTuple(Triple alpha, Triple beta, Triple gamma)
    : alpha_(std::move(alpha)), beta_(std::move(beta)), gamma_(std::move(gamma)) {
    if (gamma_[1].is_zero() && gamma_[2].is_zero())
        throw InvariantViolation("(gamma1, gamma2) must not be (0, 0)");
}

std::string ParameterTuple::str() const {
    return "alpha=" + triple_str(alpha_) + " beta=" + triple_str(beta_) + " gamma=" + triple_str(gamma_);
}

// ---------------------------------------------------------------- PlaneMap

PlaneMap PlaneMap::identity() { return {RationalFunction(X()), RationalFunction(Y())}; }

PlaneMap PlaneMap::compose(const PlaneMap& inner) const {
    std::array<RationalFunction, 2> img{inner.first, inner.second};
    return {first.compose(img), second.compose(img)};
}

PlaneMap PlaneMap::pow(unsigned n) const {
    PlaneMap r = identity();
    for (unsigned k = 0; k < n; ++k) r = compose(r);
    return r;
}

bool PlaneMap::is_identity() const { return *this == identity(); }

std::array<GaussianRational, 2> PlaneMap::eval(const GaussianRational& x, const GaussianRational& y) const {
    std::array<GaussianRational, 2> pt{x, y};
    return {first.eval(pt), second.eval(pt)};
}

std::string PlaneMap::str() const { return "(" + first.str() + ", " + second.str() + ")"; }

PlaneMap parse_plane_map(std::string_view first, std::string_view second) {
    return {parse_rational_function(first, vars_xy()), parse_rational_function(second, vars_xy())};
}

std::ostream& operator<<(std::ostream& os, const PlaneMap& f) { return os << f.str(); }

// ---------------------------------------------------------------- ProjectiveMap

ProjectiveMap ProjectiveMap::make(std::array<MultiPoly, 3> comps) {
    int deg = -1;
    for (auto& c : comps) {
        if (!same_vars(c.vars(), vars_proj())) throw DomainError("projective components must use x0, x1, x2");
        if (c.is_zero()) continue;
        if (!c.is_homogeneous()) throw InvariantViolation("projective component not homogeneous");
        int d = c.total_degree();
        if (deg >= 0 && d != deg) throw InvariantViolation("projective components of different degrees");
        deg = d;
    }
    if (deg < 0) throw DomainError("projective map with all components zero");

    GcdWithCofactors g = gcd_with_cofactors(std::span<const MultiPoly>(comps.data(), 3));
    ProjectiveMap F;
    for (int k = 0; k < 3; ++k) F.c_[k] = std::move(g.cofactors[k]);
    for (int k = 0; k < 3; ++k) {
        if (F.c_[k].is_zero()) continue;
        GaussianRational s = F.c_[k].leading_coef().inverse();
        if (!s.is_one())
            for (auto& c : F.c_) c *= s;
        F.degree_ = F.c_[k].total_degree();
        break;
    }
    return F;
}

ProjectiveMap ProjectiveMap::identity() {
    return make({MultiPoly::variable(vars_proj(), 0), MultiPoly::variable(vars_proj(), 1),
                 MultiPoly::variable(vars_proj(), 2)});
}

std::size_t ProjectiveMap::term_count() const { return c_[0].size() + c_[1].size() + c_[2].size(); }

bool ProjectiveMap::is_identity() const { return *this == identity(); }

std::string ProjectiveMap::str() const {
    return "[" + c_[0].str() + " : " + c_[1].str() + " : " + c_[2].str() + "]";
}

std::ostream& operator<<(std::ostream& os, const ProjectiveMap& F) { return os << F.str(); }

// ---------------------------------------------------------------- family

std::string to_string(Degeneracy d) {
    switch (d) {
    case Degeneracy::NonDegenerate: return "NonDegenerate";
    case Degeneracy::DegenerateAlphaGamma: return "DegenerateAlphaGamma";
    case Degeneracy::DegenerateBetaGamma: return "DegenerateBetaGamma";
    case Degeneracy::DegenerateBoth: return "DegenerateBoth";
    }
    return "?";
}

PlaneMap build_family_map(const ParameterTuple& p) {
    return {RationalFunction(linear(p.alpha())), reduce_fraction(linear(p.beta()), linear(p.gamma()))};
}

BirationalityReport birationality_check(const ParameterTuple& p) {
    BirationalityReport r;
    GaussianRational ab12 = p.ab(1, 2), ag12 = p.ag(1, 2), bg12 = p.bg(1, 2);
    bool dependent = bg12.is_zero() && p.bg(0, 2).is_zero() && p.bg(0, 1).is_zero();
    if (dependent) r.violated_conditions.push_back(kClauseIndependent);
    if (ab12.is_zero() && ag12.is_zero()) r.violated_conditions.push_back(kClauseAbAg);
    if (ag12.is_zero() && bg12.is_zero()) r.violated_conditions.push_back(kClauseAgBg);
    bool beta_flat = p.beta()[1].is_zero() && p.beta()[2].is_zero();
    if (ab12.is_zero() && bg12.is_zero() && !beta_flat) r.violated_conditions.push_back(kClauseAbBg);
    r.is_birational = r.violated_conditions.empty();

    if (ag12.is_zero() && bg12.is_zero()) r.degeneracy = Degeneracy::DegenerateBoth;
    else if (ag12.is_zero()) r.degeneracy = Degeneracy::DegenerateAlphaGamma;
    else if (bg12.is_zero()) r.degeneracy = Degeneracy::DegenerateBetaGamma;
    return r;
}

void require_birational(const ParameterTuple& p) {
    BirationalityReport r = birationality_check(p);
    if (!r.is_birational)
        throw NotBirational("map is not birational: violates " + r.violated_conditions.front(),
                            r.violated_conditions.front());
}

PlaneMap invert_family(const ParameterTuple& p) {
    require_birational(p);
    const Triple& b = p.beta();
    const Triple& g = p.gamma();
    MultiPoly x = X(), y = Y(), xy = X() * Y();
    MultiPoly e = C(p.ab(1, 2)) - p.ag(1, 2) * y;
    MultiPoly n1 = C(-p.ab(0, 2)) + b[2] * x + p.ag(0, 2) * y - g[2] * xy;
    MultiPoly n2 = C(p.ab(0, 1)) - b[1] * x + p.ag(1, 0) * y + g[1] * xy;
    return {reduce_fraction(n1, e), reduce_fraction(n2, e)};
}

std::pair<MultiPoly, MultiPoly> jacobian_numerators(const ParameterTuple& p) {
    const Triple& a = p.alpha();
    GaussianRational bg01 = p.bg(0, 1), bg02 = p.bg(0, 2), bg12 = p.bg(1, 2);
    MultiPoly j1 = C(a[1] * bg02 - a[2] * bg01) + (a[1] * bg12) * X() + (a[2] * bg12) * Y();
    MultiPoly j2 = C(a[0] * bg12 - a[1] * bg02 + a[2] * bg01) - bg12 * X();
    return {j1, j2};
}

RationalFunction jacobian_determinant(const RationalFunction& u, const RationalFunction& v) {
    return u.derivative(0) * v.derivative(1) - u.derivative(1) * v.derivative(0);
}

RationalFunction jacobian_determinant(const PlaneMap& f) { return jacobian_determinant(f.first, f.second); }

// ---------------------------------------------------------------- P^2

ProjectiveMap homogenize(const PlaneMap& f) {
    const MultiPoly& n1 = f.first.num();
    const MultiPoly& d1 = f.first.den();
    const MultiPoly& n2 = f.second.num();
    const MultiPoly& d2 = f.second.den();
    std::array<MultiPoly, 3> aff{d1 * d2, n1 * d2, n2 * d1};
    int deg = 0;
    for (const auto& q : aff) deg = std::max(deg, q.total_degree());
    std::array<MultiPoly, 3> h;
    for (int k = 0; k < 3; ++k) h[k] = aff[k].homogenize(vars_proj(), unsigned(deg));
    return ProjectiveMap::make(std::move(h));
}

PlaneMap dehomogenize(const ProjectiveMap& F) {
    MultiPoly p0 = F[0].dehomogenize(vars_xy());
    if (p0.is_zero()) throw DomainError("map sends the affine chart to the line at infinity");
    return {reduce_fraction(F[1].dehomogenize(vars_xy()), p0),
            reduce_fraction(F[2].dehomogenize(vars_xy()), p0)};
}

ProjectiveMap compose_reduce(const ProjectiveMap& outer, const ProjectiveMap& inner) {
    std::map<MonoKey, MultiPoly> cache;
    cache.emplace(MonoKey(0), MultiPoly(vars_proj(), 1));
    auto image = [&](auto& self, const Exponents& e) -> const MultiPoly& {
        MonoKey k = pack(e);
        auto it = cache.find(k);
        if (it != cache.end()) return it->second;
        int v = e[0] ? 0 : (e[1] ? 1 : 2);
        Exponents lower = e;
        --lower[v];
        MultiPoly prod = self(self, lower) * inner[v];
        return cache.emplace(k, std::move(prod)).first->second;
    };

    std::array<MultiPoly, 3> out;
    bool all_zero = true;
    for (int c = 0; c < 3; ++c) {
        std::vector<Term> acc;
        for (const auto& t : outer[c].terms()) {
            const MultiPoly& m = image(image, unpack(t.key));
            acc.reserve(acc.size() + m.size());
            for (const auto& mt : m.terms()) acc.push_back({mt.key, mt.coef * t.coef});
        }
        out[c] = MultiPoly::from_terms(vars_proj(), std::move(acc));
        if (!out[c].is_zero()) all_zero = false;
    }
    if (all_zero) throw DegenerateComposition("composition vanishes identically");
    return ProjectiveMap::make(std::move(out));
}

} // namespace birat
