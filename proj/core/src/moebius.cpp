#include "birat/moebius.hpp"

#include "birat/error.hpp"

namespace birat {

MoebiusMap::MoebiusMap(GaussianRational a, GaussianRational b, GaussianRational c, GaussianRational d)
    : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), d_(std::move(d)) {
    if (det().is_zero()) throw DomainError("Moebius matrix is singular");
}

MoebiusMap MoebiusMap::operator*(const MoebiusMap& o) const {
    return {a_ * o.a_ + b_ * o.c_, a_ * o.b_ + b_ * o.d_, c_ * o.a_ + d_ * o.c_, c_ * o.b_ + d_ * o.d_};
}

MoebiusMap MoebiusMap::pow(unsigned n) const {
    MoebiusMap r(1, 0, 0, 1), base = *this;
    for (; n; n >>= 1) {
        if (n & 1) r = r * base;
        base = base * base;
    }
    return r;
}

RationalFunction MoebiusMap::as_function(const VarList& vars, std::size_t var) const {
    MultiPoly z = MultiPoly::variable(vars, var);
    return reduce_fraction(a_ * z + MultiPoly(vars, b_), c_ * z + MultiPoly(vars, d_));
}

std::string MoebiusMap::str() const {
    return "((" + format_scalar(a_) + ", " + format_scalar(b_) + "), (" + format_scalar(c_) + ", " +
           format_scalar(d_) + "))";
}

MoebiusMap moebius_from_h(const GaussianRational& gamma0, const GaussianRational& beta0) {
    if (beta0.is_zero()) throw DomainError("h(y) = beta0/(gamma0 + y) is constant for beta0 = 0");
    return {0, beta0, 1, gamma0};
}

MoebiusMap moebius_from_affine(const GaussianRational& alpha0, const GaussianRational& alpha1) {
    if (alpha1.is_zero()) throw DomainError("m(x) = alpha0 + alpha1 x is constant for alpha1 = 0");
    return {alpha1, alpha0, 0, 1};
}

std::string to_string(MoebiusKind k) {
    switch (k) {
    case MoebiusKind::Identity: return "Identity";
    case MoebiusKind::FiniteOrder: return "FiniteOrder";
    case MoebiusKind::Parabolic: return "Parabolic";
    case MoebiusKind::NonPeriodic: return "NonPeriodic";
    }
    return "?";
}

PeriodReport periodicity_exact(const MoebiusMap& m) {
    PeriodReport r;
    GaussianRational tr = m.trace();
    r.trace_invariant = tr * tr / m.det();
    if (m.is_scalar()) {
        r.periodic = true;
        r.period = 1;
        r.kind = MoebiusKind::Identity;
        return r;
    }
    const GaussianRational& j = r.trace_invariant;
    // j = 2 + zeta + 1/zeta for the eigenvalue ratio zeta
    unsigned order = 0;
    if (j == GaussianRational(0)) order = 2;
    else if (j == GaussianRational(1)) order = 3;
    else if (j == GaussianRational(2)) order = 4;
    else if (j == GaussianRational(3)) order = 6;
    else if (j == GaussianRational(4)) r.kind = MoebiusKind::Parabolic;
    if (order == 0) {
        if (r.kind != MoebiusKind::Parabolic) r.kind = MoebiusKind::NonPeriodic;
        return r;
    }
    for (unsigned k = 1; k < order; ++k)
        if (m.pow(k).is_scalar()) throw InvariantViolation("Moebius order lookup disagrees with matrix powers");
    if (!m.pow(order).is_scalar()) throw InvariantViolation("Moebius order lookup disagrees with matrix powers");
    r.periodic = true;
    r.period = order;
    r.kind = MoebiusKind::FiniteOrder;
    return r;
}

std::optional<unsigned> root_of_unity_order(const GaussianRational& z) {
    if (z == GaussianRational(1)) return 1u;
    if (z == GaussianRational(-1)) return 2u;
    if (z == GaussianRational::i() || z == -GaussianRational::i()) return 4u;
    return std::nullopt;
}

std::optional<unsigned> geometric_sum_vanishing(const GaussianRational& alpha1, unsigned k, unsigned n_max) {
    if (alpha1.is_zero()) throw DomainError("geometric sum needs alpha1 != 0");
    auto order = root_of_unity_order(alpha1.pow(long(k)));
    if (!order || *order == 1) return std::nullopt;
    unsigned n = *order - 1;
    if (n > n_max) return std::nullopt;
    return n;
}

RootPair root_pair_data(const GaussianRational& gamma0, const GaussianRational& beta0) {
    GaussianRational disc = gamma0 * gamma0 + 4 * beta0;
    if (disc.is_zero()) throw DomainError("gamma0^2 + 4 beta0 = 0: repeated root");
    RootPair r;
    MultiPoly z = MultiPoly::variable(vars_z(), 0);
    r.min_poly = z * z - gamma0 * z - MultiPoly(vars_z(), beta0);
    GaussianRational s;
    if (!gaussian_sqrt(disc, s)) return r;
    r.roots_exact = true;
    r.p = (gamma0 + s) / 2;
    r.q = (gamma0 - s) / 2;
    if (r.p.is_zero()) std::swap(r.p, r.q);
    if (r.p.is_zero()) return r;
    r.exact = gaussian_sqrt(r.q / r.p, r.m);
    return r;
}

} // namespace birat
