#pragma once

#include "birat/rational_function.hpp"

#include <optional>
#include <string>

namespace birat {

// z -> (a z + b) / (c z + d)
class MoebiusMap {
public:
    // Throws DomainError when ad - bc = 0.
    MoebiusMap(GaussianRational a, GaussianRational b, GaussianRational c, GaussianRational d);

    const GaussianRational& a() const { return a_; }
    const GaussianRational& b() const { return b_; }
    const GaussianRational& c() const { return c_; }
    const GaussianRational& d() const { return d_; }

    GaussianRational det() const { return a_ * d_ - b_ * c_; }
    GaussianRational trace() const { return a_ + d_; }
    bool is_scalar() const { return b_.is_zero() && c_.is_zero() && a_ == d_; }

    MoebiusMap operator*(const MoebiusMap& o) const; // this o o
    MoebiusMap pow(unsigned n) const;
    // The map as a rational function of the given single variable.
    RationalFunction as_function(const VarList& vars, std::size_t var = 0) const;
    std::string str() const;

    friend bool operator==(const MoebiusMap&, const MoebiusMap&) = default;

private:
    GaussianRational a_, b_, c_, d_;
};

// h(y) = beta0 / (gamma0 + y); throws DomainError when beta0 = 0.
MoebiusMap moebius_from_h(const GaussianRational& gamma0, const GaussianRational& beta0);
// m(x) = alpha0 + alpha1 x; throws DomainError when alpha1 = 0.
MoebiusMap moebius_from_affine(const GaussianRational& alpha0, const GaussianRational& alpha1);

enum class MoebiusKind { Identity, FiniteOrder, Parabolic, NonPeriodic };

std::string to_string(MoebiusKind k);

struct PeriodReport {
    bool periodic = false;
    unsigned period = 0;
    GaussianRational trace_invariant; // tr^2 / det
    MoebiusKind kind = MoebiusKind::NonPeriodic;
};

PeriodReport periodicity_exact(const MoebiusMap& m);

// Order of a root of unity in Q(i): 1, 2 or 4.
std::optional<unsigned> root_of_unity_order(const GaussianRational& z);

// Minimal n <= n_max with 1 + a^k + a^2k + ... + a^nk = 0.
std::optional<unsigned> geometric_sum_vanishing(const GaussianRational& alpha1, unsigned k, unsigned n_max);

// Roots p, q of z^2 - gamma0 z - beta0 and m with m^2 = q/p.
struct RootPair {
    bool exact = false;      // p, q, m all in Q(i)
    bool roots_exact = false; // p, q in Q(i)
    GaussianRational p, q, m;
    MultiPoly min_poly; // z^2 - gamma0 z - beta0
};

// Throws DomainError when gamma0^2 + 4 beta0 = 0.
RootPair root_pair_data(const GaussianRational& gamma0, const GaussianRational& beta0);

} // namespace birat
