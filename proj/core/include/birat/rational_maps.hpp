#pragma once

#include "birat/rational_function.hpp"

#include <array>
#include <string>
#include <utility>
#include <vector>

namespace birat {

using Triple = std::array<GaussianRational, 3>;

// (de)_ij = d_i e_j - d_j e_i
GaussianRational bracket(const Triple& d, const Triple& e, int i, int j);

// Coefficients of f(x,y) = (a0 + a1 x + a2 y, (b0 + b1 x + b2 y) / (g0 + g1 x + g2 y)).
class ParameterTuple {
public:
    // Throws InvariantViolation when (g1, g2) = (0, 0).
    ParameterTuple(Triple alpha, Triple beta, Triple gamma);

    const Triple& alpha() const { return alpha_; }
    const Triple& beta() const { return beta_; }
    const Triple& gamma() const { return gamma_; }

    GaussianRational ab(int i, int j) const { return bracket(alpha_, beta_, i, j); }
    GaussianRational ag(int i, int j) const { return bracket(alpha_, gamma_, i, j); }
    GaussianRational bg(int i, int j) const { return bracket(beta_, gamma_, i, j); }

    std::string str() const;

    friend bool operator==(const ParameterTuple&, const ParameterTuple&) = default;

private:
    Triple alpha_;
    Triple beta_;
    Triple gamma_;
};

// Affine plane map in (x, y).
struct PlaneMap {
    RationalFunction first;
    RationalFunction second;

    static PlaneMap identity();
    // this o inner
    PlaneMap compose(const PlaneMap& inner) const;
    PlaneMap pow(unsigned n) const;
    bool is_identity() const;
    std::array<GaussianRational, 2> eval(const GaussianRational& x, const GaussianRational& y) const;
    std::string str() const;

    friend bool operator==(const PlaneMap&, const PlaneMap&) = default;
};

PlaneMap parse_plane_map(std::string_view first, std::string_view second);

// Reduced triple of homogeneous polynomials of one degree in (x0, x1, x2),
// scaled so the first nonzero component has leading coefficient 1.
class ProjectiveMap {
public:
    static ProjectiveMap make(std::array<MultiPoly, 3> components);
    static ProjectiveMap identity();

    const std::array<MultiPoly, 3>& components() const { return c_; }
    const MultiPoly& operator[](std::size_t k) const { return c_[k]; }
    int degree() const { return degree_; }
    std::size_t term_count() const;
    bool is_identity() const;
    std::string str() const;

    friend bool operator==(const ProjectiveMap& a, const ProjectiveMap& b) { return a.c_ == b.c_; }

private:
    std::array<MultiPoly, 3> c_;
    int degree_ = 0;
};

enum class Degeneracy { NonDegenerate, DegenerateAlphaGamma, DegenerateBetaGamma, DegenerateBoth };

std::string to_string(Degeneracy d);

struct BirationalityReport {
    bool is_birational = false;
    std::vector<std::string> violated_conditions;
    Degeneracy degeneracy = Degeneracy::NonDegenerate;
};

inline constexpr const char* kClauseIndependent = "rows (beta, gamma) linearly independent";
inline constexpr const char* kClauseAbAg = "((alpha beta)12, (alpha gamma)12) != (0,0)";
inline constexpr const char* kClauseAgBg = "((alpha gamma)12, (beta gamma)12) != (0,0)";
inline constexpr const char* kClauseAbBg = "((alpha beta)12, (beta gamma)12) != (0,0) or (beta1, beta2) = (0,0)";

PlaneMap build_family_map(const ParameterTuple& p);
BirationalityReport birationality_check(const ParameterTuple& p);
// Throws NotBirational naming the first violated clause.
void require_birational(const ParameterTuple& p);
PlaneMap invert_family(const ParameterTuple& p);

// Numerators J1, J2 with det Df = -J1 / (g0 + g1 x + g2 y)^2 and
// det D(f^-1) = J2 / ((ab)12 - (ag)12 y)^2.
std::pair<MultiPoly, MultiPoly> jacobian_numerators(const ParameterTuple& p);

// det of the 2x2 Jacobian, by symbolic differentiation.
RationalFunction jacobian_determinant(const RationalFunction& u, const RationalFunction& v);
RationalFunction jacobian_determinant(const PlaneMap& f);

ProjectiveMap homogenize(const PlaneMap& f);
PlaneMap dehomogenize(const ProjectiveMap& F);

// outer o inner with the common factor of the three components removed.
// Throws DegenerateComposition if every component vanishes.
ProjectiveMap compose_reduce(const ProjectiveMap& outer, const ProjectiveMap& inner);

std::ostream& operator<<(std::ostream& os, const PlaneMap& f);
std::ostream& operator<<(std::ostream& os, const ProjectiveMap& F);

} // namespace birat
