#pragma once

#include "birat/error.hpp"
#include "birat/rational_maps.hpp"

#include <optional>
#include <string>
#include <vector>

namespace birat {

// Point of P^2, first nonzero coordinate scaled to 1.
class ProjPoint {
public:
    ProjPoint(GaussianRational x0, GaussianRational x1, GaussianRational x2);
    explicit ProjPoint(const Triple& c) : ProjPoint(c[0], c[1], c[2]) {}

    const Triple& coords() const { return c_; }
    const GaussianRational& operator[](std::size_t k) const { return c_[k]; }
    std::string str() const;

    friend bool operator==(const ProjPoint&, const ProjPoint&) = default;

private:
    Triple c_;
};

// Line d0 x0 + d1 x1 + d2 x2 = 0, same scaling as ProjPoint.
class ProjLine {
public:
    ProjLine(GaussianRational d0, GaussianRational d1, GaussianRational d2);

    const Triple& coeffs() const { return c_; }
    bool contains(const ProjPoint& p) const;
    MultiPoly equation() const;
    std::string str() const;

    friend bool operator==(const ProjLine&, const ProjLine&) = default;

private:
    Triple c_;
};

class IndeterminatePoint : public DomainError {
public:
    explicit IndeterminatePoint(ProjPoint p)
        : DomainError("map is undefined at " + p.str()), point_(std::move(p)) {}
    const ProjPoint& point() const noexcept { return point_; }

private:
    ProjPoint point_;
};

struct NamedLine {
    std::string name;
    ProjLine line;
};

struct NamedPoint {
    std::string name;
    ProjPoint point;
};

struct SpecialLoci {
    std::vector<NamedLine> exceptional;        // S_i of F
    std::vector<NamedPoint> indeterminacy_f;   // O_i
    std::vector<NamedLine> exceptional_inv;    // T_i of F^-1
    std::vector<NamedPoint> indeterminacy_inv; // A_i
    // exceptional[k] collapses to indeterminacy_inv[collapse_targets[k]]
    std::vector<std::size_t> collapse_targets;
    // exceptional_inv[k] collapses to indeterminacy_f[inv_collapse_targets[k]] under F^-1
    std::vector<std::size_t> inv_collapse_targets;
};

std::ostream& operator<<(std::ostream& os, const ProjPoint& p);
std::ostream& operator<<(std::ostream& os, const ProjLine& l);

SpecialLoci special_loci(const ParameterTuple& p);

// Throws IndeterminatePoint when every component vanishes at p.
ProjPoint apply_map(const ProjectiveMap& F, const ProjPoint& p);

struct OrbitRecord {
    std::vector<ProjPoint> points; // points[n] = F^n(start)
    std::optional<std::size_t> collision_step;
    std::optional<std::string> collision_with; // name of the indeterminacy point hit
    std::optional<std::size_t> cycle_start;    // points[cycle_start] == F(points.back())
};

OrbitRecord orbit_of_point(const ProjectiveMap& F, const ProjPoint& start, const SpecialLoci& loci,
                           std::size_t horizon);

struct Collision {
    std::string line;   // exceptional curve
    std::string target; // its collapse point
    std::size_t step;
    std::string hit;    // indeterminacy point reached
};

struct ASReport {
    bool is_as_on_p2 = true;
    std::vector<Collision> collisions;
    std::size_t horizon = 0;
};

inline constexpr std::size_t kDefaultHorizon = 64;

ASReport as_diagnostic(const ParameterTuple& p, std::size_t horizon = kDefaultHorizon);

} // namespace birat
