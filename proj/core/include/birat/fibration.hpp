#pragma once

#include "birat/case_classifier.hpp"
#include "birat/moebius.hpp"
#include "birat/rational_maps.hpp"

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace birat {

// (x, y) -> (a x + b, c y + d)
struct AffineConjugation {
    GaussianRational a = 1, b = 0, c = 1, d = 0;

    PlaneMap as_map() const;
    PlaneMap inverse_map() const;
};

enum class NormalShape {
    AffineOverX,   // (alpha0 + alpha1 x, (beta0 + y)/x)
    AffineOverSum, // (alpha0 + alpha1 x, beta0/(x + y))
    SkewMoebius,   // (alpha0 + alpha1 x + y, beta0/(gamma0 + y)), alpha0 = 0 unless alpha1 = 1
    SplitMoebius,  // (alpha0 + alpha1 x, beta0/(gamma0 + y))
    Swap,          // (y, beta0/(gamma0 + x))
};

std::string to_string(NormalShape s);

struct NormalFormMap {
    PlaneMap map;
    PlaneMap original;
    AffineConjugation conjugation; // map = conj^-1 o original o conj
    Subcase source_case;
    NormalShape shape;
    GaussianRational alpha0, alpha1, beta0, gamma0;

    MoebiusMap h() const; // beta0/(gamma0 + t); SkewMoebius, SplitMoebius, Swap
    MoebiusMap m() const; // alpha0 + alpha1 t; AffineOverX, AffineOverSum, SplitMoebius
};

// Throws UnsupportedCase for subcases with positive entropy (no normal form).
NormalFormMap normal_form(const ParameterTuple& p, const CaseReport& report);
NormalFormMap normal_form(const ParameterTuple& p);

enum class TransformKind { Invariant, Scale, Translate, Moebius };

std::string to_string(TransformKind k);

struct Transform {
    TransformKind kind = TransformKind::Invariant;
    GaussianRational scale = 1;     // Scale, exact
    std::string scale_text;         // Scale, printable (may be an algebraic number)
    std::optional<MoebiusMap> phi;  // Moebius: H o f = phi(H)

    static Transform invariant();
    static Transform translate();
    static Transform scaled(const GaussianRational& c);
    // Identity, t -> c t and t -> t + 1 are folded into the simpler kinds.
    static Transform moebius(const MoebiusMap& phi);
    std::string str() const;
};

class NumericFunction; // high-precision evaluator for non-Gaussian coefficients

struct FibrationSpec {
    std::string label;
    std::string description;
    Transform transform;
    std::optional<RationalFunction> function;
    std::shared_ptr<const NumericFunction> numeric;
    std::string formula;
    bool degenerate = false; // constant function

    bool is_exact() const { return function.has_value(); }
};

std::vector<FibrationSpec> builtin_fibrations(const NormalFormMap& form);

// H o conj^-1: the same fibration for the original map.
FibrationSpec pull_back(const FibrationSpec& spec, const AffineConjugation& conj);

enum class Verdict { Pass, Fail, Degenerate };

std::string to_string(Verdict v);

inline constexpr std::size_t kNumericSamples = 25;
inline constexpr double kNumericTolerance = 1e-30;

struct FibrationVerdict {
    Verdict verdict = Verdict::Fail;
    bool numeric = false;
    std::size_t samples = 0;
    double max_error = 0; // numeric path
    std::string detail;

    bool passed() const { return verdict == Verdict::Pass; }
};

FibrationVerdict verify_fibration(const PlaneMap& f, const FibrationSpec& spec, std::uint64_t seed = 1);

struct TransversalityVerdict {
    bool transverse = false;
    bool numeric = false;
    std::optional<RationalFunction> determinant;
    std::string detail;
};

TransversalityVerdict transversality(const FibrationSpec& h1, const FibrationSpec& h2, std::uint64_t seed = 1);

// Closed-form Jacobian determinant of the transverse pair for Swap forms:
// -2 p^2 m (m^2 - 1)/((p + x)^2 (p + y)^2), or 16 c^2/((2y + c)^2 (2x + c)^2) when gamma0^2 + 4 beta0 = 0.
// Absent when p, m are not Gaussian.
std::optional<RationalFunction> expected_jacobian(const NormalFormMap& form);

inline constexpr unsigned kDefaultPeriodBound = 24;

// Minimal N <= bound with f^N = id.
std::optional<unsigned> detect_periodicity(const PlaneMap& f, unsigned bound = kDefaultPeriodBound);

} // namespace birat
