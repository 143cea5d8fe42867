#pragma once

#include "birat/rational_maps.hpp"

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

namespace birat {

inline constexpr std::size_t kDefaultTermBudget = 200000;

// d_1..d_N; d_0 = 1 is implicit.
struct DegreeSequence {
    std::vector<long> degrees;
    std::size_t requested = 0;
    bool truncated = false; // term budget hit before `requested` terms

    std::size_t size() const { return degrees.size(); }
    long operator[](std::size_t n) const { return degrees.at(n - 1); } // d_n, n >= 1
};

// Iterates F^n = F o F^(n-1) with reduction at every step.
DegreeSequence degree_sequence(const ProjectiveMap& F, std::size_t n, std::size_t term_budget = kDefaultTermBudget);
DegreeSequence degree_sequence(const ParameterTuple& p, std::size_t n, std::size_t term_budget = kDefaultTermBudget);

// d_(n+L) = coefficients[L-1] d_(n+L-1) + ... + coefficients[0] d_n
struct RecurrenceFit {
    std::vector<GaussianRational> coefficients;
    MultiPoly char_poly; // monic, in z
    int order = 0;
};

// Minimal recurrence over Q (Berlekamp-Massey). Throws InconclusiveFit on fewer
// than 4 terms or when twice the order exceeds the sample length.
RecurrenceFit fit_recurrence(const std::vector<long>& seq);
inline RecurrenceFit fit_recurrence(const DegreeSequence& s) { return fit_recurrence(s.degrees); }

// 1-based index of the last term in the first window of seq (seq[0] = d_1) that
// the recurrence with this characteristic polynomial fails to annihilate.
std::optional<std::size_t> first_violation(const MultiPoly& char_poly, const std::vector<long>& seq);

// d_N / d_(N-1)
mpq_class dynamical_degree_estimate(const DegreeSequence& s);

enum class Growth { Bounded, Linear, Quadratic, Exponential, Unclassified };

std::string to_string(Growth g);

struct GrowthClass {
    Growth tag = Growth::Unclassified;
    double dynamical_degree = 0;
    std::string dynamical_degree_exact; // "1", "2", "largest real root of z^2-z-1"
    std::string diagnostics;
};

GrowthClass growth_class(const RecurrenceFit& fit, const DegreeSequence& s);

} // namespace birat
