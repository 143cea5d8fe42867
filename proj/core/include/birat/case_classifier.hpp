#pragma once

#include "birat/degree_dynamics.hpp"
#include "birat/moebius.hpp"

#include <optional>
#include <string>
#include <vector>

namespace birat {

enum class Family { AlphaGamma, BetaGammaGeneric, BetaGammaGamma1, BetaGammaGamma2 };

enum class Subcase {
    CD2_i, CD2_ii, CD2_iii,
    CD3_i, CD3_ii, CD3_iii,
    G1_i_a, G1_i_b, G1_i_c,
    G1_ii_a, G1_ii_b,
    G2_a, G2_b1, G2_b2,
};

std::string to_string(Family f);
std::string to_string(Subcase s); // "CD2-ii", "G1-i-c", ...
std::optional<Subcase> parse_subcase(const std::string& tag);
const std::vector<Subcase>& all_subcases();

struct DerivedParameter {
    std::string name;
    long value;
    std::string provenance;
};

struct CaseReport {
    Family family;
    Subcase subcase;
    std::vector<DerivedParameter> parameters_used;
    bool both_families = false;
    std::optional<MoebiusMap> h; // one-dimensional factor, gamma1/gamma2 families

    std::optional<long> parameter(const std::string& name) const;
};

// Throws NotBirational, or OutOfScope when neither (alpha gamma)12 nor (beta gamma)12 vanishes.
CaseReport classify(const ParameterTuple& p);

enum class ClosedForm { PowerOfTwo, Fibonacci, OnePlusN, EventuallyConstant, Periodic, ConstantTwo };

std::string to_string(ClosedForm c);

using IntMatrix = std::vector<std::vector<long>>;

// Characteristic polynomial det(z I - M) in vars_z().
MultiPoly characteristic_polynomial(const IntMatrix& m);

struct PredictionModel {
    Subcase subcase;
    ClosedForm closed_form;
    std::string closed_form_text;
    std::optional<MultiPoly> char_poly; // monic; absent for 2^n
    std::string char_poly_text;
    std::optional<IntMatrix> picard_matrix;
    std::string picard_note;
    std::vector<long> initial_degrees;
    unsigned period = 0;  // Periodic
    long plateau = 0;     // EventuallyConstant
    bool pattern_known = true; // Periodic: values between multiples of the period are 2
    Growth growth;
    double dynamical_degree = 1;

    // Predicted d_n (n >= 1), when the model pins it down.
    std::optional<long> term(std::size_t n) const;
};

PredictionModel predicted_model(const CaseReport& r);

struct CheckItem {
    std::string name;
    bool passed = false;
    std::string detail;
    std::optional<std::size_t> first_failing_index;
};

struct VerificationReport {
    CaseReport report;
    PredictionModel model;
    DegreeSequence sequence;
    std::optional<RecurrenceFit> fit;
    std::optional<GrowthClass> growth;
    std::vector<CheckItem> checks;
    bool passed = false;
};

VerificationReport cross_check(const ParameterTuple& p, std::size_t n, std::size_t term_budget = kDefaultTermBudget);

} // namespace birat
