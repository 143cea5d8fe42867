#pragma once

#include "birat/report/config.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace birat::report {

inline constexpr const char* kReportVersion = "1";

// Every scalar, polynomial and rational function is carried as text in the exact grammar.

struct BirationalityRecord {
    bool birational = false;
    std::vector<std::string> violated;
    std::string degeneracy;
};

struct ParameterRecord {
    std::string name;
    long value = 0;
    std::string provenance;
};

struct CaseRecord {
    std::string family;
    std::string subcase;
    std::vector<ParameterRecord> parameters;
    bool both_families = false;
    std::optional<std::string> h;
};

struct DegreesRecord {
    std::vector<long> degrees; // d_1..d_N
    bool truncated = false;
};

struct FitRecord {
    std::string char_poly;
    int order = 0;
    std::vector<std::string> coefficients;
    std::string growth;
    std::string dynamical_degree;
    std::string estimate; // d_N / d_(N-1)
    std::string diagnostics;
};

struct CheckRecord {
    std::string name;
    bool passed = false;
    std::string detail;
};

struct CrossCheckRecord {
    bool passed = false;
    std::string closed_form;
    std::string char_poly;
    std::vector<CheckRecord> checks;
};

struct NamedText {
    std::string name;
    std::string value;
};

struct LociRecord {
    std::vector<NamedText> exceptional;
    std::vector<NamedText> indeterminacy;
    std::vector<NamedText> exceptional_inverse;
    std::vector<NamedText> indeterminacy_inverse;
    std::vector<NamedText> collapses; // curve name -> point name
};

struct CollisionRecord {
    std::string line;
    std::string target;
    std::size_t step = 0;
    std::string hit;
};

struct AsRecord {
    bool algebraically_stable = true;
    std::size_t horizon = 0;
    std::vector<CollisionRecord> collisions;
};

struct NormalFormRecord {
    std::string shape;
    std::string map;
    std::vector<NamedText> conjugation; // a, b, c, d
    std::vector<NamedText> parameters;  // alpha0, alpha1, beta0, gamma0 as used by the shape
};

struct FibrationRecord {
    std::string label;
    std::string description;
    std::string transform;
    std::string formula;
    std::string verdict; // pass | fail | degenerate
    bool expected_degenerate = false;
    bool numeric = false;
    std::size_t samples = 0;
    std::string detail;
};

struct TransversalityRecord {
    std::string first;
    std::string second;
    bool transverse = false;
    bool numeric = false;
    std::string detail;
    std::optional<bool> matches_closed_form;
};

struct FibrationsRecord {
    std::vector<FibrationRecord> fibrations;
    std::vector<TransversalityRecord> transversality;
};

struct PeriodRecord {
    unsigned bound = 0;
    std::optional<unsigned> period;
};

struct MapRecord {
    std::string name;
    std::vector<std::string> alpha, beta, gamma;
    std::size_t n_iterates = 0;
    std::optional<BirationalityRecord> birationality;
    std::optional<CaseRecord> classification;
    std::optional<DegreesRecord> degrees;
    std::optional<FitRecord> fit;
    std::optional<CrossCheckRecord> crosscheck;
    std::optional<LociRecord> loci;
    std::optional<AsRecord> as_check;
    std::optional<NormalFormRecord> normal_form;
    std::optional<FibrationsRecord> fibrations;
    std::optional<PeriodRecord> period;
    std::vector<NamedText> errors; // command -> message
    std::vector<std::string> failures;

    bool ok() const { return errors.empty() && failures.empty(); }
};

struct JobReport {
    std::string version = kReportVersion;
    std::uint64_t seed = 1;
    std::vector<std::string> commands;
    std::size_t n_iterates = 0;
    std::size_t horizon = 0;
    unsigned period_bound = 0;
    std::vector<MapRecord> maps; // sorted by name
    bool passed = true;

    friend bool operator==(const JobReport&, const JobReport&);
};

std::string render_json(const JobReport& r);
std::string render_table(const JobReport& r);
std::string render_report(const JobReport& r, Format f);

// Throws ConfigError on documents that do not follow the schema.
JobReport parse_report(const std::string& json_text);

} // namespace birat::report
