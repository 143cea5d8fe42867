#include "birat/report/report.hpp"

#include "json.hpp"

#include <algorithm>
#include <sstream>

namespace nlohmann {

template <class T>
struct adl_serializer<std::optional<T>> {
    static void to_json(json& j, const std::optional<T>& v) {
        if (v) j = *v;
        else j = nullptr;
    }
    static void from_json(const json& j, std::optional<T>& v) {
        if (j.is_null()) v.reset();
        else v = j.get<T>();
    }
};

} // namespace nlohmann

namespace birat::report {

using nlohmann::json;

NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(BirationalityRecord, birational, violated, degeneracy)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(ParameterRecord, name, value, provenance)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(CaseRecord, family, subcase, parameters, both_families, h)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(DegreesRecord, degrees, truncated)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(FitRecord, char_poly, order, coefficients, growth, dynamical_degree, estimate,
                                   diagnostics)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(CheckRecord, name, passed, detail)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(CrossCheckRecord, passed, closed_form, char_poly, checks)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(NamedText, name, value)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(LociRecord, exceptional, indeterminacy, exceptional_inverse,
                                   indeterminacy_inverse, collapses)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(CollisionRecord, line, target, step, hit)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(AsRecord, algebraically_stable, horizon, collisions)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(NormalFormRecord, shape, map, conjugation, parameters)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(FibrationRecord, label, description, transform, formula, verdict,
                                   expected_degenerate, numeric, samples, detail)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(TransversalityRecord, first, second, transverse, numeric, detail,
                                   matches_closed_form)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(FibrationsRecord, fibrations, transversality)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(PeriodRecord, bound, period)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(MapRecord, name, alpha, beta, gamma, n_iterates, birationality, classification, degrees, fit,
                                   crosscheck, loci, as_check, normal_form, fibrations, period, errors, failures)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(JobReport, version, seed, commands, n_iterates, horizon, period_bound, maps,
                                   passed)

bool operator==(const JobReport& a, const JobReport& b) { return json(a) == json(b); }

std::string render_json(const JobReport& r) { return json(r).dump(2) + "\n"; }

JobReport parse_report(const std::string& json_text) {
    try {
        return json::parse(json_text).get<JobReport>();
    } catch (const json::exception& e) {
        throw ConfigError(std::string("report: ") + e.what());
    }
}

namespace {

std::string join(const std::vector<long>& v) {
    std::string s;
    for (long d : v) s += (s.empty() ? "" : " ") + std::to_string(d);
    return s;
}

std::string verdicts(const MapRecord& m) {
    std::vector<std::string> parts;
    if (m.crosscheck) parts.push_back(std::string("crosscheck ") + (m.crosscheck->passed ? "pass" : "FAIL"));
    if (m.fibrations) {
        std::size_t pass = 0, degenerate = 0, total = m.fibrations->fibrations.size();
        for (const auto& f : m.fibrations->fibrations) {
            if (f.verdict == "pass") ++pass;
            if (f.verdict == "degenerate" && f.expected_degenerate) ++degenerate;
        }
        std::string s = "fibrations " + std::to_string(pass) + "/" + std::to_string(total) + " pass";
        if (degenerate) s += " (" + std::to_string(degenerate) + " degenerate)";
        parts.push_back(s);
    }
    if (m.period) parts.push_back("period " + (m.period->period ? std::to_string(*m.period->period) : "none"));
    if (m.as_check) parts.push_back(m.as_check->algebraically_stable ? "AS" : "not AS");
    for (const auto& f : m.failures) parts.push_back("FAIL " + f);
    for (const auto& e : m.errors) parts.push_back("ERROR " + e.name + ": " + e.value);
    std::string s;
    for (const auto& p : parts) s += (s.empty() ? "" : "; ") + p;
    return s;
}

} // namespace

std::string render_table(const JobReport& r) {
    std::vector<std::array<std::string, 6>> rows = {{"name", "case", "degrees", "char poly", "growth", "verdicts"}};
    for (const MapRecord& m : r.maps) {
        std::array<std::string, 6> row;
        row[0] = m.name;
        row[1] = m.classification ? m.classification->subcase : "-";
        if (m.degrees) row[2] = join(m.degrees->degrees);
        else row[2] = "-";
        row[3] = m.fit ? m.fit->char_poly : (m.crosscheck ? m.crosscheck->char_poly : "-");
        row[4] = m.fit ? m.fit->growth : "-";
        row[5] = verdicts(m);
        rows.push_back(row);
    }
    std::array<std::size_t, 6> width{};
    for (const auto& row : rows)
        for (std::size_t i = 0; i < 6; ++i) width[i] = std::max(width[i], row[i].size());
    std::ostringstream out;
    for (std::size_t k = 0; k < rows.size(); ++k) {
        std::string line;
        for (std::size_t i = 0; i < 6; ++i) {
            std::string cell = rows[k][i];
            if (i + 1 < 6) cell.resize(width[i], ' ');
            line += (i ? " | " : "") + cell;
        }
        out << line << "\n";
        if (k == 0) {
            std::string rule;
            for (std::size_t i = 0; i < 6; ++i) rule += (i ? "-+-" : "") + std::string(width[i], '-');
            out << rule << "\n";
        }
    }
    out << (r.passed ? "all checks passed" : "FAILED") << " (" << r.maps.size() << " maps)\n";
    return out.str();
}

std::string render_report(const JobReport& r, Format f) {
    return f == Format::Json ? render_json(r) : render_table(r);
}

} // namespace birat::report
