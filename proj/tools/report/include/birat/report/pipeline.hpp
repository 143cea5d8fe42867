#pragma once

#include "birat/report/config.hpp"
#include "birat/report/report.hpp"

namespace birat::report {

// Runs every requested command on one map; module errors land in record.errors.
MapRecord run_map(const NamedMap& map, const JobConfig& cfg);

// Maps run on up to cfg.workers threads; records come back sorted by name.
JobReport run(const JobConfig& cfg);

enum ExitCode { kExitOk = 0, kExitFailure = 1, kExitUsage = 2 };

inline int exit_code(const JobReport& r) { return r.passed ? kExitOk : kExitFailure; }

} // namespace birat::report
