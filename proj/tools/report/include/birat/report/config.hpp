#pragma once

#include "birat/rational_maps.hpp"

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace birat::report {

// Raised for unreadable or malformed job files; maps to exit code 2.
class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

enum class Command { Classify, Degrees, Fit, CrossCheck, Loci, AsCheck, NormalForm, VerifyFibrations, Period };

std::string to_string(Command c);
std::optional<Command> parse_command(const std::string& name);
const std::vector<Command>& all_commands();

struct NamedMap {
    std::string name;
    ParameterTuple params;
    std::optional<std::size_t> n_iterates; // overrides JobConfig::n_iterates
};

enum class Format { Json, Table };

struct JobConfig {
    std::vector<NamedMap> maps;
    std::vector<Command> commands;
    std::size_t n_iterates = 10;
    std::size_t horizon = 64;
    unsigned period_bound = 24;
    std::uint64_t seed = 1;
    unsigned workers = 1;
    Format format = Format::Json;
    std::optional<std::string> output_path;
};

// Parses a job document. Errors name the line (syntax) or the field path (content).
JobConfig parse_config(const std::string& text);
JobConfig load_config(const std::string& path);

// Three comma- or whitespace-separated scalars, e.g. "0, 1+2i, -1/3".
Triple parse_triple(const std::string& text);

} // namespace birat::report
