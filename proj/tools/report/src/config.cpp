#include "birat/report/config.hpp"

#include "birat/corpus.hpp"
#include "birat/error.hpp"

#include "json.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

namespace birat::report {

using nlohmann::json;

namespace {

const std::vector<std::pair<Command, std::string>>& command_names() {
    static const std::vector<std::pair<Command, std::string>> names = {
        {Command::Classify, "classify"},     {Command::Degrees, "degrees"},
        {Command::Fit, "fit"},               {Command::CrossCheck, "crosscheck"},
        {Command::Loci, "loci"},             {Command::AsCheck, "as-check"},
        {Command::NormalForm, "normal-form"}, {Command::VerifyFibrations, "verify-fibrations"},
        {Command::Period, "period"},
    };
    return names;
}

[[noreturn]] void fail(const std::string& where, const std::string& what) { throw ConfigError(where + ": " + what); }

GaussianRational scalar_at(const json& v, const std::string& where) {
    if (!v.is_string()) fail(where, "scalars must be strings in the exact grammar (e.g. \"1/2\", \"1+2i\")");
    try {
        return parse_scalar(v.get<std::string>());
    } catch (const std::exception& e) {
        fail(where, e.what());
    }
}

Triple triple_at(const json& v, const std::string& where) {
    if (!v.is_array() || v.size() != 3) fail(where, "expected an array of three scalar strings");
    Triple t;
    for (std::size_t i = 0; i < 3; ++i) t[i] = scalar_at(v[i], where + "[" + std::to_string(i) + "]");
    return t;
}

std::size_t positive_at(const json& doc, const char* key, std::size_t fallback, const std::string& where = "") {
    if (!doc.contains(key)) return fallback;
    const json& v = doc[key];
    if (!v.is_number_integer() || v.get<long long>() < 1) fail(where + key, "expected a positive integer");
    return v.get<std::size_t>();
}

} // namespace

std::string to_string(Command c) {
    for (const auto& [cmd, name] : command_names())
        if (cmd == c) return name;
    return "?";
}

std::optional<Command> parse_command(const std::string& name) {
    for (const auto& [cmd, n] : command_names())
        if (n == name) return cmd;
    return std::nullopt;
}

const std::vector<Command>& all_commands() {
    static const std::vector<Command> all = [] {
        std::vector<Command> v;
        for (const auto& [cmd, name] : command_names()) v.push_back(cmd);
        return v;
    }();
    return all;
}

JobConfig parse_config(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        std::size_t line = 1 + std::count(text.begin(), text.begin() + std::min(e.byte, text.size()), '\n');
        throw ConfigError("line " + std::to_string(line) + ": " + e.what());
    }
    if (!doc.is_object()) fail("document", "expected a JSON object");

    static const std::set<std::string> known = {"maps", "corpus", "commands", "n_iterates", "horizon", "period_bound",
                                                "seed", "workers", "format", "output"};
    for (const auto& [key, value] : doc.items())
        if (!known.count(key)) fail(key, "unknown key");

    JobConfig cfg;
    std::set<std::string> names;
    auto add = [&](NamedMap m, const std::string& where) {
        if (!names.insert(m.name).second) fail(where, "duplicate map name \"" + m.name + "\"");
        cfg.maps.push_back(std::move(m));
    };

    if (doc.contains("maps")) {
        const json& maps = doc["maps"];
        if (!maps.is_array()) fail("maps", "expected an array");
        for (std::size_t i = 0; i < maps.size(); ++i) {
            std::string where = "maps[" + std::to_string(i) + "]";
            const json& m = maps[i];
            if (!m.is_object()) fail(where, "expected an object");
            if (!m.contains("name") || !m["name"].is_string() || m["name"].get<std::string>().empty())
                fail(where + ".name", "missing or empty");
            for (const char* k : {"alpha", "beta", "gamma"})
                if (!m.contains(k)) fail(where + "." + k, "missing");
            Triple a = triple_at(m["alpha"], where + ".alpha");
            Triple b = triple_at(m["beta"], where + ".beta");
            Triple g = triple_at(m["gamma"], where + ".gamma");
            std::optional<std::size_t> n;
            if (m.contains("n_iterates")) n = positive_at(m, "n_iterates", 0, where + ".");
            try {
                add({m["name"].get<std::string>(), ParameterTuple(a, b, g), n}, where);
            } catch (const InvariantViolation& e) {
                fail(where + ".gamma", e.what());
            }
        }
    }

    if (doc.contains("corpus")) {
        const json& c = doc["corpus"];
        std::vector<std::string> wanted;
        if (c.is_string() && c.get<std::string>() == "all") {
            for (const auto& e : reference_corpus()) wanted.push_back(e.name);
        } else if (c.is_array()) {
            for (const auto& v : c) {
                if (!v.is_string()) fail("corpus", "expected entry names");
                wanted.push_back(v.get<std::string>());
            }
        } else {
            fail("corpus", "expected \"all\" or an array of entry names");
        }
        for (const auto& name : wanted) {
            const auto& corpus = reference_corpus();
            auto it = std::find_if(corpus.begin(), corpus.end(), [&](const CorpusEntry& e) { return e.name == name; });
            if (it == corpus.end()) fail("corpus", "unknown entry \"" + name + "\"");
            add({it->name, it->params, it->iterations}, "corpus");
        }
    }

    if (doc.contains("commands")) {
        const json& cmds = doc["commands"];
        if (!cmds.is_array()) fail("commands", "expected an array");
        for (std::size_t i = 0; i < cmds.size(); ++i) {
            std::string where = "commands[" + std::to_string(i) + "]";
            if (!cmds[i].is_string()) fail(where, "expected a command name");
            auto cmd = parse_command(cmds[i].get<std::string>());
            if (!cmd) fail(where, "unknown command \"" + cmds[i].get<std::string>() + "\"");
            if (std::find(cfg.commands.begin(), cfg.commands.end(), *cmd) == cfg.commands.end())
                cfg.commands.push_back(*cmd);
        }
    } else {
        cfg.commands = {Command::Classify, Command::Degrees, Command::Fit, Command::CrossCheck};
    }

    cfg.n_iterates = positive_at(doc, "n_iterates", cfg.n_iterates);
    cfg.horizon = positive_at(doc, "horizon", cfg.horizon);
    cfg.period_bound = unsigned(positive_at(doc, "period_bound", cfg.period_bound));
    cfg.workers = unsigned(positive_at(doc, "workers", cfg.workers));
    if (doc.contains("seed")) {
        if (!doc["seed"].is_number_unsigned()) fail("seed", "expected a non-negative integer");
        cfg.seed = doc["seed"].get<std::uint64_t>();
    }
    if (doc.contains("format")) {
        std::string f = doc["format"].is_string() ? doc["format"].get<std::string>() : "";
        if (f == "json") cfg.format = Format::Json;
        else if (f == "table") cfg.format = Format::Table;
        else fail("format", "expected \"json\" or \"table\"");
    }
    if (doc.contains("output")) {
        if (!doc["output"].is_string()) fail("output", "expected a file path");
        cfg.output_path = doc["output"].get<std::string>();
    }
    return cfg;
}

JobConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError(path + ": cannot open file");
    std::stringstream buf;
    buf << in.rdbuf();
    try {
        return parse_config(buf.str());
    } catch (const ConfigError& e) {
        throw ConfigError(path + ": " + e.what());
    }
}

Triple parse_triple(const std::string& text) {
    std::vector<std::string> parts;
    if (text.find(',') != std::string::npos) {
        std::istringstream in(text);
        for (std::string tok; std::getline(in, tok, ',');) parts.push_back(tok);
    } else {
        std::istringstream in(text);
        for (std::string tok; in >> tok;) parts.push_back(tok);
    }
    if (parts.size() != 3) throw ConfigError("\"" + text + "\": expected three scalars");
    Triple t;
    for (std::size_t i = 0; i < 3; ++i) {
        try {
            t[i] = parse_scalar(parts[i]);
        } catch (const std::exception& e) {
            throw ConfigError("\"" + text + "\": " + e.what());
        }
    }
    return t;
}

} // namespace birat::report
