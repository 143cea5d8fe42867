#include "birat/report/config.hpp"
#include "birat/report/pipeline.hpp"
#include "birat/report/report.hpp"

#include "birat/corpus.hpp"
#include "birat/error.hpp"

#include "CLI11.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

using namespace birat;
using namespace birat::report;

namespace {

struct Options {
    std::string config;
    std::vector<std::string> corpus;
    std::string alpha, beta, gamma, name = "map";
    std::optional<std::size_t> n, horizon;
    std::optional<unsigned> period_bound, workers;
    std::optional<std::uint64_t> seed;
    std::optional<std::string> format, out;
};

void add_tuning(CLI::App* app, Options& o) {
    app->add_option("--n", o.n, "number of iterates d_1..d_N")->check(CLI::PositiveNumber);
    app->add_option("--horizon", o.horizon, "orbit horizon for the AS diagnostic")->check(CLI::PositiveNumber);
    app->add_option("--period-bound", o.period_bound, "largest period searched")->check(CLI::PositiveNumber);
    app->add_option("--seed", o.seed, "seed for numeric sampling");
    app->add_option("--workers", o.workers, "maps processed concurrently")->check(CLI::PositiveNumber);
    app->add_option("--format", o.format, "json or table")->check(CLI::IsMember({"json", "table"}));
    app->add_option("--out", o.out, "write the report here instead of stdout");
}

void add_selection(CLI::App* app, Options& o) {
    app->add_option("--config", o.config, "job file; its maps are used")->check(CLI::ExistingFile);
    app->add_option("--corpus", o.corpus, "reference corpus entry, or 'all'");
    app->add_option("--alpha", o.alpha, "three scalars, e.g. \"0,0,1\"");
    app->add_option("--beta", o.beta, "three scalars");
    app->add_option("--gamma", o.gamma, "three scalars");
    app->add_option("--name", o.name, "name for the --alpha/--beta/--gamma map");
}

void apply_tuning(JobConfig& cfg, const Options& o) {
    if (o.n) {
        cfg.n_iterates = *o.n;
        for (auto& m : cfg.maps) m.n_iterates.reset();
    }
    if (o.horizon) cfg.horizon = *o.horizon;
    if (o.period_bound) cfg.period_bound = *o.period_bound;
    if (o.seed) cfg.seed = *o.seed;
    if (o.workers) cfg.workers = *o.workers;
    if (o.format) cfg.format = *o.format == "table" ? Format::Table : Format::Json;
    if (o.out) cfg.output_path = *o.out;
}

JobConfig selection_config(const Options& o, Command cmd) {
    JobConfig cfg;
    if (!o.config.empty()) cfg = load_config(o.config);
    cfg.commands = {cmd};
    if (!o.corpus.empty()) {
        std::string doc = "{\"corpus\": ";
        if (o.corpus.size() == 1 && o.corpus[0] == "all") {
            doc += "\"all\"}";
        } else {
            doc += "[";
            for (std::size_t i = 0; i < o.corpus.size(); ++i) doc += (i ? ",\"" : "\"") + o.corpus[i] + "\"";
            doc += "]}";
        }
        for (auto& m : parse_config(doc).maps) cfg.maps.push_back(std::move(m));
    }
    bool any = !o.alpha.empty() || !o.beta.empty() || !o.gamma.empty();
    if (any) {
        if (o.alpha.empty() || o.beta.empty() || o.gamma.empty())
            throw ConfigError("--alpha, --beta and --gamma must be given together");
        try {
            cfg.maps.push_back({o.name, ParameterTuple(parse_triple(o.alpha), parse_triple(o.beta), parse_triple(o.gamma))});
        } catch (const InvariantViolation& e) {
            throw ConfigError(std::string("--gamma: ") + e.what());
        }
    }
    if (cfg.maps.empty()) throw ConfigError("no maps selected (use --config, --corpus or --alpha/--beta/--gamma)");
    return cfg;
}

void emit(const std::string& text, const std::optional<std::string>& path) {
    if (!path) {
        std::cout << text;
        return;
    }
    std::ofstream out(*path);
    if (!out) throw ConfigError(*path + ": cannot write");
    out << text;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"birat: degree growth, case analysis and invariant fibrations of a family of birational plane maps"};
    app.require_subcommand(1);
    Options o;

    std::string config_path;
    CLI::App* run_cmd = app.add_subcommand("run", "run the commands listed in a job file");
    run_cmd->add_option("config", config_path, "job file")->required()->check(CLI::ExistingFile);
    add_tuning(run_cmd, o);

    std::string report_path;
    CLI::App* report_cmd = app.add_subcommand("report", "re-render a saved JSON report");
    report_cmd->add_option("report", report_path, "JSON report")->required()->check(CLI::ExistingFile);
    report_cmd->add_option("--format", o.format, "json or table")->check(CLI::IsMember({"json", "table"}));
    report_cmd->add_option("--out", o.out, "write here instead of stdout");

    std::vector<std::pair<CLI::App*, Command>> single;
    const std::vector<std::pair<Command, std::string>> help = {
        {Command::Classify, "case tag and derived parameters"},
        {Command::Degrees, "degree sequence d_1..d_N"},
        {Command::Fit, "minimal recurrence, growth class and dynamical degree"},
        {Command::CrossCheck, "compare computed degrees with the predicted closed form"},
        {Command::Loci, "exceptional curves and indeterminacy points"},
        {Command::AsCheck, "algebraic stability diagnostic"},
        {Command::NormalForm, "conjugate to the normal form"},
        {Command::VerifyFibrations, "verify the invariant fibrations and first integrals"},
        {Command::Period, "smallest N with f^N = id"},
    };
    for (const auto& [cmd, text] : help) {
        CLI::App* sub = app.add_subcommand(to_string(cmd), text);
        add_selection(sub, o);
        add_tuning(sub, o);
        single.push_back({sub, cmd});
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (report_cmd->parsed()) {
            std::ifstream in(report_path);
            std::stringstream buf;
            buf << in.rdbuf();
            JobReport r = parse_report(buf.str());
            emit(render_report(r, o.format == std::optional<std::string>("table") ? Format::Table : Format::Json), o.out);
            return exit_code(r);
        }
        JobConfig cfg;
        if (run_cmd->parsed()) {
            cfg = load_config(config_path);
        } else {
            for (const auto& [sub, cmd] : single)
                if (sub->parsed()) cfg = selection_config(o, cmd);
        }
        apply_tuning(cfg, o);
        JobReport r = run(cfg);
        emit(render_report(r, cfg.format), cfg.output_path);
        return exit_code(r);
    } catch (const ConfigError& e) {
        std::cerr << "birat: " << e.what() << "\n";
        return kExitUsage;
    }
}
