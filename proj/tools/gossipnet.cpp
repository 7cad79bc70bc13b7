// gossipnet: gossip spreading on weighted networks from the command line.
//
//   gossipnet analyze  --input net.edges [--model both] [--out DIR] [--format both]
//   gossipnet generate --model WS --N 200 --k 4 --p 0.1 --seed 7 --out DIR
//   gossipnet sweep    --preset BA200 --realizations 50 --out DIR
//   gossipnet project  --input events.txt --scheme newman [--out FILE]
//
// Exit codes: 0 success, 1 usage error, 2 input error, 3 internal error.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "gossip/generators.hpp"
#include "gossip/ingest.hpp"
#include "gossip/metrics.hpp"
#include "gossip/report.hpp"

namespace fs = std::filesystem;
using namespace gossip;

namespace {

enum ExitCode { kOk = 0, kUsage = 1, kInput = 2, kInternal = 3 };

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct OutputFormat {
    bool csv = true;
    bool json = true;
};

OutputFormat parse_format(const std::string& name) {
    if (name == "csv") return {true, false};
    if (name == "json") return {false, true};
    if (name == "both") return {true, true};
    throw UsageError("--format must be csv, json or both");
}

void write_file(const fs::path& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw InputError("cannot write '" + path.string() + "'");
    out << content;
    if (!out) throw InputError("write failed for '" + path.string() + "'");
}

void ensure_dir(const fs::path& dir) {
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec) throw InputError("cannot create directory '" + dir.string() + "': " + ec.message());
}

struct AnalyzeArgs {
    std::string input;
    std::string model = "both";
    std::string out = ".";
    std::string format = "both";
    std::string separator = "auto";
    std::size_t min_samples = 1;
    unsigned workers = 1;
    bool naive = false;
};

int run_analyze(const AnalyzeArgs& a) {
    const auto model = parse_spread_model(a.model);
    const auto format = parse_format(a.format);
    const auto g = read_edge_list(a.input, parse_separator(a.separator));
    std::cerr << "read " << g.node_count() << " nodes, " << g.edge_count() << " edges from " << a.input << '\n';
    if (g.edge_count() == 0) throw InputError("no edges in '" + a.input + "'");

    SummaryOptions opts;
    opts.model = model;
    opts.min_samples = a.min_samples;
    opts.spread.workers = a.workers;
    opts.spread.fast = !a.naive;
    const auto report = summarize(g, opts);
    check_invariants(report);

    if (a.out == "-") {
        std::cout << summary_csv(report.summary);
        return kOk;
    }
    const fs::path dir(a.out);
    ensure_dir(dir);
    if (format.csv) {
        write_file(dir / "summary.csv", summary_csv(report.summary));
        write_file(dir / "curves.csv", curves_csv(report.curves));
        write_file(dir / "victims.csv", victims_csv(g, report.table));
    }
    if (format.json) {
        const AnalysisMeta meta{a.input, model, a.min_samples};
        write_file(dir / "summary.json", analysis_json(report, meta).dump(2) + "\n");
    }
    write_file(dir / "nodes.csv", node_index_csv(g));
    std::cerr << "wrote results to " << dir.string() << '\n';
    return kOk;
}

// Generator flags are optional so that only explicitly given ones override
// the preset and config file.
struct GeneratorArgs {
    std::optional<std::string> preset;
    std::optional<std::string> config;
    std::optional<std::string> model;
    std::optional<std::size_t> N, m0, m, k, realizations;
    std::optional<double> p, weight_mean, weight_stddev;
    std::optional<std::string> weight_mode;
    std::optional<std::uint64_t> seed;

    void attach(CLI::App& cmd) {
        cmd.add_option("--preset", preset, "Parameter set: ER200, BA200, WS200, ER1000, BA1000, WS1000");
        cmd.add_option("--config", config, "key = value generator config file");
        cmd.add_option("--model", model, "Generator: ER, BA or WS");
        cmd.add_option("--N", N, "Number of nodes");
        cmd.add_option("--p", p, "ER connection / WS rewiring probability");
        cmd.add_option("--m0", m0, "BA seed clique size");
        cmd.add_option("--m", m, "BA edges per new node");
        cmd.add_option("--k", k, "WS ring degree (even)");
        cmd.add_option("--weight_mean", weight_mean, "Mean of the Gaussian node weights");
        cmd.add_option("--weight_stddev", weight_stddev, "Standard deviation of the Gaussian node weights");
        cmd.add_option("--weight_mode", weight_mode, "resample or clamp non-positive node weights");
        cmd.add_option("--seed", seed, "Base seed");
        cmd.add_option("--realizations", realizations, "Number of realizations");
    }

    GeneratorConfig resolve() const {
        GeneratorConfig cfg = preset ? preset_config(*preset) : GeneratorConfig{};
        if (config) cfg = parse_generator_config(read_text_file(*config), cfg);
        if (model) cfg.model = parse_generator_model(*model);
        if (N) cfg.N = *N;
        if (p) cfg.p = *p;
        if (m0) cfg.m0 = *m0;
        if (m) cfg.m = *m;
        if (k) cfg.k = *k;
        if (weight_mean) cfg.weight_mean = *weight_mean;
        if (weight_stddev) cfg.weight_stddev = *weight_stddev;
        if (weight_mode) cfg.weight_mode = parse_weight_mode(*weight_mode);
        if (seed) cfg.seed = *seed;
        if (realizations) cfg.realizations = *realizations;
        cfg.validate();
        return cfg;
    }
};

std::string realization_name(std::size_t i, std::size_t total) {
    const int width = static_cast<int>(std::to_string(total > 0 ? total - 1 : 0).size());
    char buf[48];
    std::snprintf(buf, sizeof buf, "realization_%0*zu.edges", std::max(width, 3), i);
    return buf;
}

int run_generate(const GeneratorArgs& args, const std::string& out) {
    const auto cfg = args.resolve();
    const fs::path dir(out);
    ensure_dir(dir);
    nlohmann::ordered_json manifest;
    manifest["schema_version"] = kSchemaVersion;
    manifest["config"] = generator_config_json(cfg);
    auto files = nlohmann::ordered_json::array();
    for (std::size_t i = 0; i < cfg.realizations; ++i) {
        const auto g = generate_network(cfg, i);
        const auto name = realization_name(i, cfg.realizations);
        write_file(dir / name, format_edge_list(g));
        files.push_back({{"index", i},
                         {"seed", realization_seed(cfg.seed, i)},
                         {"file", name},
                         {"N", g.node_count()},
                         {"M", g.edge_count()}});
        std::cerr << "generated " << name << " (" << g.edge_count() << " edges)\n";
    }
    manifest["realizations"] = files;
    write_file(dir / "manifest.json", manifest.dump(2) + "\n");
    write_file(dir / "config.txt", format_generator_config(cfg));
    return kOk;
}

int run_sweep(const GeneratorArgs& args, const std::string& out, const std::string& format_name,
              std::size_t min_samples, unsigned workers) {
    const auto cfg = args.resolve();
    const auto format = parse_format(format_name);
    std::cerr << "running " << cfg.realizations << " " << to_string(cfg.model) << " realizations\n";
    const auto ensemble = run_ensemble(cfg, {workers, min_samples});
    const fs::path dir(out);
    ensure_dir(dir);
    if (format.csv) {
        write_file(dir / "ensemble.csv", ensemble_csv(ensemble));
        write_file(dir / "ensemble_curves.csv", ensemble_curves_csv(ensemble));
    }
    if (format.json) write_file(dir / "ensemble.json", ensemble_json(ensemble).dump(2) + "\n");
    write_file(dir / "config.txt", format_generator_config(cfg));
    return kOk;
}

int run_project(const std::string& input, const std::string& scheme, const std::string& out,
                const std::string& separator) {
    if (scheme != "count" && scheme != "newman") throw UsageError("--scheme must be count or newman");
    const auto events = read_bipartite(input, parse_separator(separator));
    if (events.group_count() == 0) std::cerr << "warning: no events in '" << input << "'\n";
    const auto g = scheme == "count" ? project_count(events) : project_newman(events);
    const auto text = format_edge_list(g);
    if (out.empty() || out == "-") {
        std::cout << text;
    } else {
        write_file(out, text);
        std::cerr << "wrote " << g.edge_count() << " edges to " << out << '\n';
    }
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Gossip spreading on weighted networks"};
    app.require_subcommand(1);

    AnalyzeArgs analyze;
    auto* analyze_cmd = app.add_subcommand("analyze", "Spread factors, clustering and per-degree curves of a network");
    analyze_cmd->add_option("--input", analyze.input, "Weighted edge list")->required();
    analyze_cmd->add_option("--model", analyze.model, "unweighted, weighted or both");
    analyze_cmd->add_option("--out", analyze.out, "Output directory, or - for summary CSV on stdout");
    analyze_cmd->add_option("--format", analyze.format, "csv, json or both");
    analyze_cmd->add_option("--min-samples", analyze.min_samples, "Minimum vertices per degree when locating k0");
    analyze_cmd->add_option("--separator", analyze.separator, "auto, whitespace or comma");
    analyze_cmd->add_option("--workers", analyze.workers, "Worker threads");
    analyze_cmd->add_flag("--naive", analyze.naive, "Run one cascade per originator instead of the component shortcut");

    GeneratorArgs gen;
    std::string gen_out = "generated";
    auto* generate_cmd = app.add_subcommand("generate", "Write generated weighted networks as edge lists");
    gen.attach(*generate_cmd);
    generate_cmd->add_option("--out", gen_out, "Output directory");

    GeneratorArgs sweep;
    std::string sweep_out = "sweep";
    std::string sweep_format = "both";
    std::size_t sweep_min_samples = 1;
    unsigned sweep_workers = 1;
    auto* sweep_cmd = app.add_subcommand("sweep", "Summarise an ensemble of generated networks");
    sweep.attach(*sweep_cmd);
    sweep_cmd->add_option("--out", sweep_out, "Output directory");
    sweep_cmd->add_option("--format", sweep_format, "csv, json or both");
    sweep_cmd->add_option("--min-samples", sweep_min_samples, "Minimum vertices per degree when locating k0");
    sweep_cmd->add_option("--workers", sweep_workers, "Worker threads");

    std::string project_input, project_scheme = "count", project_out, project_sep = "auto";
    auto* project_cmd = app.add_subcommand("project", "Project bipartite event data onto a weighted co-occurrence network");
    project_cmd->add_option("--input", project_input, "Lines of '<group> <member>'")->required();
    project_cmd->add_option("--scheme", project_scheme, "count or newman");
    project_cmd->add_option("--out", project_out, "Output edge list (default stdout)");
    project_cmd->add_option("--separator", project_sep, "auto, whitespace or comma");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    }

    try {
        if (*analyze_cmd) return run_analyze(analyze);
        if (*generate_cmd) return run_generate(gen, gen_out);
        if (*sweep_cmd) return run_sweep(sweep, sweep_out, sweep_format, sweep_min_samples, sweep_workers);
        if (*project_cmd) return run_project(project_input, project_scheme, project_out, project_sep);
    } catch (const InputError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kInput;
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const InvariantError& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return kInternal;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return kInternal;
    }
    return kUsage;
}
