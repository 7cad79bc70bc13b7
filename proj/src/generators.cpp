#include "gossip/generators.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <set>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace gossip {

GeneratorModel parse_generator_model(std::string_view name) {
    if (name == "ER" || name == "er") return GeneratorModel::ER;
    if (name == "BA" || name == "ba") return GeneratorModel::BA;
    if (name == "WS" || name == "ws") return GeneratorModel::WS;
    throw std::invalid_argument("unknown generator model '" + std::string(name) + "' (expected ER, BA or WS)");
}

std::string_view to_string(GeneratorModel model) {
    switch (model) {
        case GeneratorModel::ER: return "ER";
        case GeneratorModel::BA: return "BA";
        case GeneratorModel::WS: return "WS";
    }
    return "ER";
}

WeightMode parse_weight_mode(std::string_view name) {
    if (name == "resample") return WeightMode::Resample;
    if (name == "clamp") return WeightMode::Clamp;
    throw std::invalid_argument("unknown weight_mode '" + std::string(name) + "' (expected resample or clamp)");
}

std::string_view to_string(WeightMode mode) {
    return mode == WeightMode::Clamp ? "clamp" : "resample";
}

void GeneratorConfig::validate() const {
    auto bad = [](const std::string& what) { throw std::invalid_argument(what); };
    if (N < 1) bad("N must be at least 1");
    if (realizations < 1) bad("realizations must be at least 1");
    if (!(weight_mean > 0.0) || !std::isfinite(weight_mean)) bad("weight_mean must be positive");
    if (!(weight_stddev >= 0.0) || !std::isfinite(weight_stddev)) bad("weight_stddev must be non-negative");
    switch (model) {
        case GeneratorModel::ER:
            if (!(p >= 0.0 && p <= 1.0)) bad("p must lie in [0, 1]");
            break;
        case GeneratorModel::BA:
            if (m < 1) bad("m must be at least 1");
            if (m > m0) bad("m must not exceed m0");
            if (m0 >= N) bad("m0 must be smaller than N");
            break;
        case GeneratorModel::WS:
            if (!(p >= 0.0 && p <= 1.0)) bad("p must lie in [0, 1]");
            if (k % 2 != 0) bad("k must be even");
            if (k >= N) bad("k must be smaller than N");
            break;
    }
}

namespace {

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) return {};
    return s.substr(first, s.find_last_not_of(" \t\r") - first + 1);
}

template <typename T>
T parse_number(std::string_view key, std::string_view text) {
    T value{};
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc() || ptr != text.data() + text.size() || text.empty())
        throw std::invalid_argument("bad value '" + std::string(text) + "' for " + std::string(key));
    return value;
}

std::string format_real(double x) {
    char buf[64];
    const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, x);
    return std::string(buf, ptr);
}

}  // namespace

GeneratorConfig parse_generator_config(std::string_view text, GeneratorConfig cfg) {
    std::size_t number = 0;
    std::istringstream in{std::string(text)};
    std::string raw;
    while (std::getline(in, raw)) {
        ++number;
        auto line = trim(raw);
        if (line.empty() || line.front() == '#') continue;
        const auto eq = line.find('=');
        if (eq == std::string_view::npos)
            throw std::invalid_argument("config line " + std::to_string(number) + ": expected key = value");
        const auto key = trim(line.substr(0, eq));
        const auto value = trim(line.substr(eq + 1));
        if (key == "model") cfg.model = parse_generator_model(value);
        else if (key == "N") cfg.N = parse_number<std::size_t>(key, value);
        else if (key == "p") cfg.p = parse_number<double>(key, value);
        else if (key == "m0") cfg.m0 = parse_number<std::size_t>(key, value);
        else if (key == "m") cfg.m = parse_number<std::size_t>(key, value);
        else if (key == "k") cfg.k = parse_number<std::size_t>(key, value);
        else if (key == "weight_mean") cfg.weight_mean = parse_number<double>(key, value);
        else if (key == "weight_stddev") cfg.weight_stddev = parse_number<double>(key, value);
        else if (key == "weight_mode") cfg.weight_mode = parse_weight_mode(value);
        else if (key == "seed") cfg.seed = parse_number<std::uint64_t>(key, value);
        else if (key == "realizations") cfg.realizations = parse_number<std::size_t>(key, value);
        else
            throw std::invalid_argument("config line " + std::to_string(number) + ": unknown key '" +
                                        std::string(key) + "'");
    }
    return cfg;
}

std::string format_generator_config(const GeneratorConfig& cfg) {
    std::ostringstream out;
    out << "model = " << to_string(cfg.model) << '\n'
        << "N = " << cfg.N << '\n'
        << "p = " << format_real(cfg.p) << '\n'
        << "m0 = " << cfg.m0 << '\n'
        << "m = " << cfg.m << '\n'
        << "k = " << cfg.k << '\n'
        << "weight_mean = " << format_real(cfg.weight_mean) << '\n'
        << "weight_stddev = " << format_real(cfg.weight_stddev) << '\n'
        << "weight_mode = " << to_string(cfg.weight_mode) << '\n'
        << "seed = " << cfg.seed << '\n'
        << "realizations = " << cfg.realizations << '\n';
    return std::move(out).str();
}

GeneratorConfig preset_config(std::string_view name) {
    GeneratorConfig cfg;
    if (name == "ER200") {
        cfg.model = GeneratorModel::ER, cfg.N = 200, cfg.p = 0.04;
    } else if (name == "BA200") {
        cfg.model = GeneratorModel::BA, cfg.N = 200, cfg.m0 = 10, cfg.m = 4;
    } else if (name == "WS200") {
        cfg.model = GeneratorModel::WS, cfg.N = 200, cfg.k = 4, cfg.p = 0.1;
    } else if (name == "ER1000") {
        cfg.model = GeneratorModel::ER, cfg.N = 1000, cfg.p = 0.021;
    } else if (name == "BA1000") {
        cfg.model = GeneratorModel::BA, cfg.N = 1000, cfg.m0 = 20, cfg.m = 10;
    } else if (name == "WS1000") {
        cfg.model = GeneratorModel::WS, cfg.N = 1000, cfg.k = 20, cfg.p = 0.1;
    } else {
        throw std::invalid_argument("unknown preset '" + std::string(name) + "'");
    }
    return cfg;
}

std::uint64_t realization_seed(std::uint64_t seed, std::size_t realization_index) {
    std::uint64_t z = static_cast<std::uint64_t>(realization_index) + 0x9E3779B97F4A7C15ULL;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return seed ^ (z ^ (z >> 31));
}

namespace {

Topology erdos_renyi(const GeneratorConfig& cfg, Rng& rng) {
    Topology t{cfg.N, {}};
    std::bernoulli_distribution coin(cfg.p);
    for (NodeId i = 0; i < cfg.N; ++i)
        for (NodeId j = i + 1; j < cfg.N; ++j)
            if (coin(rng)) t.edges.emplace_back(i, j);
    return t;
}

Topology barabasi_albert(const GeneratorConfig& cfg, Rng& rng) {
    Topology t{cfg.N, {}};
    // A node appears in `ends` once per incident edge, so a uniform pick from
    // it is a degree-proportional pick.
    std::vector<NodeId> ends;
    ends.reserve(2 * (cfg.m0 * cfg.m0 + cfg.N * cfg.m));
    for (NodeId i = 0; i < cfg.m0; ++i)
        for (NodeId j = i + 1; j < cfg.m0; ++j) {
            t.edges.emplace_back(i, j);
            ends.push_back(i);
            ends.push_back(j);
        }

    std::vector<NodeId> targets;
    for (NodeId node = cfg.m0; node < cfg.N; ++node) {
        targets.clear();
        while (targets.size() < cfg.m) {
            NodeId pick;
            if (ends.empty()) {
                // Only when m0 == 1: the seed node has no edges yet.
                pick = std::uniform_int_distribution<NodeId>(0, node - 1)(rng);
            } else {
                pick = ends[std::uniform_int_distribution<std::size_t>(0, ends.size() - 1)(rng)];
            }
            if (std::find(targets.begin(), targets.end(), pick) == targets.end()) targets.push_back(pick);
        }
        for (auto target : targets) {
            t.edges.emplace_back(target, node);
            ends.push_back(target);
            ends.push_back(node);
        }
    }
    std::sort(t.edges.begin(), t.edges.end());
    return t;
}

Topology watts_strogatz(const GeneratorConfig& cfg, Rng& rng) {
    const auto n = cfg.N;
    std::vector<std::set<NodeId>> adj(n);
    for (NodeId i = 0; i < n; ++i)
        for (std::size_t j = 1; j <= cfg.k / 2; ++j) {
            const NodeId other = (i + j) % n;
            adj[i].insert(other);
            adj[other].insert(i);
        }

    std::bernoulli_distribution rewire(cfg.p);
    std::uniform_int_distribution<NodeId> any(0, n - 1);
    for (std::size_t j = 1; j <= cfg.k / 2; ++j) {
        for (NodeId u = 0; u < n; ++u) {
            const NodeId v = (u + j) % n;
            if (!rewire(rng)) continue;
            if (adj[u].size() >= n - 1) continue;  // nowhere left to go
            NodeId w = any(rng);
            while (w == u || adj[u].contains(w)) w = any(rng);
            adj[u].erase(v);
            adj[v].erase(u);
            adj[u].insert(w);
            adj[w].insert(u);
        }
    }

    Topology t{n, {}};
    for (NodeId i = 0; i < n; ++i)
        for (auto j : adj[i])
            if (i < j) t.edges.emplace_back(i, j);
    return t;
}

}  // namespace

Topology generate_structure(const GeneratorConfig& cfg, Rng& rng) {
    cfg.validate();
    switch (cfg.model) {
        case GeneratorModel::ER: return erdos_renyi(cfg, rng);
        case GeneratorModel::BA: return barabasi_albert(cfg, rng);
        case GeneratorModel::WS: return watts_strogatz(cfg, rng);
    }
    return {};
}

Topology generate_structure(const GeneratorConfig& cfg, std::size_t realization_index) {
    Rng rng(realization_seed(cfg.seed, realization_index));
    return generate_structure(cfg, rng);
}

WeightedGraph weight_by_node_average(const Topology& topology, std::span<const double> node_weights) {
    if (node_weights.size() != topology.node_count)
        throw std::invalid_argument("one node weight per node is required");
    std::vector<IndexedEdge> edges;
    edges.reserve(topology.edges.size());
    for (const auto& [i, j] : topology.edges)
        edges.push_back({i, j, 0.5 * (node_weights[i] + node_weights[j])});
    return WeightedGraph::from_indexed(topology.node_count, edges);
}

WeightedGraph assign_weights(const Topology& topology, const GeneratorConfig& cfg, Rng& rng) {
    std::normal_distribution<double> gauss(cfg.weight_mean, cfg.weight_stddev);
    std::vector<double> node_weights(topology.node_count);
    for (auto& w : node_weights) {
        w = gauss(rng);
        if (cfg.weight_mode == WeightMode::Clamp) {
            w = std::max(w, kMinNodeWeight);
        } else {
            while (!(w > kMinNodeWeight)) w = gauss(rng);
        }
    }
    return weight_by_node_average(topology, node_weights);
}

WeightedGraph generate_network(const GeneratorConfig& cfg, std::size_t realization_index) {
    Rng rng(realization_seed(cfg.seed, realization_index));
    const auto topology = generate_structure(cfg, rng);
    return assign_weights(topology, cfg, rng);
}

const FieldStats& EnsembleSummary::field(std::string_view name) const {
    auto it = fields.find(name);
    if (it == fields.end()) throw std::out_of_range("no ensemble field '" + std::string(name) + "'");
    return it->second;
}

namespace {

void accumulate_curve(EnsembleCurve& acc, const DegreeCurve& curve) {
    for (const auto& [k, p] : curve.points) {
        auto& point = acc[k];
        point.mean += p.value;  // summed here, divided in finish_curve
        ++point.realizations;
        point.vertices += p.count;
    }
}

void finish_curve(EnsembleCurve& acc) {
    for (auto& [k, p] : acc) p.mean /= static_cast<double>(p.realizations);
}

DegreeCurve as_degree_curve(const EnsembleCurve& curve) {
    DegreeCurve out;
    for (const auto& [k, p] : curve) out.points[k] = {p.mean, p.vertices};
    return out;
}

}  // namespace

EnsembleSummary run_ensemble(const GeneratorConfig& cfg, const EnsembleOptions& opts) {
    cfg.validate();
    EnsembleSummary out;
    out.config = cfg;
    out.seeds.resize(cfg.realizations);
    out.realizations.resize(cfg.realizations);
    std::vector<DegreeCurves> curves(cfg.realizations);

    auto work = [&](std::size_t first, std::size_t stride) {
        for (std::size_t i = first; i < cfg.realizations; i += stride) {
            out.seeds[i] = realization_seed(cfg.seed, i);
            const auto g = generate_network(cfg, i);
            SummaryOptions summary_opts;
            summary_opts.min_samples = opts.min_samples;
            auto report = summarize(g, summary_opts);
            out.realizations[i] = report.summary;
            curves[i] = std::move(report.curves);
        }
    };
    const std::size_t workers = std::clamp<std::size_t>(opts.workers, 1, cfg.realizations);
    if (workers == 1) {
        work(0, 1);
    } else {
        std::vector<std::jthread> pool;
        for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(work, w, workers);
    }

    for (const auto& column : summary_columns()) {
        std::vector<double> values;
        for (const auto& s : out.realizations)
            if (auto v = column.get(s)) values.push_back(*v);
        FieldStats stats;
        stats.samples = values.size();
        if (!values.empty()) {
            double sum = 0.0;
            for (double v : values) sum += v;
            const double mean = sum / static_cast<double>(values.size());
            double sq = 0.0;
            for (double v : values) sq += (v - mean) * (v - mean);
            stats.mean = mean;
            stats.stddev = values.size() > 1 ? std::sqrt(sq / static_cast<double>(values.size() - 1)) : 0.0;
        }
        out.fields.emplace(std::string(column.name), stats);
    }

    for (const auto& c : curves) {
        accumulate_curve(out.sigma_k, c.sigma);
        accumulate_curve(out.beta_k, c.beta);
        accumulate_curve(out.cc_k, c.cc);
    }
    finish_curve(out.sigma_k);
    finish_curve(out.beta_k);
    finish_curve(out.cc_k);
    out.k0_of_mean_curve = find_k0(as_degree_curve(out.sigma_k), opts.min_samples);
    out.k0_w_of_mean_curve = find_k0(as_degree_curve(out.beta_k), opts.min_samples);
    return out;
}

}  // namespace gossip
