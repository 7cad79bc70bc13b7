#ifndef GOSSIP_GENERATORS_HPP_
#define GOSSIP_GENERATORS_HPP_

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "gossip/graph.hpp"
#include "gossip/metrics.hpp"

namespace gossip {

enum class GeneratorModel { ER, BA, WS };

GeneratorModel parse_generator_model(std::string_view name);
std::string_view to_string(GeneratorModel model);

/// How non-positive Gaussian node weights are made positive.
enum class WeightMode {
    Resample,  // draw again until above kMinNodeWeight
    Clamp,     // replace by kMinNodeWeight
};

inline constexpr double kMinNodeWeight = 1e-6;

WeightMode parse_weight_mode(std::string_view name);
std::string_view to_string(WeightMode mode);

/// Parameters for one family of generated networks. Only the fields of the
/// selected model matter: ER uses p; BA uses m0 and m; WS uses k and p.
struct GeneratorConfig {
    GeneratorModel model = GeneratorModel::ER;
    std::size_t N = 200;
    double p = 0.04;
    std::size_t m0 = 10;
    std::size_t m = 4;
    std::size_t k = 4;
    double weight_mean = 1.0;
    double weight_stddev = 1.0;
    WeightMode weight_mode = WeightMode::Resample;
    std::uint64_t seed = 1;
    std::size_t realizations = 50;

    /// Throws std::invalid_argument naming the first bad parameter.
    void validate() const;
};

/// Plain "key = value" text with keys named after the fields above. Unknown
/// keys are rejected; '#' starts a comment.
GeneratorConfig parse_generator_config(std::string_view text, GeneratorConfig base = {});
std::string format_generator_config(const GeneratorConfig& cfg);

/// Shipped parameter sets: "ER200", "BA200", "WS200" (N = 200, about 800
/// edges) and "ER1000", "BA1000", "WS1000" (N = 1000, about 10000 edges).
GeneratorConfig preset_config(std::string_view name);

using Rng = std::mt19937_64;

/// Seed for realization i: seed XOR splitmix64(i). The mixer is the
/// finaliser of SplitMix64, so neighbouring indices give unrelated streams.
std::uint64_t realization_seed(std::uint64_t seed, std::size_t realization_index);

/// Unweighted structure of a generated network.
struct Topology {
    std::size_t node_count = 0;
    std::vector<std::pair<NodeId, NodeId>> edges;  // i < j, sorted
};

/// ER: every pair independently with probability p.
/// BA: complete graph on m0 nodes, then each new node links to m distinct
///     existing nodes drawn proportionally to their degree.
/// WS: ring lattice where every node links to its k/2 nearest neighbours on
///     each side; each lattice edge has its far end rewired with probability p
///     to a uniformly chosen node that is neither itself nor already linked.
Topology generate_structure(const GeneratorConfig& cfg, Rng& rng);
Topology generate_structure(const GeneratorConfig& cfg, std::size_t realization_index);

/// Edge weight = mean of the endpoint node weights.
WeightedGraph weight_by_node_average(const Topology& topology, std::span<const double> node_weights);

/// One Gaussian(weight_mean, weight_stddev) draw per node, made positive per
/// cfg.weight_mode, then weight_by_node_average.
WeightedGraph assign_weights(const Topology& topology, const GeneratorConfig& cfg, Rng& rng);

/// Structure and weights from the realization's own stream.
WeightedGraph generate_network(const GeneratorConfig& cfg, std::size_t realization_index);

/// Mean and sample standard deviation of one summary field over the
/// realizations where it is defined.
struct FieldStats {
    std::optional<double> mean;
    std::optional<double> stddev;  // zero for a single sample
    std::size_t samples = 0;
};

struct EnsembleCurvePoint {
    double mean = 0.0;               // mean over realizations having this degree
    std::size_t realizations = 0;    // realizations contributing
    std::size_t vertices = 0;        // total |V_k| across them
};

using EnsembleCurve = std::map<std::size_t, EnsembleCurvePoint>;

struct EnsembleSummary {
    GeneratorConfig config;
    std::vector<std::uint64_t> seeds;  // per realization
    std::vector<NetworkSummary> realizations;
    std::map<std::string, FieldStats, std::less<>> fields;  // keyed by summary column name
    EnsembleCurve sigma_k;
    EnsembleCurve beta_k;
    EnsembleCurve cc_k;
    // k0 located on the mean curves, next to the per-realization k0 mean in
    // `fields`.
    CriticalDegree k0_of_mean_curve;
    CriticalDegree k0_w_of_mean_curve;

    const FieldStats& field(std::string_view name) const;
};

struct EnsembleOptions {
    unsigned workers = 1;
    std::size_t min_samples = 1;
};

EnsembleSummary run_ensemble(const GeneratorConfig& cfg, const EnsembleOptions& opts = {});

}  // namespace gossip

#endif  // GOSSIP_GENERATORS_HPP_
