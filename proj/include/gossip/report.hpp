#ifndef GOSSIP_REPORT_HPP_
#define GOSSIP_REPORT_HPP_

#include <optional>
#include <string>

#include <json.hpp>

#include "gossip/generators.hpp"
#include "gossip/metrics.hpp"

namespace gossip {

// Serialised outputs. CSV cells for absent values are empty; the JSON
// equivalent is null. All numbers use the shortest round-trip decimal form.

inline constexpr int kSchemaVersion = 1;

std::string format_real(double x);
std::string format_cell(std::optional<double> x);

/// Header plus one row, columns as in summary_columns().
std::string summary_csv(const NetworkSummary& s);
nlohmann::ordered_json summary_json(const NetworkSummary& s);

/// k, count, sigma_k, beta_k, cc_k, beta_over_sigma_k, beta_over_sigma_cc_k.
std::string curves_csv(const DegreeCurves& curves);
nlohmann::ordered_json curves_json(const DegreeCurves& curves);

/// label, k, sigma_v, beta_v, one row per node in index order.
std::string victims_csv(const WeightedGraph& g, const SpreadTable& table);

/// index, label
std::string node_index_csv(const WeightedGraph& g);

struct AnalysisMeta {
    std::string input;
    SpreadModel model = SpreadModel::Both;
    std::size_t min_samples = 1;
};

/// summary.json document: schema_version, meta, summary and curves.
nlohmann::ordered_json analysis_json(const NetworkReport& report, const AnalysisMeta& meta);

nlohmann::ordered_json generator_config_json(const GeneratorConfig& cfg);

/// One row per realization, then "mean" and "stddev" rows.
std::string ensemble_csv(const EnsembleSummary& e);
/// k, realizations, vertices, sigma_k, beta_k, cc_k (means over realizations).
std::string ensemble_curves_csv(const EnsembleSummary& e);
nlohmann::ordered_json ensemble_json(const EnsembleSummary& e);

}  // namespace gossip

#endif  // GOSSIP_REPORT_HPP_
