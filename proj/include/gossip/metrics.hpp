#ifndef GOSSIP_METRICS_HPP_
#define GOSSIP_METRICS_HPP_

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string_view>
#include <vector>

#include "gossip/cascade.hpp"
#include "gossip/graph.hpp"

namespace gossip {

/// A computed result broke one of its own guarantees (e.g. beta > sigma).
class InvariantError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

struct DegreePoint {
    double value = 0.0;
    std::size_t count = 0;  // |V_k|
};

/// Per-degree means. Degrees without samples are absent.
struct DegreeCurve {
    std::map<std::size_t, DegreePoint> points;

    bool empty() const noexcept { return points.empty(); }
    std::size_t size() const noexcept { return points.size(); }
    std::optional<double> at(std::size_t degree) const;
};

struct SpreadOptions {
    unsigned workers = 1;
    bool fast = true;  // component decomposition instead of per-originator search
};

/// Per-victim spread for every node; isolated nodes hold nullopt.
struct SpreadTable {
    SpreadModel model = SpreadModel::Both;
    std::vector<std::optional<VictimSpread>> victims;
};

/// Victims are independent; with several workers each fills its own slots,
/// so the table is identical for any worker count.
SpreadTable compute_spread(const WeightedGraph& g, SpreadModel model, const SpreadOptions& opts = {});

struct GlobalSpread {
    std::optional<double> sigma;
    std::optional<double> beta;
    std::size_t victims = 0;   // nodes with k >= 1
    std::size_t isolated = 0;  // excluded from the means
};

/// Mean of sigma_v (beta_v) over non-isolated victims. Throws InputError when
/// every node is isolated.
GlobalSpread global_spread(const SpreadTable& table);
GlobalSpread global_spread(const WeightedGraph& g, SpreadModel model, const SpreadOptions& opts = {});

/// sigma_k (model Unweighted) or beta_k (model Weighted).
DegreeCurve spread_by_degree(const WeightedGraph& g, const SpreadTable& table, SpreadModel which);
DegreeCurve spread_by_degree(const WeightedGraph& g, SpreadModel which, const SpreadOptions& opts = {});

struct Clustering {
    double mean = 0.0;           // CC over all nodes
    DegreeCurve by_degree;       // CC_k
    std::vector<double> local;   // CC_i; zero for k_i < 2
};

Clustering clustering_coefficient(const WeightedGraph& g);

struct CriticalDegree {
    std::optional<std::size_t> degree;
    bool interior = false;  // larger values exist on both sides
};

/// Degree minimising the curve over points with at least `min_samples`
/// vertices; ties go to the smaller degree. Absent with fewer than three
/// eligible points.
CriticalDegree find_k0(const DegreeCurve& curve, std::size_t min_samples = 1);

struct NetworkSummary {
    std::size_t nodes = 0;           // N, isolated nodes included
    std::size_t active_nodes = 0;    // nodes with k >= 1
    std::size_t edges = 0;           // M
    double cc = 0.0;
    std::optional<double> sigma;
    std::optional<double> beta;
    CriticalDegree k0;
    CriticalDegree k0_w;
    std::optional<double> k0w_over_k0;
    std::optional<double> sigma_over_cc;
    std::optional<double> beta_over_cc;
    std::optional<double> beta_over_sigma;
    std::optional<double> beta_over_sigma_cc;
};

/// Scalar columns of NetworkSummary in report order. The first twelve are
/// N, M, k0, k0_w, k0w_over_k0, CC, sigma, beta, sigma_over_cc, beta_over_cc,
/// beta_over_sigma, beta_over_sigma_cc; bookkeeping columns follow.
struct SummaryColumn {
    std::string_view name;
    std::optional<double> (*get)(const NetworkSummary&);
};
std::span<const SummaryColumn> summary_columns();

struct RatioCurves {
    DegreeCurve beta_over_sigma;     // beta_k / sigma_k
    DegreeCurve beta_over_sigma_cc;  // beta_k / (sigma_k CC_k)
};

struct DegreeCurves {
    DegreeCurve sigma;
    DegreeCurve beta;
    DegreeCurve cc;
    RatioCurves ratios;
};

struct SummaryOptions {
    SpreadModel model = SpreadModel::Both;
    std::size_t min_samples = 1;
    SpreadOptions spread;
};

struct NetworkReport {
    NetworkSummary summary;
    DegreeCurves curves;
    SpreadTable table;
};

RatioCurves ratio_curves(const DegreeCurve& sigma, const DegreeCurve& beta, const DegreeCurve& cc);
RatioCurves ratio_curves(const WeightedGraph& g, const SpreadOptions& opts = {});

/// Every network-level coefficient plus the per-degree curves behind them.
NetworkReport summarize(const WeightedGraph& g, const SummaryOptions& opts = {});

/// Throws InvariantError if the report contradicts itself: beta above sigma
/// (globally, per victim or per degree), values outside [0, 1], or ratio
/// fields that do not follow from the base fields.
void check_invariants(const NetworkReport& report);

}  // namespace gossip

#endif  // GOSSIP_METRICS_HPP_
