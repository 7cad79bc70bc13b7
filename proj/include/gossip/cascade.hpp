#ifndef GOSSIP_CASCADE_HPP_
#define GOSSIP_CASCADE_HPP_

#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

#include "gossip/graph.hpp"

namespace gossip {

enum class SpreadModel { Unweighted, Weighted, Both };

SpreadModel parse_spread_model(std::string_view name);
std::string_view to_string(SpreadModel model);

inline bool includes_unweighted(SpreadModel m) { return m != SpreadModel::Weighted; }
inline bool includes_weighted(SpreadModel m) { return m != SpreadModel::Unweighted; }

/// True when v is a close friend of s: w_sv is strictly above the mean
/// weight of s's edges. Asymmetric. Evaluated as sum over s's edges of
/// (w_sv - w_sl) > 0, which is exact when all of s's weights are equal.
/// Throws InputError when s and v are not adjacent.
bool is_close_friend(const WeightedGraph& g, NodeId spreader, NodeId victim);

/// Outcome of a single (victim, originator) cascade.
struct CascadeResult {
    std::vector<NodeId> knowers;  // sorted; always contains the originator
    std::size_t count = 0;        // n_vr or m_vr
    std::size_t spreading_time = 0;
};

/// Every knower tells every common neighbor of itself and the victim.
CascadeResult cascade_unweighted(const WeightedGraph& g, NodeId victim, NodeId originator);

/// As cascade_unweighted, except that a knower for whom the victim is a close
/// friend keeps quiet. The originator obeys the same rule. Quiet nodes still
/// count as knowers.
CascadeResult cascade_weighted(const WeightedGraph& g, NodeId victim, NodeId originator);

struct OriginatorSpread {
    NodeId originator = 0;
    std::optional<std::size_t> informed_unweighted;  // n_vr
    std::optional<std::size_t> informed_weighted;    // m_vr
    std::optional<std::size_t> time_unweighted;      // τ_vr
    std::optional<std::size_t> time_weighted;
};

/// Spread factors of one victim over all of its originators.
///
/// The totals are exact integer sums of n_vr (m_vr); the spread factors are
/// total / k_v^2, which is the mean over originators of n_vr / k_v.
struct VictimSpread {
    NodeId victim = 0;
    std::size_t degree = 0;
    std::optional<std::size_t> unweighted_total;
    std::optional<std::size_t> weighted_total;
    // Filled by victim_spread only; the fast path never runs per-originator
    // cascades.
    std::vector<OriginatorSpread> per_originator;

    std::optional<double> sigma() const;
    std::optional<double> beta() const;
};

/// Runs one cascade per originator. Returns nullopt for isolated victims.
std::optional<VictimSpread> victim_spread(const WeightedGraph& g, NodeId victim,
                                          SpreadModel model = SpreadModel::Both);

/// Same totals as victim_spread from a component decomposition of the
/// victim's neighborhood instead of per-originator searches: the unweighted
/// total is the sum of squared component sizes; the weighted total sums, per
/// component C of talkative nodes, |C| * (|C| + quiet nodes bordering C),
/// plus one for every quiet neighbor.
std::optional<VictimSpread> fast_victim_spread(const WeightedGraph& g, NodeId victim,
                                               SpreadModel model = SpreadModel::Both);

}  // namespace gossip

#endif  // GOSSIP_CASCADE_HPP_
