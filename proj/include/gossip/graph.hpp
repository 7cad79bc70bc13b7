#ifndef GOSSIP_GRAPH_HPP_
#define GOSSIP_GRAPH_HPP_

#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace gossip {

using NodeId = std::size_t;

/// Raised for malformed or invalid network input (bad weights, self-loops,
/// unknown labels). Carries the 1-based source line when one is known.
class InputError : public std::runtime_error {
public:
    explicit InputError(const std::string& what, std::size_t line = 0)
        : std::runtime_error(line ? "line " + std::to_string(line) + ": " + what : what),
          line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

struct Neighbor {
    NodeId node;
    double weight;
};

struct EdgeRecord {
    std::string source;
    std::string target;
    double weight;
};

struct IndexedEdge {
    NodeId source;
    NodeId target;
    double weight;
};

struct NodeProfile {
    std::size_t degree = 0;
    double strength = 0.0;
    // Mean incident edge weight; absent for isolated nodes.
    std::optional<double> threshold;
};

/// Immutable undirected simple graph with strictly positive edge weights.
///
/// Nodes are dense 0-based indices; the original labels are kept for
/// reporting. Adjacency lists are sorted by neighbor index so edge lookup is
/// a binary search.
class WeightedGraph {
public:
    WeightedGraph() = default;

    /// Builds from labelled records. Duplicate pairs merge by summing their
    /// weights. `declared_nodes` are added first (in order) so that nodes
    /// without edges survive as isolated nodes.
    static WeightedGraph from_records(std::span<const EdgeRecord> records,
                                      std::span<const std::string> declared_nodes = {});

    /// Builds from index pairs over nodes 0..node_count-1, labelled by their
    /// decimal index.
    static WeightedGraph from_indexed(std::size_t node_count, std::span<const IndexedEdge> edges);

    std::size_t node_count() const noexcept { return adjacency_.size(); }
    std::size_t edge_count() const noexcept { return edge_count_; }
    std::size_t isolated_count() const noexcept;

    std::size_t degree(NodeId i) const { return adjacency_.at(i).size(); }
    double strength(NodeId i) const { return strength_.at(i); }
    std::span<const Neighbor> neighbors(NodeId i) const { return adjacency_.at(i); }

    std::optional<double> weight(NodeId i, NodeId j) const;
    bool has_edge(NodeId i, NodeId j) const { return weight(i, j).has_value(); }

    const std::string& label(NodeId i) const { return labels_.at(i); }
    const std::vector<std::string>& labels() const noexcept { return labels_; }
    std::optional<NodeId> find(std::string_view label) const;
    /// Like find() but throws InputError for an unknown label.
    NodeId index_of(std::string_view label) const;

    /// Every edge once, as (i, j, w) with i < j, ordered by (i, j).
    std::vector<IndexedEdge> edges() const;

private:
    void finalize(std::vector<std::vector<Neighbor>> adjacency);

    std::vector<std::vector<Neighbor>> adjacency_;
    std::vector<double> strength_;
    std::vector<std::string> labels_;
    std::unordered_map<std::string, NodeId> index_;
    std::size_t edge_count_ = 0;
};

/// Degree, strength and close-friend threshold of node i.
NodeProfile profile(const WeightedGraph& g, NodeId i);

/// Subgraph induced by the neighbors of a node. Local node ℓ stands for
/// `members[ℓ]` in the parent graph; each local edge {a, b} is one triangle
/// (center, members[a], members[b]).
struct LocalNeighborhood {
    NodeId center = 0;
    std::vector<NodeId> members;
    std::vector<std::vector<std::size_t>> adjacency;

    std::size_t size() const noexcept { return members.size(); }
    std::size_t edge_count() const noexcept;
};

LocalNeighborhood induced_neighborhood(const WeightedGraph& g, NodeId v);

}  // namespace gossip

#endif  // GOSSIP_GRAPH_HPP_
