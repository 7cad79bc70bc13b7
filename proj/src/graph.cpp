#include "gossip/graph.hpp"

#include <algorithm>
#include <cmath>
#include <map>

namespace gossip {

namespace {

void check_weight(double w) {
    if (!std::isfinite(w) || w <= 0.0)
        throw InputError("edge weight must be a positive finite number, got " + std::to_string(w));
}

}  // namespace

WeightedGraph WeightedGraph::from_records(std::span<const EdgeRecord> records,
                                          std::span<const std::string> declared_nodes) {
    WeightedGraph g;
    auto intern = [&g](const std::string& label) {
        auto [it, inserted] = g.index_.try_emplace(label, g.labels_.size());
        if (inserted) g.labels_.push_back(label);
        return it->second;
    };
    for (const auto& label : declared_nodes) intern(label);

    // Ordered so duplicate merging sums in record order.
    std::map<std::pair<NodeId, NodeId>, double> merged;
    for (const auto& rec : records) {
        if (rec.source == rec.target) throw InputError("self-loop on node '" + rec.source + "'");
        check_weight(rec.weight);
        NodeId a = intern(rec.source);
        NodeId b = intern(rec.target);
        merged[{std::min(a, b), std::max(a, b)}] += rec.weight;
    }

    std::vector<std::vector<Neighbor>> adjacency(g.labels_.size());
    for (const auto& [pair, w] : merged) {
        adjacency[pair.first].push_back({pair.second, w});
        adjacency[pair.second].push_back({pair.first, w});
    }
    g.finalize(std::move(adjacency));
    return g;
}

WeightedGraph WeightedGraph::from_indexed(std::size_t node_count, std::span<const IndexedEdge> edges) {
    WeightedGraph g;
    g.labels_.reserve(node_count);
    for (std::size_t i = 0; i < node_count; ++i) {
        g.labels_.push_back(std::to_string(i));
        g.index_.emplace(g.labels_.back(), i);
    }
    std::map<std::pair<NodeId, NodeId>, double> merged;
    for (const auto& e : edges) {
        if (e.source >= node_count || e.target >= node_count)
            throw InputError("edge endpoint out of range");
        if (e.source == e.target) throw InputError("self-loop on node " + std::to_string(e.source));
        check_weight(e.weight);
        merged[{std::min(e.source, e.target), std::max(e.source, e.target)}] += e.weight;
    }
    std::vector<std::vector<Neighbor>> adjacency(node_count);
    for (const auto& [pair, w] : merged) {
        adjacency[pair.first].push_back({pair.second, w});
        adjacency[pair.second].push_back({pair.first, w});
    }
    g.finalize(std::move(adjacency));
    return g;
}

void WeightedGraph::finalize(std::vector<std::vector<Neighbor>> adjacency) {
    std::size_t half_edges = 0;
    strength_.assign(adjacency.size(), 0.0);
    for (std::size_t i = 0; i < adjacency.size(); ++i) {
        auto& list = adjacency[i];
        std::sort(list.begin(), list.end(),
                  [](const Neighbor& a, const Neighbor& b) { return a.node < b.node; });
        for (const auto& n : list) strength_[i] += n.weight;
        half_edges += list.size();
    }
    adjacency_ = std::move(adjacency);
    edge_count_ = half_edges / 2;
}

std::size_t WeightedGraph::isolated_count() const noexcept {
    return static_cast<std::size_t>(
        std::count_if(adjacency_.begin(), adjacency_.end(), [](const auto& l) { return l.empty(); }));
}

std::optional<double> WeightedGraph::weight(NodeId i, NodeId j) const {
    const auto& list = adjacency_.at(i);
    auto it = std::lower_bound(list.begin(), list.end(), j,
                               [](const Neighbor& n, NodeId key) { return n.node < key; });
    if (it == list.end() || it->node != j) return std::nullopt;
    return it->weight;
}

std::optional<NodeId> WeightedGraph::find(std::string_view label) const {
    auto it = index_.find(std::string(label));
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

NodeId WeightedGraph::index_of(std::string_view label) const {
    if (auto id = find(label)) return *id;
    throw InputError("unknown node '" + std::string(label) + "'");
}

std::vector<IndexedEdge> WeightedGraph::edges() const {
    std::vector<IndexedEdge> out;
    out.reserve(edge_count_);
    for (NodeId i = 0; i < adjacency_.size(); ++i)
        for (const auto& n : adjacency_[i])
            if (i < n.node) out.push_back({i, n.node, n.weight});
    return out;
}

NodeProfile profile(const WeightedGraph& g, NodeId i) {
    if (i >= g.node_count()) throw InputError("unknown node index " + std::to_string(i));
    NodeProfile p;
    p.degree = g.degree(i);
    p.strength = g.strength(i);
    if (p.degree > 0) p.threshold = p.strength / static_cast<double>(p.degree);
    return p;
}

std::size_t LocalNeighborhood::edge_count() const noexcept {
    std::size_t half = 0;
    for (const auto& l : adjacency) half += l.size();
    return half / 2;
}

LocalNeighborhood induced_neighborhood(const WeightedGraph& g, NodeId v) {
    if (v >= g.node_count()) throw InputError("unknown node index " + std::to_string(v));
    LocalNeighborhood local;
    local.center = v;
    const auto around = g.neighbors(v);
    local.members.reserve(around.size());
    for (const auto& n : around) local.members.push_back(n.node);
    local.adjacency.resize(around.size());

    // Both lists are sorted by node id, so a merge finds common neighbors.
    for (std::size_t a = 0; a < local.members.size(); ++a) {
        const auto outer = g.neighbors(local.members[a]);
        auto it = outer.begin();
        std::size_t b = 0;
        while (it != outer.end() && b < local.members.size()) {
            if (it->node < local.members[b]) {
                ++it;
            } else if (local.members[b] < it->node) {
                ++b;
            } else {
                local.adjacency[a].push_back(b);
                ++it;
                ++b;
            }
        }
    }
    return local;
}

}  // namespace gossip
