#ifndef GOSSIP_TESTS_FIXTURES_HPP_
#define GOSSIP_TESTS_FIXTURES_HPP_

#include <algorithm>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "gossip/graph.hpp"

namespace gossip::testing {

// Victim v with neighbors a..h; local edges a-b, b-c, b-d, d-e, g-h. All
// weights 1 except v-b, whose weight is `vb`.
inline WeightedGraph cascade_sample(double vb = 2.0) {
    const std::vector<EdgeRecord> records = {
        {"v", "a", 1}, {"v", "b", vb}, {"v", "c", 1}, {"v", "d", 1}, {"v", "e", 1},
        {"v", "f", 1}, {"v", "g", 1}, {"v", "h", 1}, {"a", "b", 1}, {"b", "c", 1},
        {"b", "d", 1}, {"d", "e", 1}, {"g", "h", 1},
    };
    return WeightedGraph::from_records(records);
}

// i has edges of weight 2 (to j) and 9; j has edges of weight 2 (to i), 1
// and 1. Mean friendship: i 11/2, j 4/3.
inline WeightedGraph asymmetric_pair() {
    const std::vector<EdgeRecord> records = {
        {"i", "j", 2}, {"i", "x", 9}, {"j", "y", 1}, {"j", "z", 1},
    };
    return WeightedGraph::from_records(records);
}

inline WeightedGraph complete_graph(std::size_t n, double w = 1.0) {
    std::vector<IndexedEdge> edges;
    for (NodeId i = 0; i < n; ++i)
        for (NodeId j = i + 1; j < n; ++j) edges.push_back({i, j, w});
    return WeightedGraph::from_indexed(n, edges);
}

inline WeightedGraph star_graph(std::size_t leaves) {
    std::vector<IndexedEdge> edges;
    for (NodeId i = 1; i <= leaves; ++i) edges.push_back({0, i, 1.0});
    return WeightedGraph::from_indexed(leaves + 1, edges);
}

// Seeded random weighted graph: N in [2, max_nodes], density drawn per
// graph, weights either small integers (many ties) or continuous.
inline WeightedGraph random_weighted_graph(std::uint64_t seed, std::size_t max_nodes = 60) {
    std::mt19937_64 rng(seed);
    const auto n = std::uniform_int_distribution<std::size_t>(2, max_nodes)(rng);
    const double density = std::uniform_real_distribution<double>(0.05, 0.6)(rng);
    const bool integer_weights = rng() % 2 == 0;
    std::bernoulli_distribution coin(density);
    std::uniform_int_distribution<int> small(1, 4);
    std::uniform_real_distribution<double> real(0.1, 5.0);
    std::vector<IndexedEdge> edges;
    for (NodeId i = 0; i < n; ++i)
        for (NodeId j = i + 1; j < n; ++j)
            if (coin(rng)) edges.push_back({i, j, integer_weights ? double(small(rng)) : real(rng)});
    return WeightedGraph::from_indexed(n, edges);
}

inline WeightedGraph with_uniform_weights(const WeightedGraph& g, double w) {
    auto edges = g.edges();
    for (auto& e : edges) e.weight = w;
    return WeightedGraph::from_indexed(g.node_count(), edges);
}

// Random bipartite graph between two halves: never has a triangle.
inline WeightedGraph random_triangle_free_graph(std::uint64_t seed, std::size_t max_nodes = 60) {
    std::mt19937_64 rng(seed);
    const auto n = std::uniform_int_distribution<std::size_t>(2, max_nodes)(rng);
    const auto left = std::uniform_int_distribution<std::size_t>(1, n - 1)(rng);
    std::bernoulli_distribution coin(std::uniform_real_distribution<double>(0.1, 0.9)(rng));
    std::uniform_real_distribution<double> real(0.1, 5.0);
    std::vector<IndexedEdge> edges;
    for (NodeId i = 0; i < left; ++i)
        for (NodeId j = left; j < n; ++j)
            if (coin(rng)) edges.push_back({i, j, real(rng)});
    return WeightedGraph::from_indexed(n, edges);
}

// Brute-force cascade straight from the definitions, on the full graph:
// repeat until nothing changes, every knower allowed to talk tells each of
// its neighbors that is also a neighbor of the victim. Quiet means
// w(s, v) > (sum of s's weights) / k_s, evaluated naively.
inline std::set<NodeId> oracle_knowers(const WeightedGraph& g, NodeId v, NodeId r, bool weighted) {
    auto adjacent = [&](NodeId a, NodeId b) {
        for (const auto& n : g.neighbors(a))
            if (n.node == b) return true;
        return false;
    };
    auto quiet = [&](NodeId s) {
        if (!weighted) return false;
        double sum = 0.0, wsv = 0.0;
        for (const auto& n : g.neighbors(s)) {
            sum += n.weight;
            if (n.node == v) wsv = n.weight;
        }
        // Uniform weights make the mean exactly w_sv in exact arithmetic.
        bool uniform = true;
        for (const auto& n : g.neighbors(s)) uniform = uniform && n.weight == wsv;
        if (uniform) return false;
        return wsv > sum / static_cast<double>(g.neighbors(s).size());
    };
    std::set<NodeId> knowers{r};
    bool changed = true;
    while (changed) {
        changed = false;
        for (NodeId s : std::vector<NodeId>(knowers.begin(), knowers.end())) {
            if (quiet(s)) continue;
            for (const auto& n : g.neighbors(s)) {
                if (n.node == v || !adjacent(n.node, v)) continue;
                if (knowers.insert(n.node).second) changed = true;
            }
        }
    }
    return knowers;
}

}  // namespace gossip::testing

#endif  // GOSSIP_TESTS_FIXTURES_HPP_
