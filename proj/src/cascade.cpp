#include "gossip/cascade.hpp"

#include <algorithm>
#include <cstdint>
#include <deque>
#include <numeric>
#include <string>

namespace gossip {

SpreadModel parse_spread_model(std::string_view name) {
    if (name == "unweighted") return SpreadModel::Unweighted;
    if (name == "weighted") return SpreadModel::Weighted;
    if (name == "both") return SpreadModel::Both;
    throw std::invalid_argument("unknown spread model '" + std::string(name) + "'");
}

std::string_view to_string(SpreadModel model) {
    switch (model) {
        case SpreadModel::Unweighted: return "unweighted";
        case SpreadModel::Weighted: return "weighted";
        case SpreadModel::Both: return "both";
    }
    return "both";
}

bool is_close_friend(const WeightedGraph& g, NodeId spreader, NodeId victim) {
    const auto w = g.weight(spreader, victim);
    if (!w)
        throw InputError("no edge between '" + g.label(spreader) + "' and '" + g.label(victim) + "'");
    double excess = 0.0;
    for (const auto& n : g.neighbors(spreader)) excess += *w - n.weight;
    return excess > 0.0;
}

namespace {

// Local-index flags: true when the member passes gossip about the center on.
std::vector<bool> talkative_members(const WeightedGraph& g, const LocalNeighborhood& local) {
    std::vector<bool> talks(local.size());
    for (std::size_t i = 0; i < local.size(); ++i)
        talks[i] = !is_close_friend(g, local.members[i], local.center);
    return talks;
}

std::size_t local_index(const WeightedGraph& g, const LocalNeighborhood& local, NodeId originator) {
    auto it = std::lower_bound(local.members.begin(), local.members.end(), originator);
    if (it == local.members.end() || *it != originator)
        throw InputError("'" + g.label(originator) + "' is not a neighbor of victim '" +
                         g.label(local.center) + "'");
    return static_cast<std::size_t>(it - local.members.begin());
}

// Breadth-first propagation from `start`; nodes with talks[i] == false
// receive but do not send. An empty `talks` means everyone sends.
CascadeResult propagate(const LocalNeighborhood& local, std::size_t start,
                        const std::vector<bool>& talks) {
    std::vector<std::size_t> layer(local.size(), SIZE_MAX);
    std::deque<std::size_t> queue{start};
    layer[start] = 0;
    CascadeResult result;
    while (!queue.empty()) {
        const auto s = queue.front();
        queue.pop_front();
        result.spreading_time = std::max(result.spreading_time, layer[s]);
        if (!talks.empty() && !talks[s]) continue;
        for (auto t : local.adjacency[s]) {
            if (layer[t] != SIZE_MAX) continue;
            layer[t] = layer[s] + 1;
            queue.push_back(t);
        }
    }
    for (std::size_t i = 0; i < local.size(); ++i)
        if (layer[i] != SIZE_MAX) result.knowers.push_back(local.members[i]);
    result.count = result.knowers.size();
    return result;
}

// Component label per local node over edges whose endpoints both satisfy
// `in`; nodes outside `in` get SIZE_MAX.
std::vector<std::size_t> components(const LocalNeighborhood& local, const std::vector<bool>& in,
                                    std::size_t& component_count) {
    std::vector<std::size_t> comp(local.size(), SIZE_MAX);
    component_count = 0;
    std::vector<std::size_t> stack;
    for (std::size_t seed = 0; seed < local.size(); ++seed) {
        if (!in[seed] || comp[seed] != SIZE_MAX) continue;
        comp[seed] = component_count;
        stack.push_back(seed);
        while (!stack.empty()) {
            const auto s = stack.back();
            stack.pop_back();
            for (auto t : local.adjacency[s]) {
                if (!in[t] || comp[t] != SIZE_MAX) continue;
                comp[t] = component_count;
                stack.push_back(t);
            }
        }
        ++component_count;
    }
    return comp;
}

}  // namespace

CascadeResult cascade_unweighted(const WeightedGraph& g, NodeId victim, NodeId originator) {
    const auto local = induced_neighborhood(g, victim);
    return propagate(local, local_index(g, local, originator), {});
}

CascadeResult cascade_weighted(const WeightedGraph& g, NodeId victim, NodeId originator) {
    const auto local = induced_neighborhood(g, victim);
    const auto start = local_index(g, local, originator);
    return propagate(local, start, talkative_members(g, local));
}

std::optional<double> VictimSpread::sigma() const {
    if (!unweighted_total || degree == 0) return std::nullopt;
    const auto k = static_cast<double>(degree);
    return static_cast<double>(*unweighted_total) / (k * k);
}

std::optional<double> VictimSpread::beta() const {
    if (!weighted_total || degree == 0) return std::nullopt;
    const auto k = static_cast<double>(degree);
    return static_cast<double>(*weighted_total) / (k * k);
}

std::optional<VictimSpread> victim_spread(const WeightedGraph& g, NodeId victim, SpreadModel model) {
    const auto local = induced_neighborhood(g, victim);
    if (local.size() == 0) return std::nullopt;

    VictimSpread out;
    out.victim = victim;
    out.degree = local.size();
    std::vector<bool> talks;
    if (includes_unweighted(model)) out.unweighted_total = 0;
    if (includes_weighted(model)) {
        out.weighted_total = 0;
        talks = talkative_members(g, local);
    }
    for (std::size_t r = 0; r < local.size(); ++r) {
        OriginatorSpread row;
        row.originator = local.members[r];
        if (includes_unweighted(model)) {
            const auto c = propagate(local, r, {});
            row.informed_unweighted = c.count;
            row.time_unweighted = c.spreading_time;
            *out.unweighted_total += c.count;
        }
        if (includes_weighted(model)) {
            const auto c = propagate(local, r, talks);
            row.informed_weighted = c.count;
            row.time_weighted = c.spreading_time;
            *out.weighted_total += c.count;
        }
        out.per_originator.push_back(row);
    }
    return out;
}

std::optional<VictimSpread> fast_victim_spread(const WeightedGraph& g, NodeId victim, SpreadModel model) {
    const auto local = induced_neighborhood(g, victim);
    if (local.size() == 0) return std::nullopt;

    VictimSpread out;
    out.victim = victim;
    out.degree = local.size();

    if (includes_unweighted(model)) {
        std::size_t count = 0;
        const auto comp = components(local, std::vector<bool>(local.size(), true), count);
        std::vector<std::size_t> sizes(count, 0);
        for (auto c : comp) ++sizes[c];
        out.unweighted_total = std::transform_reduce(sizes.begin(), sizes.end(), std::size_t{0},
                                                     std::plus<>{}, [](auto s) { return s * s; });
    }

    if (includes_weighted(model)) {
        const auto talks = talkative_members(g, local);
        std::size_t count = 0;
        const auto comp = components(local, talks, count);
        std::vector<std::size_t> sizes(count, 0);
        for (auto c : comp)
            if (c != SIZE_MAX) ++sizes[c];

        // Quiet nodes bordering each component, each counted once.
        std::vector<std::size_t> border(count, 0);
        std::vector<std::size_t> last_seen(local.size(), SIZE_MAX);
        std::size_t total = 0;
        for (std::size_t q = 0; q < local.size(); ++q) {
            if (talks[q]) continue;
            ++total;  // a quiet originator informs only itself
            for (auto t : local.adjacency[q]) {
                const auto c = comp[t];
                if (c == SIZE_MAX || last_seen[c] == q) continue;
                last_seen[c] = q;
                ++border[c];
            }
        }
        for (std::size_t c = 0; c < count; ++c) total += sizes[c] * (sizes[c] + border[c]);
        out.weighted_total = total;
    }
    return out;
}

}  // namespace gossip
