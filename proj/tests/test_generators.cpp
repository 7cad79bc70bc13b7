#include <doctest.h>

#include <algorithm>
#include <set>

#include "gossip/generators.hpp"
#include "gossip/metrics.hpp"
#include "gossip/report.hpp"

using namespace gossip;

namespace {

GeneratorConfig ws(std::size_t n, std::size_t k, double p) {
    GeneratorConfig cfg;
    cfg.model = GeneratorModel::WS, cfg.N = n, cfg.k = k, cfg.p = p;
    return cfg;
}

}  // namespace

TEST_CASE("config validation") {
    auto cfg = ws(200, 3, 0.1);
    CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);  // odd k
    cfg.k = 200;
    CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);  // k >= N
    cfg = preset_config("BA200");
    cfg.m = 11;
    CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);  // m > m0
    cfg = preset_config("BA200");
    cfg.m0 = 200;
    CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);  // m0 >= N
    cfg = preset_config("ER200");
    cfg.p = 1.5;
    CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
    cfg.p = 0.5;
    cfg.weight_stddev = -1;
    CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
    for (auto name : {"ER200", "BA200", "WS200", "ER1000", "BA1000", "WS1000"}) CHECK_NOTHROW(preset_config(name).validate());
    CHECK_THROWS_AS(preset_config("XY"), std::invalid_argument);
}

TEST_CASE("config text round-trips") {
    auto cfg = preset_config("WS200");
    cfg.seed = 12345;
    cfg.weight_mode = WeightMode::Clamp;
    cfg.weight_stddev = 0.25;
    const auto back = parse_generator_config(format_generator_config(cfg));
    CHECK(format_generator_config(back) == format_generator_config(cfg));
    CHECK(back.model == GeneratorModel::WS);
    CHECK(back.weight_stddev == 0.25);

    CHECK_THROWS_AS(parse_generator_config("colour = red\n"), std::invalid_argument);
    CHECK_THROWS_AS(parse_generator_config("N = many\n"), std::invalid_argument);
    const auto partial = parse_generator_config("# comment\nN = 50\n", preset_config("BA200"));
    CHECK(partial.model == GeneratorModel::BA);
    CHECK(partial.N == 50);
}

TEST_CASE("realization seeds are distinct and stable") {
    std::set<std::uint64_t> seen;
    for (std::size_t i = 0; i < 1000; ++i) seen.insert(realization_seed(7, i));
    CHECK(seen.size() == 1000);
    CHECK(realization_seed(7, 3) == realization_seed(7, 3));
    CHECK(realization_seed(7, 3) != realization_seed(8, 3));
}

TEST_CASE("Erdos-Renyi edge count is close to its expectation") {
    auto cfg = preset_config("ER200");
    double total = 0.0;
    for (std::size_t i = 0; i < 20; ++i) {
        const auto t = generate_structure(cfg, i);
        // Binomial(19900, 0.04): mean 796, sd about 27.6.
        CHECK(t.edges.size() > 650);
        CHECK(t.edges.size() < 950);
        total += static_cast<double>(t.edges.size());
    }
    CHECK(total / 20.0 == doctest::Approx(796.0).epsilon(0.03));
}

TEST_CASE("Barabasi-Albert edge count is exact") {
    const auto cfg = preset_config("BA200");
    for (std::size_t i = 0; i < 5; ++i) {
        const auto g = generate_network(cfg, i);
        CHECK(g.edge_count() == 45 + 190 * 4);
        CHECK(g.node_count() == 200);
        for (NodeId v = 10; v < 200; ++v) CHECK(g.degree(v) >= 4);
    }
    GeneratorConfig tiny;
    tiny.model = GeneratorModel::BA, tiny.N = 10, tiny.m0 = 1, tiny.m = 1;
    CHECK(generate_network(tiny, 0).edge_count() == 9);
}

TEST_CASE("Barabasi-Albert hubs grow with N") {
    auto max_degree = [](std::size_t n, std::size_t realization) {
        auto cfg = preset_config("BA200");
        cfg.N = n;
        const auto g = generate_network(cfg, realization);
        std::size_t best = 0;
        for (NodeId v = 0; v < g.node_count(); ++v) best = std::max(best, g.degree(v));
        return best;
    };
    double small = 0.0, large = 0.0;
    for (std::size_t r = 0; r < 5; ++r) small += max_degree(200, r), large += max_degree(3000, r);
    CHECK(large > 1.5 * small);
}

TEST_CASE("Watts-Strogatz lattice without rewiring") {
    const auto g = generate_network(ws(200, 4, 0.0), 0);
    CHECK(g.edge_count() == 400);
    for (NodeId v = 0; v < 200; ++v) CHECK(g.degree(v) == 4);
    CHECK(clustering_coefficient(g).mean == 0.5);
}

TEST_CASE("Watts-Strogatz rewiring keeps the edge count and a simple graph") {
    const auto cfg = ws(200, 4, 0.3);
    for (std::size_t i = 0; i < 5; ++i) {
        const auto t = generate_structure(cfg, i);
        CHECK(t.edges.size() == 400);
        std::set<std::pair<NodeId, NodeId>> unique(t.edges.begin(), t.edges.end());
        CHECK(unique.size() == 400);
        for (auto [a, b] : t.edges) CHECK(a < b);
    }
    // Dense corner case: full rewiring of a nearly complete lattice terminates.
    CHECK(generate_structure(ws(7, 6, 1.0), 0).edges.size() == 21);
}

TEST_CASE("edge weights are the mean of node weights") {
    const Topology t{3, {{0, 1}, {1, 2}}};
    const std::vector<double> w = {1.0, 2.0, 4.0};
    const auto g = weight_by_node_average(t, w);
    CHECK(*g.weight(0, 1) == 1.5);
    CHECK(*g.weight(1, 2) == 3.0);
    CHECK_THROWS_AS(weight_by_node_average(t, std::vector<double>{1.0}), std::invalid_argument);
}

TEST_CASE("constant node weights give beta = sigma") {
    const auto t = generate_structure(preset_config("BA200"), 0);
    const std::vector<double> w(t.node_count, 0.7);
    const auto report = summarize(weight_by_node_average(t, w));
    CHECK(*report.summary.beta == *report.summary.sigma);
}

TEST_CASE("generated weights are positive and reproducible") {
    auto cfg = preset_config("ER200");
    cfg.N = 50;
    cfg.p = 0.2;
    auto weights = [&](std::size_t i) {
        std::vector<double> out;
        for (const auto& e : generate_network(cfg, i).edges()) out.push_back(e.weight);
        return out;
    };
    const auto first = weights(0);
    CHECK(first == weights(0));
    CHECK(first != weights(1));
    for (double w : first) CHECK(w > 0.0);

    cfg.weight_mode = WeightMode::Clamp;
    cfg.weight_mean = 0.1;
    cfg.weight_stddev = 2.0;
    std::size_t floor_edges = 0;
    for (const auto& e : generate_network(cfg, 0).edges()) {
        CHECK(e.weight >= kMinNodeWeight);
        if (e.weight == kMinNodeWeight) ++floor_edges;
    }
    CHECK(floor_edges > 0);
}

TEST_CASE("single realization ensemble equals its summary") {
    auto cfg = preset_config("WS200");
    cfg.realizations = 1;
    cfg.seed = 3;
    const auto e = run_ensemble(cfg);
    const auto direct = summarize(generate_network(cfg, 0)).summary;
    CHECK(e.field("sigma").mean == direct.sigma);
    CHECK(e.field("beta").mean == direct.beta);
    CHECK(*e.field("CC").mean == direct.cc);
    CHECK(*e.field("sigma").stddev == 0.0);
    CHECK(e.seeds.at(0) == realization_seed(3, 0));
}

TEST_CASE("ensemble means are arithmetic means of realizations") {
    auto cfg = preset_config("BA200");
    cfg.N = 80;
    cfg.realizations = 6;
    const auto e = run_ensemble(cfg);
    for (const auto& col : summary_columns()) {
        double sum = 0.0;
        std::size_t n = 0;
        for (const auto& s : e.realizations)
            if (auto v = col.get(s)) sum += *v, ++n;
        const auto& f = e.field(col.name);
        CHECK(f.samples == n);
        if (n) CHECK(*f.mean == doctest::Approx(sum / n).epsilon(1e-9));
    }
    for (const auto& [k, p] : e.sigma_k) {
        CHECK(p.realizations >= 1);
        CHECK(p.realizations <= 6);
    }
}

TEST_CASE("ensemble output does not depend on the worker count") {
    auto cfg = preset_config("ER200");
    cfg.N = 60;
    cfg.p = 0.15;
    cfg.realizations = 7;
    const auto one = run_ensemble(cfg, {1, 1});
    const auto three = run_ensemble(cfg, {3, 1});
    CHECK(ensemble_csv(one) == ensemble_csv(three));
    CHECK(ensemble_json(one).dump() == ensemble_json(three).dump());
}
