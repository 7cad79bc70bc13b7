#include "gossip/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <thread>

namespace gossip {

std::optional<double> DegreeCurve::at(std::size_t degree) const {
    auto it = points.find(degree);
    if (it == points.end()) return std::nullopt;
    return it->second.value;
}

SpreadTable compute_spread(const WeightedGraph& g, SpreadModel model, const SpreadOptions& opts) {
    SpreadTable table;
    table.model = model;
    table.victims.resize(g.node_count());

    auto work = [&](std::size_t first, std::size_t stride) {
        for (NodeId v = first; v < g.node_count(); v += stride)
            table.victims[v] = opts.fast ? fast_victim_spread(g, v, model) : victim_spread(g, v, model);
    };

    const std::size_t workers = std::clamp<std::size_t>(opts.workers, 1, std::max<std::size_t>(1, g.node_count()));
    if (workers == 1) {
        work(0, 1);
        return table;
    }
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(work, w, workers);
    return table;
}

GlobalSpread global_spread(const SpreadTable& table) {
    GlobalSpread out;
    double sigma_sum = 0.0, beta_sum = 0.0;
    for (const auto& victim : table.victims) {
        if (!victim) {
            ++out.isolated;
            continue;
        }
        ++out.victims;
        if (auto s = victim->sigma()) sigma_sum += *s;
        if (auto b = victim->beta()) beta_sum += *b;
    }
    if (out.victims == 0) throw InputError("no edges: every node is isolated");
    const auto n = static_cast<double>(out.victims);
    if (includes_unweighted(table.model)) out.sigma = sigma_sum / n;
    if (includes_weighted(table.model)) out.beta = beta_sum / n;
    return out;
}

GlobalSpread global_spread(const WeightedGraph& g, SpreadModel model, const SpreadOptions& opts) {
    return global_spread(compute_spread(g, model, opts));
}

namespace {

// Means of `values[i]` grouped by degree of node i, skipping nullopt.
DegreeCurve group_by_degree(const WeightedGraph& g, const std::vector<std::optional<double>>& values) {
    std::map<std::size_t, std::pair<double, std::size_t>> acc;
    for (NodeId i = 0; i < values.size(); ++i) {
        if (!values[i]) continue;
        auto& [sum, count] = acc[g.degree(i)];
        sum += *values[i];
        ++count;
    }
    DegreeCurve curve;
    for (const auto& [k, sc] : acc)
        curve.points[k] = {sc.first / static_cast<double>(sc.second), sc.second};
    return curve;
}

std::optional<double> safe_ratio(std::optional<double> num, std::optional<double> den) {
    if (!num || !den || *den == 0.0) return std::nullopt;
    return *num / *den;
}

bool close_rel(double a, double b, double tol) {
    return std::abs(a - b) <= tol * std::max({1.0, std::abs(a), std::abs(b)});
}

}  // namespace

DegreeCurve spread_by_degree(const WeightedGraph& g, const SpreadTable& table, SpreadModel which) {
    if (which == SpreadModel::Both)
        throw std::invalid_argument("spread_by_degree needs a single model");
    if (which == SpreadModel::Unweighted ? !includes_unweighted(table.model) : !includes_weighted(table.model))
        throw std::invalid_argument("spread table lacks the requested model");
    std::vector<std::optional<double>> values(table.victims.size());
    for (NodeId v = 0; v < values.size(); ++v) {
        if (!table.victims[v]) continue;
        values[v] = which == SpreadModel::Unweighted ? table.victims[v]->sigma() : table.victims[v]->beta();
    }
    return group_by_degree(g, values);
}

DegreeCurve spread_by_degree(const WeightedGraph& g, SpreadModel which, const SpreadOptions& opts) {
    return spread_by_degree(g, compute_spread(g, which, opts), which);
}

Clustering clustering_coefficient(const WeightedGraph& g) {
    Clustering out;
    out.local.assign(g.node_count(), 0.0);
    std::vector<std::optional<double>> values(g.node_count());
    double sum = 0.0;
    for (NodeId i = 0; i < g.node_count(); ++i) {
        const auto k = g.degree(i);
        if (k >= 2) {
            const auto links = static_cast<double>(induced_neighborhood(g, i).edge_count());
            out.local[i] = 2.0 * links / (static_cast<double>(k) * static_cast<double>(k - 1));
        }
        values[i] = out.local[i];
        sum += out.local[i];
    }
    if (g.node_count() > 0) out.mean = sum / static_cast<double>(g.node_count());
    out.by_degree = group_by_degree(g, values);
    return out;
}

CriticalDegree find_k0(const DegreeCurve& curve, std::size_t min_samples) {
    std::vector<std::pair<std::size_t, double>> eligible;
    for (const auto& [k, p] : curve.points)
        if (p.count >= min_samples) eligible.emplace_back(k, p.value);
    CriticalDegree out;
    if (eligible.size() < 3) return out;

    // Ascending degree order; strict < keeps the smallest degree on ties.
    std::size_t best = 0;
    for (std::size_t i = 1; i < eligible.size(); ++i)
        if (eligible[i].second < eligible[best].second) best = i;
    out.degree = eligible[best].first;

    const double floor = eligible[best].second;
    const bool higher_below = std::any_of(eligible.begin(), eligible.begin() + static_cast<std::ptrdiff_t>(best),
                                          [&](const auto& p) { return p.second > floor; });
    const bool higher_above = std::any_of(eligible.begin() + static_cast<std::ptrdiff_t>(best) + 1, eligible.end(),
                                          [&](const auto& p) { return p.second > floor; });
    out.interior = higher_below && higher_above;
    return out;
}

RatioCurves ratio_curves(const DegreeCurve& sigma, const DegreeCurve& beta, const DegreeCurve& cc) {
    RatioCurves out;
    for (const auto& [k, s] : sigma.points) {
        auto b = beta.points.find(k);
        if (b == beta.points.end() || s.value == 0.0) continue;
        out.beta_over_sigma.points[k] = {b->second.value / s.value, s.count};
        auto c = cc.points.find(k);
        if (c == cc.points.end() || c->second.value == 0.0) continue;
        out.beta_over_sigma_cc.points[k] = {b->second.value / (s.value * c->second.value), s.count};
    }
    return out;
}

RatioCurves ratio_curves(const WeightedGraph& g, const SpreadOptions& opts) {
    const auto table = compute_spread(g, SpreadModel::Both, opts);
    return ratio_curves(spread_by_degree(g, table, SpreadModel::Unweighted),
                        spread_by_degree(g, table, SpreadModel::Weighted),
                        clustering_coefficient(g).by_degree);
}

NetworkReport summarize(const WeightedGraph& g, const SummaryOptions& opts) {
    NetworkReport report;
    report.table = compute_spread(g, opts.model, opts.spread);
    const auto global = global_spread(report.table);
    const auto clustering = clustering_coefficient(g);

    auto& s = report.summary;
    s.nodes = g.node_count();
    s.active_nodes = global.victims;
    s.edges = g.edge_count();
    s.cc = clustering.mean;
    s.sigma = global.sigma;
    s.beta = global.beta;

    auto& c = report.curves;
    c.cc = clustering.by_degree;
    if (includes_unweighted(opts.model)) {
        c.sigma = spread_by_degree(g, report.table, SpreadModel::Unweighted);
        s.k0 = find_k0(c.sigma, opts.min_samples);
    }
    if (includes_weighted(opts.model)) {
        c.beta = spread_by_degree(g, report.table, SpreadModel::Weighted);
        s.k0_w = find_k0(c.beta, opts.min_samples);
    }
    c.ratios = ratio_curves(c.sigma, c.beta, c.cc);

    auto as_real = [](const CriticalDegree& d) -> std::optional<double> {
        if (!d.degree) return std::nullopt;
        return static_cast<double>(*d.degree);
    };
    s.k0w_over_k0 = safe_ratio(as_real(s.k0_w), as_real(s.k0));
    s.sigma_over_cc = safe_ratio(s.sigma, s.cc);
    s.beta_over_cc = safe_ratio(s.beta, s.cc);
    s.beta_over_sigma = safe_ratio(s.beta, s.sigma);
    s.beta_over_sigma_cc = s.sigma ? safe_ratio(s.beta, *s.sigma * s.cc) : std::nullopt;
    return report;
}

namespace {

std::optional<double> real(std::size_t x) { return static_cast<double>(x); }
std::optional<double> degree_of(const CriticalDegree& d) {
    if (!d.degree) return std::nullopt;
    return static_cast<double>(*d.degree);
}
std::optional<double> flag_of(const CriticalDegree& d) {
    if (!d.degree) return std::nullopt;
    return d.interior ? 1.0 : 0.0;
}

constexpr SummaryColumn kColumns[] = {
    {"N", [](const NetworkSummary& s) { return real(s.nodes); }},
    {"M", [](const NetworkSummary& s) { return real(s.edges); }},
    {"k0", [](const NetworkSummary& s) { return degree_of(s.k0); }},
    {"k0_w", [](const NetworkSummary& s) { return degree_of(s.k0_w); }},
    {"k0w_over_k0", [](const NetworkSummary& s) { return s.k0w_over_k0; }},
    {"CC", [](const NetworkSummary& s) -> std::optional<double> { return s.cc; }},
    {"sigma", [](const NetworkSummary& s) { return s.sigma; }},
    {"beta", [](const NetworkSummary& s) { return s.beta; }},
    {"sigma_over_cc", [](const NetworkSummary& s) { return s.sigma_over_cc; }},
    {"beta_over_cc", [](const NetworkSummary& s) { return s.beta_over_cc; }},
    {"beta_over_sigma", [](const NetworkSummary& s) { return s.beta_over_sigma; }},
    {"beta_over_sigma_cc", [](const NetworkSummary& s) { return s.beta_over_sigma_cc; }},
    {"N_active", [](const NetworkSummary& s) { return real(s.active_nodes); }},
    {"N_isolated", [](const NetworkSummary& s) { return real(s.nodes - s.active_nodes); }},
    {"k0_interior", [](const NetworkSummary& s) { return flag_of(s.k0); }},
    {"k0_w_interior", [](const NetworkSummary& s) { return flag_of(s.k0_w); }},
};

}  // namespace

std::span<const SummaryColumn> summary_columns() { return kColumns; }

void check_invariants(const NetworkReport& report) {
    auto fail = [](const std::string& what) { throw InvariantError(what); };
    const auto& s = report.summary;
    auto unit = [](double x) { return x >= 0.0 && x <= 1.0; };

    if (!unit(s.cc)) fail("clustering coefficient outside [0, 1]");
    if (s.sigma && !unit(*s.sigma)) fail("sigma outside [0, 1]");
    if (s.beta && !unit(*s.beta)) fail("beta outside [0, 1]");
    if (s.sigma && s.beta && *s.beta > *s.sigma) fail("beta exceeds sigma");

    for (const auto& victim : report.table.victims) {
        if (!victim) continue;
        if (victim->unweighted_total && victim->weighted_total &&
            *victim->weighted_total > *victim->unweighted_total)
            fail("beta_v exceeds sigma_v for victim " + std::to_string(victim->victim));
        for (auto total : {victim->unweighted_total, victim->weighted_total}) {
            if (!total) continue;
            const auto k = victim->degree;
            if (*total < k || *total > k * k)
                fail("per-victim spread outside [1/k, 1] for victim " + std::to_string(victim->victim));
        }
    }
    for (const auto& [k, b] : report.curves.beta.points) {
        auto sk = report.curves.sigma.at(k);
        if (sk && b.value > *sk) fail("beta_k exceeds sigma_k at degree " + std::to_string(k));
    }

    auto check_ratio = [&](std::optional<double> field, std::optional<double> expected, const char* name) {
        if (field.has_value() != expected.has_value() || (field && !close_rel(*field, *expected, 1e-9)))
            fail(std::string("inconsistent ratio field ") + name);
    };
    check_ratio(s.sigma_over_cc, safe_ratio(s.sigma, s.cc), "sigma_over_cc");
    check_ratio(s.beta_over_cc, safe_ratio(s.beta, s.cc), "beta_over_cc");
    check_ratio(s.beta_over_sigma, safe_ratio(s.beta, s.sigma), "beta_over_sigma");
    if (s.sigma && s.beta && s.cc != 0.0 && *s.sigma != 0.0)
        check_ratio(s.beta_over_sigma_cc, *s.beta / (*s.sigma * s.cc), "beta_over_sigma_cc");
}

}  // namespace gossip
