#include "gossip/report.hpp"

#include <charconv>
#include <set>
#include <sstream>

namespace gossip {

using ojson = nlohmann::ordered_json;

std::string format_real(double x) {
    char buf[64];
    const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, x);
    return std::string(buf, ptr);
}

std::string format_cell(std::optional<double> x) { return x ? format_real(*x) : std::string(); }

namespace {

ojson maybe(std::optional<double> x) { return x ? ojson(*x) : ojson(nullptr); }

ojson critical_json(const CriticalDegree& d) {
    if (!d.degree) return ojson{{"degree", nullptr}, {"interior", nullptr}};
    return ojson{{"degree", *d.degree}, {"interior", d.interior}};
}

std::string csv_quote(const std::string& s) {
    if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + '"';
}

void write_summary_header(std::ostream& out) {
    bool first = true;
    for (const auto& c : summary_columns()) {
        out << (first ? "" : ",") << c.name;
        first = false;
    }
}

void write_summary_cells(std::ostream& out, const NetworkSummary& s) {
    bool first = true;
    for (const auto& c : summary_columns()) {
        out << (first ? "" : ",") << format_cell(c.get(s));
        first = false;
    }
}

}  // namespace

std::string summary_csv(const NetworkSummary& s) {
    std::ostringstream out;
    write_summary_header(out);
    out << '\n';
    write_summary_cells(out, s);
    out << '\n';
    return std::move(out).str();
}

ojson summary_json(const NetworkSummary& s) {
    ojson j;
    j["N"] = s.nodes;
    j["M"] = s.edges;
    j["k0"] = critical_json(s.k0);
    j["k0_w"] = critical_json(s.k0_w);
    j["k0w_over_k0"] = maybe(s.k0w_over_k0);
    j["CC"] = s.cc;
    j["sigma"] = maybe(s.sigma);
    j["beta"] = maybe(s.beta);
    j["sigma_over_cc"] = maybe(s.sigma_over_cc);
    j["beta_over_cc"] = maybe(s.beta_over_cc);
    j["beta_over_sigma"] = maybe(s.beta_over_sigma);
    j["beta_over_sigma_cc"] = maybe(s.beta_over_sigma_cc);
    j["N_active"] = s.active_nodes;
    j["N_isolated"] = s.nodes - s.active_nodes;
    return j;
}

namespace {

std::set<std::size_t> all_degrees(const DegreeCurves& c) {
    std::set<std::size_t> ks;
    for (const auto* curve : {&c.sigma, &c.beta, &c.cc})
        for (const auto& [k, p] : curve->points) ks.insert(k);
    return ks;
}

std::size_t count_at(const DegreeCurves& c, std::size_t k) {
    for (const auto* curve : {&c.cc, &c.sigma, &c.beta}) {
        auto it = curve->points.find(k);
        if (it != curve->points.end()) return it->second.count;
    }
    return 0;
}

}  // namespace

std::string curves_csv(const DegreeCurves& c) {
    std::ostringstream out;
    out << "k,count,sigma_k,beta_k,cc_k,beta_over_sigma_k,beta_over_sigma_cc_k\n";
    for (auto k : all_degrees(c)) {
        out << k << ',' << count_at(c, k) << ',' << format_cell(c.sigma.at(k)) << ','
            << format_cell(c.beta.at(k)) << ',' << format_cell(c.cc.at(k)) << ','
            << format_cell(c.ratios.beta_over_sigma.at(k)) << ','
            << format_cell(c.ratios.beta_over_sigma_cc.at(k)) << '\n';
    }
    return std::move(out).str();
}

ojson curves_json(const DegreeCurves& c) {
    ojson rows = ojson::array();
    for (auto k : all_degrees(c)) {
        rows.push_back(ojson{{"k", k},
                             {"count", count_at(c, k)},
                             {"sigma_k", maybe(c.sigma.at(k))},
                             {"beta_k", maybe(c.beta.at(k))},
                             {"cc_k", maybe(c.cc.at(k))},
                             {"beta_over_sigma_k", maybe(c.ratios.beta_over_sigma.at(k))},
                             {"beta_over_sigma_cc_k", maybe(c.ratios.beta_over_sigma_cc.at(k))}});
    }
    return rows;
}

std::string victims_csv(const WeightedGraph& g, const SpreadTable& table) {
    std::ostringstream out;
    out << "label,k,sigma_v,beta_v\n";
    for (NodeId v = 0; v < g.node_count(); ++v) {
        const auto& spread = table.victims.at(v);
        out << csv_quote(g.label(v)) << ',' << g.degree(v) << ','
            << format_cell(spread ? spread->sigma() : std::nullopt) << ','
            << format_cell(spread ? spread->beta() : std::nullopt) << '\n';
    }
    return std::move(out).str();
}

std::string node_index_csv(const WeightedGraph& g) {
    std::ostringstream out;
    out << "index,label\n";
    for (NodeId v = 0; v < g.node_count(); ++v) out << v << ',' << csv_quote(g.label(v)) << '\n';
    return std::move(out).str();
}

ojson analysis_json(const NetworkReport& report, const AnalysisMeta& meta) {
    ojson j;
    j["schema_version"] = kSchemaVersion;
    j["input"] = meta.input;
    j["model"] = std::string(to_string(meta.model));
    j["min_samples"] = meta.min_samples;
    j["summary"] = summary_json(report.summary);
    j["curves"] = curves_json(report.curves);
    return j;
}

ojson generator_config_json(const GeneratorConfig& cfg) {
    return ojson{{"model", std::string(to_string(cfg.model))},
                 {"N", cfg.N},
                 {"p", cfg.p},
                 {"m0", cfg.m0},
                 {"m", cfg.m},
                 {"k", cfg.k},
                 {"weight_mean", cfg.weight_mean},
                 {"weight_stddev", cfg.weight_stddev},
                 {"weight_mode", std::string(to_string(cfg.weight_mode))},
                 {"seed", cfg.seed},
                 {"realizations", cfg.realizations}};
}

std::string ensemble_csv(const EnsembleSummary& e) {
    std::ostringstream out;
    out << "realization,seed,";
    write_summary_header(out);
    out << '\n';
    for (std::size_t i = 0; i < e.realizations.size(); ++i) {
        out << i << ',' << e.seeds[i] << ',';
        write_summary_cells(out, e.realizations[i]);
        out << '\n';
    }
    for (const auto* stat : {"mean", "stddev"}) {
        out << stat << ',';
        for (const auto& c : summary_columns()) {
            const auto& f = e.field(c.name);
            out << ',' << format_cell(std::string_view(stat) == "mean" ? f.mean : f.stddev);
        }
        out << '\n';
    }
    return std::move(out).str();
}

std::string ensemble_curves_csv(const EnsembleSummary& e) {
    std::set<std::size_t> ks;
    for (const auto* curve : {&e.sigma_k, &e.beta_k, &e.cc_k})
        for (const auto& [k, p] : *curve) ks.insert(k);
    auto cell = [](const EnsembleCurve& c, std::size_t k) {
        auto it = c.find(k);
        return it == c.end() ? std::string() : format_real(it->second.mean);
    };
    std::ostringstream out;
    out << "k,realizations,vertices,sigma_k,beta_k,cc_k\n";
    for (auto k : ks) {
        const auto& ref = e.cc_k.contains(k) ? e.cc_k.at(k) : e.sigma_k.at(k);
        out << k << ',' << ref.realizations << ',' << ref.vertices << ',' << cell(e.sigma_k, k) << ','
            << cell(e.beta_k, k) << ',' << cell(e.cc_k, k) << '\n';
    }
    return std::move(out).str();
}

ojson ensemble_json(const EnsembleSummary& e) {
    ojson j;
    j["schema_version"] = kSchemaVersion;
    j["config"] = generator_config_json(e.config);
    j["seeds"] = e.seeds;
    ojson stats;
    for (const auto& c : summary_columns()) {
        const auto& f = e.field(c.name);
        stats[std::string(c.name)] = ojson{{"mean", maybe(f.mean)}, {"stddev", maybe(f.stddev)}, {"samples", f.samples}};
    }
    j["fields"] = stats;
    j["k0_of_mean_curve"] = critical_json(e.k0_of_mean_curve);
    j["k0_w_of_mean_curve"] = critical_json(e.k0_w_of_mean_curve);
    ojson reals = ojson::array();
    for (const auto& s : e.realizations) reals.push_back(summary_json(s));
    j["realizations"] = reals;
    auto curve_json = [](const EnsembleCurve& c) {
        ojson rows = ojson::array();
        for (const auto& [k, p] : c)
            rows.push_back(ojson{{"k", k}, {"mean", p.mean}, {"realizations", p.realizations}, {"vertices", p.vertices}});
        return rows;
    };
    j["mean_curves"] = ojson{{"sigma_k", curve_json(e.sigma_k)}, {"beta_k", curve_json(e.beta_k)}, {"cc_k", curve_json(e.cc_k)}};
    return j;
}

}  // namespace gossip
