#include "gossip/ingest.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <fstream>
#include <limits>
#include <ostream>
#include <sstream>
#include <tuple>

namespace gossip {

namespace {

constexpr std::string_view kBlank = " \t";
constexpr std::string_view kNodeDirective = "#@node";

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(kBlank);
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(kBlank);
    return s.substr(first, last - first + 1);
}

// Calls fn(line_number, line) for every line, with any trailing '\r' removed.
template <typename Fn>
void for_each_line(std::string_view text, Fn&& fn) {
    std::size_t number = 0;
    while (!text.empty()) {
        const auto end = text.find('\n');
        auto line = text.substr(0, end);
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        fn(++number, line);
        if (end == std::string_view::npos) break;
        text.remove_prefix(end + 1);
    }
}

class FieldSplitter {
public:
    explicit FieldSplitter(Separator sep) : sep_(sep) {}

    Separator separator() const { return sep_; }

    std::vector<std::string_view> split(std::string_view line, std::size_t number) {
        if (sep_ == Separator::Auto)
            sep_ = line.find(',') != std::string_view::npos ? Separator::Comma : Separator::Whitespace;

        std::vector<std::string_view> fields;
        if (sep_ == Separator::Comma) {
            while (true) {
                const auto comma = line.find(',');
                fields.push_back(trim(line.substr(0, comma)));
                if (comma == std::string_view::npos) break;
                line.remove_prefix(comma + 1);
            }
            return fields;
        }
        if (line.find(',') != std::string_view::npos)
            throw InputError("ambiguous separator: comma in a whitespace-separated file", number);
        while (true) {
            const auto start = line.find_first_not_of(kBlank);
            if (start == std::string_view::npos) break;
            line.remove_prefix(start);
            const auto stop = line.find_first_of(kBlank);
            fields.push_back(line.substr(0, stop));
            if (stop == std::string_view::npos) break;
            line.remove_prefix(stop);
        }
        return fields;
    }

private:
    Separator sep_;
};

bool is_skippable(std::string_view line) {
    const auto t = trim(line);
    return t.empty() || t.front() == '#';
}

double parse_weight(std::string_view token, std::size_t number) {
    double w = 0.0;
    const auto* first = token.data();
    const auto* last = token.data() + token.size();
    const auto [ptr, ec] = std::from_chars(first, last, w);
    if (ec != std::errc() || ptr != last || token.empty())
        throw InputError("non-numeric weight '" + std::string(token) + "'", number);
    if (!(w > 0.0) || w == std::numeric_limits<double>::infinity())
        throw InputError("edge weight must be positive and finite, got '" + std::string(token) + "'", number);
    return w;
}

std::string format_weight(double w) {
    std::array<char, 64> buf{};
    const auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), w, std::chars_format::general, 17);
    return std::string(buf.data(), ptr);
}

}  // namespace

Separator parse_separator(std::string_view name) {
    if (name == "auto") return Separator::Auto;
    if (name == "whitespace" || name == "space" || name == "tab") return Separator::Whitespace;
    if (name == "comma") return Separator::Comma;
    throw std::invalid_argument("unknown separator '" + std::string(name) + "'");
}

std::string read_text_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot open '" + path.string() + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return std::move(buf).str();
}

EdgeListFile parse_edge_records(std::string_view text, Separator sep) {
    EdgeListFile file;
    FieldSplitter splitter(sep);
    for_each_line(text, [&](std::size_t number, std::string_view line) {
        const auto t = trim(line);
        if (t.starts_with(kNodeDirective) &&
            (t.size() == kNodeDirective.size() || kBlank.find(t[kNodeDirective.size()]) != std::string_view::npos)) {
            const auto label = trim(t.substr(kNodeDirective.size()));
            if (label.empty()) throw InputError("node declaration without a label", number);
            file.declared_nodes.emplace_back(label);
            return;
        }
        if (is_skippable(line)) return;

        const auto fields = splitter.split(line, number);
        if (fields.size() != 2 && fields.size() != 3)
            throw InputError("expected '<node> <node> [weight]', found " + std::to_string(fields.size()) +
                                 " fields",
                             number);
        if (fields[0].empty() || fields[1].empty()) throw InputError("empty node label", number);
        if (fields[0] == fields[1]) throw InputError("self-loop on node '" + std::string(fields[0]) + "'", number);
        const double w = fields.size() == 3 ? parse_weight(fields[2], number) : 1.0;
        file.records.push_back({std::string(fields[0]), std::string(fields[1]), w});
    });
    file.separator = splitter.separator();
    return file;
}

WeightedGraph parse_edge_list(std::string_view text, Separator sep) {
    const auto file = parse_edge_records(text, sep);
    return WeightedGraph::from_records(file.records, file.declared_nodes);
}

WeightedGraph read_edge_list(const std::filesystem::path& path, Separator sep) {
    return parse_edge_list(read_text_file(path), sep);
}

void write_edge_list(std::ostream& out, const WeightedGraph& g, char sep) {
    auto checked = [&](const std::string& label) -> const std::string& {
        if (label.find(sep) != std::string::npos || label.find('\n') != std::string::npos ||
            (sep == ' ' && label.find('\t') != std::string::npos))
            throw InputError("label '" + label + "' contains the output separator");
        return label;
    };

    std::vector<NodeId> isolated;
    for (NodeId i = 0; i < g.node_count(); ++i)
        if (g.degree(i) == 0) isolated.push_back(i);
    std::sort(isolated.begin(), isolated.end(), [&](NodeId a, NodeId b) { return g.label(a) < g.label(b); });
    for (auto i : isolated) out << kNodeDirective << ' ' << checked(g.label(i)) << '\n';

    struct Row {
        const std::string* lo;
        const std::string* hi;
        double w;
    };
    std::vector<Row> rows;
    rows.reserve(g.edge_count());
    for (const auto& e : g.edges()) {
        const auto* a = &g.label(e.source);
        const auto* b = &g.label(e.target);
        if (*b < *a) std::swap(a, b);
        rows.push_back({a, b, e.weight});
    }
    std::sort(rows.begin(), rows.end(),
              [](const Row& x, const Row& y) { return std::tie(*x.lo, *x.hi) < std::tie(*y.lo, *y.hi); });
    for (const auto& r : rows)
        out << checked(*r.lo) << sep << checked(*r.hi) << sep << format_weight(r.w) << '\n';
}

std::string format_edge_list(const WeightedGraph& g, char sep) {
    std::ostringstream out;
    write_edge_list(out, g, sep);
    return std::move(out).str();
}

void BipartiteEvents::add(const std::string& group, const std::string& member) {
    auto [it, inserted] = group_index_.try_emplace(group, groups_.size());
    if (inserted) groups_.push_back({group, {}});
    auto& members = groups_[it->second].members;
    if (std::find(members.begin(), members.end(), member) == members.end()) members.push_back(member);
    if (seen_member_.insert(member).second) labels_.push_back(member);
}

BipartiteEvents parse_bipartite(std::string_view text, Separator sep) {
    BipartiteEvents events;
    FieldSplitter splitter(sep);
    for_each_line(text, [&](std::size_t number, std::string_view line) {
        if (is_skippable(line)) return;
        const auto fields = splitter.split(line, number);
        if (fields.size() != 2)
            throw InputError("expected '<group> <member>', found " + std::to_string(fields.size()) + " fields",
                             number);
        if (fields[0].empty() || fields[1].empty()) throw InputError("empty group or member label", number);
        events.add(std::string(fields[0]), std::string(fields[1]));
    });
    return events;
}

BipartiteEvents read_bipartite(const std::filesystem::path& path, Separator sep) {
    return parse_bipartite(read_text_file(path), sep);
}

namespace {

template <typename PairWeight>
WeightedGraph project(const BipartiteEvents& events, PairWeight pair_weight) {
    std::vector<EdgeRecord> records;
    for (std::size_t gi = 0; gi < events.group_count(); ++gi) {
        const auto& members = events.members(gi);
        if (members.size() < 2) continue;
        const double w = pair_weight(members.size());
        for (std::size_t a = 0; a < members.size(); ++a)
            for (std::size_t b = a + 1; b < members.size(); ++b) records.push_back({members[a], members[b], w});
    }
    return WeightedGraph::from_records(records, events.member_labels());
}

}  // namespace

WeightedGraph project_count(const BipartiteEvents& events) {
    return project(events, [](std::size_t) { return 1.0; });
}

WeightedGraph project_newman(const BipartiteEvents& events) {
    return project(events, [](std::size_t n) { return 1.0 / static_cast<double>(n - 1); });
}

}  // namespace gossip
