#ifndef GOSSIP_INGEST_HPP_
#define GOSSIP_INGEST_HPP_

#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "gossip/graph.hpp"

namespace gossip {

// Text formats
// ------------
// Edge list:  "<label><sep><label><sep><weight>" per line. A missing weight
//             means 1. '#' starts a comment line; "#@node <label>" declares a
//             node so that it survives even without edges.
// Bipartite:  "<group-id><sep><member-label>" per line. Lines of one group
//             need not be adjacent.
// <sep> is a run of spaces/tabs or a single comma. With Separator::Auto the
// first data line decides; a file that mixes the two is rejected.

enum class Separator { Auto, Whitespace, Comma };

Separator parse_separator(std::string_view name);

struct EdgeListFile {
    std::vector<EdgeRecord> records;
    std::vector<std::string> declared_nodes;
    Separator separator = Separator::Auto;  // resolved, unless the file had no data lines
};

/// Parses edge-list text. Throws InputError with the offending line number
/// for malformed lines, non-positive or non-numeric weights and self-loops.
EdgeListFile parse_edge_records(std::string_view text, Separator sep = Separator::Auto);

WeightedGraph parse_edge_list(std::string_view text, Separator sep = Separator::Auto);
WeightedGraph read_edge_list(const std::filesystem::path& path, Separator sep = Separator::Auto);

/// Canonical edge list: declared isolated nodes first, then one line per
/// edge sorted by (smaller label, larger label) with 17 significant digits.
void write_edge_list(std::ostream& out, const WeightedGraph& g, char sep = ' ');
std::string format_edge_list(const WeightedGraph& g, char sep = ' ');

/// Groups of co-occurring members (papers and their authors, articles and
/// the people they mention). Members are unique within a group and keep
/// first-appearance order.
class BipartiteEvents {
public:
    void add(const std::string& group, const std::string& member);

    std::size_t group_count() const noexcept { return groups_.size(); }
    const std::vector<std::string>& members(std::size_t group) const { return groups_.at(group).members; }
    const std::string& group_id(std::size_t group) const { return groups_.at(group).id; }
    /// All member labels in first-appearance order.
    const std::vector<std::string>& member_labels() const noexcept { return labels_; }

private:
    struct Group {
        std::string id;
        std::vector<std::string> members;
    };
    std::vector<Group> groups_;
    std::vector<std::string> labels_;
    std::unordered_map<std::string, std::size_t> group_index_;
    std::unordered_set<std::string> seen_member_;
};

BipartiteEvents parse_bipartite(std::string_view text, Separator sep = Separator::Auto);
BipartiteEvents read_bipartite(const std::filesystem::path& path, Separator sep = Separator::Auto);

/// Each pair in a group gains weight 1 (co-appearance count).
WeightedGraph project_count(const BipartiteEvents& events);

/// Each pair in a group of n members gains 1 / (n - 1), so every member's
/// strength grows by exactly 1 per group it belongs to (n >= 2).
WeightedGraph project_newman(const BipartiteEvents& events);

std::string read_text_file(const std::filesystem::path& path);

}  // namespace gossip

#endif  // GOSSIP_INGEST_HPP_
