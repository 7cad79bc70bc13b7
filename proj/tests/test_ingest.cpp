#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <map>
#include <random>
#include <set>

#include "gossip/ingest.hpp"

using namespace gossip;

namespace {

std::size_t error_line(const std::string& text, Separator sep = Separator::Auto) {
    try {
        parse_edge_list(text, sep);
    } catch (const InputError& e) {
        return e.line();
    }
    return 0;
}

}  // namespace

TEST_CASE("edge list basics") {
    const auto g = parse_edge_list("a b 1.5\n# note\nb c 2\n");
    CHECK(g.node_count() == 3);
    CHECK(g.edge_count() == 2);
    CHECK(*g.weight(g.index_of("a"), g.index_of("b")) == 1.5);
}

TEST_CASE("record count equals data line count") {
    const auto file = parse_edge_records("# header\n\na b 1\n  \nb c 2\r\n#x\nc d\n");
    CHECK(file.records.size() == 3);
    CHECK(file.records[2].weight == 1.0);
    CHECK(file.separator == Separator::Whitespace);
}

TEST_CASE("separators") {
    const auto comma = parse_edge_records("Jean Valjean, Javert, 17\nJavert,Fantine,3\n");
    CHECK(comma.separator == Separator::Comma);
    CHECK(comma.records[0].source == "Jean Valjean");
    CHECK(comma.records[1].weight == 3.0);

    const auto tabs = parse_edge_list("a\tb\t2\nb \t c 4\n");
    CHECK(tabs.edge_count() == 2);

    // Auto-detection locks onto the first data line.
    CHECK(error_line("a b 1\nb,c,2\n") == 2);
    CHECK(error_line("a,b,1\nb c 2\n") == 2);
    CHECK(error_line("a,b,1\n", Separator::Whitespace) == 1);
    CHECK(error_line("a b 1\n", Separator::Comma) == 1);
}

TEST_CASE("CRLF and LF give the same graph") {
    const auto lf = parse_edge_list("a b 1\nb c 2\n");
    const auto crlf = parse_edge_list("a b 1\r\nb c 2\r\n");
    CHECK(format_edge_list(lf) == format_edge_list(crlf));
}

TEST_CASE("malformed lines report their line number") {
    CHECK(error_line("a b 1\na b -1\n") == 2);
    CHECK(error_line("# c\na b 0\n") == 2);
    CHECK(error_line("a b one\n") == 1);
    CHECK(error_line("a b 1 2\n") == 1);
    CHECK(error_line("a\n") == 1);
    CHECK(error_line("a a 1\n") == 1);
    CHECK(error_line("a b 1.5x\n") == 1);
    CHECK(error_line("a b inf\n") == 1);
    CHECK(error_line("a b nan\n") == 1);
    CHECK(error_line("x,,2\n") == 1);
}

TEST_CASE("weights parse independently of locale conventions") {
    CHECK(error_line("a b 1,5\n", Separator::Whitespace) == 1);  // comma is never a decimal mark
    CHECK(error_line("a,b,1,5\n") == 1);
    const auto g = parse_edge_list("a b 2.5e-1\n");
    CHECK(*g.weight(0, 1) == 0.25);
}

TEST_CASE("node declarations") {
    const auto g = parse_edge_list("#@node hermit\n# ordinary comment\na b 1\n");
    CHECK(g.node_count() == 3);
    CHECK(g.degree(g.index_of("hermit")) == 0);
    const auto text = format_edge_list(g);
    CHECK(text == "#@node hermit\na b 1\n");
    CHECK(error_line("#@node\n") == 1);
}

TEST_CASE("canonical export sorts by label pair") {
    const auto g = parse_edge_list("z a 1\nc b 0.1\nb a 3\n");
    CHECK(format_edge_list(g) == "a b 3\na z 1\nb c 0.10000000000000001\n");
    CHECK(format_edge_list(g, ',') == "a,b,3\na,z,1\nb,c,0.10000000000000001\n");
    const auto spaced = parse_edge_list("Jean Valjean,Javert,1\n");
    CHECK_THROWS_AS(format_edge_list(spaced), InputError);
}

TEST_CASE("bundled Les Miserables file") {
    const auto g = read_edge_list(std::filesystem::path(GOSSIP_DATA_DIR) / "lesmis.edges");
    CHECK(g.node_count() == 77);
    CHECK(g.edge_count() == 254);
    CHECK_THROWS_AS(read_edge_list("/nonexistent/file.edges"), InputError);
}

TEST_CASE("bipartite parsing") {
    const auto events = parse_bipartite("p1 A\np1 B\np2 A\np1 A\np1 C\n");
    CHECK(events.group_count() == 2);
    CHECK(events.members(0) == std::vector<std::string>{"A", "B", "C"});  // duplicate A collapsed
    CHECK(events.members(1) == std::vector<std::string>{"A"});
    CHECK(events.member_labels() == std::vector<std::string>{"A", "B", "C"});
    CHECK_THROWS_AS(parse_bipartite("p1 A B\n"), InputError);
    CHECK(parse_bipartite("").group_count() == 0);
}

TEST_CASE("co-appearance count projection") {
    const auto one = project_count(parse_bipartite("art A\nart B\nart C\n"));
    CHECK(one.edge_count() == 3);
    for (const auto& e : one.edges()) CHECK(e.weight == 1.0);

    const auto twice = project_count(parse_bipartite("x A\nx B\ny A\ny B\n"));
    CHECK(twice.edge_count() == 1);
    CHECK(*twice.weight(0, 1) == 2.0);

    const auto alone = project_count(parse_bipartite("solo A\n"));
    CHECK(alone.node_count() == 1);
    CHECK(alone.edge_count() == 0);
}

TEST_CASE("Newman projection") {
    const auto three = project_newman(parse_bipartite("p A\np B\np C\n"));
    for (const auto& e : three.edges()) CHECK(e.weight == 0.5);
    const auto two = project_newman(parse_bipartite("p A\np B\n"));
    CHECK(*two.weight(0, 1) == 1.0);

    // A wrote two three-author papers with disjoint coauthors.
    const auto g = project_newman(parse_bipartite("p A\np B\np C\nq A\nq D\nq E\n"));
    CHECK(g.strength(g.index_of("A")) == 2.0);
    CHECK(g.strength(g.index_of("B")) == 1.0);
}

TEST_CASE("projection accounting identities on random events") {
    std::mt19937 rng(11);
    for (int trial = 0; trial < 30; ++trial) {
        std::string text;
        std::map<std::string, std::size_t> papers_of;  // member -> groups with >= 2 members
        std::size_t pair_total = 0;
        double newman_total = 0.0;
        const int groups = 1 + static_cast<int>(rng() % 15);
        for (int gi = 0; gi < groups; ++gi) {
            std::set<std::string> members;
            const int size = 1 + static_cast<int>(rng() % 6);
            for (int m = 0; m < size; ++m) members.insert("m" + std::to_string(rng() % 20));
            for (const auto& m : members) text += "g" + std::to_string(gi) + " " + m + "\n";
            const auto n = members.size();
            pair_total += n * (n - 1) / 2;
            if (n >= 2) {
                newman_total += static_cast<double>(n) / 2.0;
                for (const auto& m : members) ++papers_of[m];
            }
        }
        const auto events = parse_bipartite(text);
        const auto count = project_count(events);
        const auto newman = project_newman(events);

        // Same topology, different weights.
        const auto ce = count.edges();
        const auto ne = newman.edges();
        REQUIRE(ce.size() == ne.size());
        double count_sum = 0.0, newman_sum = 0.0;
        for (std::size_t i = 0; i < ce.size(); ++i) {
            CHECK(ce[i].source == ne[i].source);
            CHECK(ce[i].target == ne[i].target);
            CHECK(ce[i].weight == std::floor(ce[i].weight));
            CHECK(ne[i].weight > 0.0);
            count_sum += ce[i].weight;
            newman_sum += ne[i].weight;
        }
        // Each group adds C(n,2) to the count total and n/2 to the Newman total.
        CHECK(count_sum == static_cast<double>(pair_total));
        CHECK(newman_sum == doctest::Approx(newman_total).epsilon(1e-12));
        for (const auto& [m, papers] : papers_of)
            CHECK(newman.strength(newman.index_of(m)) == doctest::Approx(static_cast<double>(papers)).epsilon(1e-12));
    }
}
