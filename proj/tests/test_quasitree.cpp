#include "doctest.h"
#include "qtkh/linkdiag.hpp"
#include "qtkh/quasitree.hpp"
#include "qtkh/ribbon.hpp"

#include <map>
#include <set>
#include <stdexcept>

using namespace qtkh;

// one-vertex, four-edge graph: next-mark map (15724863), signs ++--
static RibbonGraph example_graph() {
    return ribbon_from_sigma0({5, 4, 1, 8, 7, 3, 2, 6}, {1, 1, -1, -1});
}

TEST_CASE("example graph has exactly five quasi-trees") {
    auto qts = enumerate_quasitrees(example_graph());
    REQUIRE(qts.size() == 5);
    std::vector<EdgeMask> masks;
    for (auto& q : qts) masks.push_back(q.edges);
    CHECK(masks == std::vector<EdgeMask>({0b0000, 0b0101, 0b0110, 0b1001, 0b1010}));
}

TEST_CASE("example graph chord walks") {
    RibbonGraph rg = example_graph();
    ChordDiagram cd = chord_diagram(rg, 0b0101);  // edges {1,3}
    // marks 1-based: 1,4,8,6,7,2,5,3
    CHECK(cd.walk == std::vector<int>({0, 3, 7, 5, 6, 1, 4, 2}));
    ChordDiagram empty = chord_diagram(rg, 0);
    CHECK(empty.walk == std::vector<int>({0, 4, 6, 1, 3, 7, 5, 2}));
    // non-quasi-tree masks are rejected
    CHECK_THROWS_AS(chord_diagram(rg, 0b0001), std::runtime_error);
    CHECK_THROWS_AS(chord_diagram(rg, 0b1111), std::runtime_error);
}

TEST_CASE("example graph activity words and gradings") {
    RibbonGraph rg = example_graph();
    std::map<EdgeMask, std::pair<std::string, Bigrading>> expect = {
        {0b0101, {"LdDd", {-1, -1}}},
        {0b1001, {"LdlD", {0, -1}}},
        {0b0110, {"lDDd", {1, -1}}},
        {0b1010, {"lDlD", {2, -1}}},
        {0b0000, {"lldd", {2, 0}}},
    };
    for (const QuasiTree& q : enumerate_quasitrees(rg)) {
        auto it = expect.find(q.edges);
        REQUIRE(it != expect.end());
        CHECK(activity_word_ascii(rg.n, q.edges, q.live) == it->second.first);
        CHECK(q.grading == it->second.second);
    }
}

TEST_CASE("pretty words use the script ell") {
    RibbonGraph rg = example_graph();
    for (const QuasiTree& q : enumerate_quasitrees(rg)) {
        if (q.edges == 0b0000)
            CHECK(activity_word_pretty(rg.n, q.edges, q.live) ==
                  "ℓℓdd");
        if (q.edges == 0b1001)
            CHECK(activity_word_pretty(rg.n, q.edges, q.live) ==
                  "LdℓD");
    }
}

TEST_CASE("genus: chord-rank route equals Euler route") {
    RibbonGraph rg = example_graph();
    for (const QuasiTree& q : enumerate_quasitrees(rg)) {
        ChordDiagram cd = chord_diagram(rg, q.edges);
        CHECK(genus_from_chords(cd, q.edges) == q.genus);
    }
    CHECK(genus_from_chords(chord_diagram(rg, 0b0101), 0b0101) == 1);
    CHECK(genus_from_chords(chord_diagram(rg, 0), 0) == 0);
}

TEST_CASE("tree partners on the example graph") {
    RibbonGraph rg = example_graph();
    std::map<EdgeMask, EdgeMask> expect = {
        {0b0101, 0b0110},  // {1,3} <-> {2,3}
        {0b1001, 0b1010},  // {1,4} <-> {2,4}
        {0b0110, 0b0101},  // {2,3} <-> {1,3}
        {0b1010, 0b1001},  // {2,4} <-> {1,4}
        {0b0000, 0b0011},  // {}    <-> {1,2}
    };
    for (auto [q, t] : expect) {
        CHECK(tree_from_quasitree(rg, q) == t);
        CHECK(quasitree_from_tree(rg, t) == q);
        CHECK(quasitree_from_tree(rg, tree_from_quasitree(rg, q)) == q);
    }
}

TEST_CASE("tiny graphs: bridge and loop") {
    // bridge: two vertices joined by one edge; sigma0 fixes both marks
    RibbonGraph bridge = ribbon_from_sigma0({1, 2});
    REQUIRE(bridge.vertex_count == 2);
    auto qb = enumerate_quasitrees(bridge);
    REQUIRE(qb.size() == 1);
    CHECK(qb[0].edges == 0b1);
    CHECK(qb[0].genus == 0);
    CHECK(chord_diagram(bridge, 0b1).walk == std::vector<int>({0, 1}));

    // loop: one vertex, one edge
    RibbonGraph loop = ribbon_from_sigma0({2, 1});
    REQUIRE(loop.vertex_count == 1);
    auto ql = enumerate_quasitrees(loop);
    REQUIRE(ql.size() == 1);
    CHECK(ql[0].edges == 0);
    CHECK(chord_diagram(loop, 0).walk == std::vector<int>({0, 1}));
}

TEST_CASE("quasi-trees of diagram ribbon graphs match genus-zero trees") {
    LinkDiagram d = parse_pd("X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)");
    RibbonGraph rg = ribbon_from_diagram(d);
    REQUIRE(rg.genus() == 0);
    auto qts = enumerate_quasitrees(rg);
    CHECK(qts.size() == 3);  // triangle graph: three spanning trees
    for (auto& q : qts) {
        CHECK(q.genus == 0);
        CHECK(q.grading.v == 0);
    }
}

TEST_CASE("first chord is always live") {
    for (EdgeMask m : {EdgeMask(0b0101), EdgeMask(0b1001), EdgeMask(0b0110),
                       EdgeMask(0b1010), EdgeMask(0b0000)}) {
        ChordDiagram cd = chord_diagram(example_graph(), m);
        CHECK(cd.live_chords()[0] == 1);
    }
}

TEST_CASE("enumeration bound is enforced") {
    CHECK_THROWS_AS(enumerate_quasitrees(example_graph(), 3), std::runtime_error);
    CHECK_NOTHROW(enumerate_quasitrees(example_graph(), 4));
}

TEST_CASE("mark swaps keep gradings and words") {
    RibbonGraph rg = example_graph();
    auto base = enumerate_quasitrees(rg);
    for (EdgeMask swaps = 1; swaps < 16; ++swaps) {
        RibbonGraph sw = rg.with_swapped_marks(swaps);
        auto qts = enumerate_quasitrees(sw);
        REQUIRE(qts.size() == base.size());
        for (size_t k = 0; k < qts.size(); ++k) {
            CHECK(qts[k].edges == base[k].edges);
            CHECK(qts[k].grading == base[k].grading);
            CHECK(qts[k].live == base[k].live);
        }
    }
}
