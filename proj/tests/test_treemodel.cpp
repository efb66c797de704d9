#include "doctest.h"
#include "qtkh/linkdiag.hpp"
#include "qtkh/quasitree.hpp"
#include "qtkh/treemodel.hpp"

#include <map>
#include <stdexcept>

using namespace qtkh;

// triangle x-y, y-z plus doubled x-z edge; signs + + - -
static TaitGraph example_tait() {
    TaitGraph g;
    g.vertex_count = 3;
    g.edges = {{0, 1, 1}, {1, 2, 1}, {0, 2, -1}, {0, 2, -1}};
    return g;
}

TEST_CASE("example graph has five spanning trees") {
    auto masks = spanning_tree_masks(example_tait());
    CHECK(masks == std::vector<EdgeMask>({0b0011, 0b0101, 0b0110, 0b1001, 0b1010}));
    CHECK(spanning_tree_count(example_tait()) == 5);
}

TEST_CASE("tree words and gradings on the example graph") {
    TaitGraph g = example_tait();
    std::vector<int> signs;
    for (auto& e : g.edges) signs.push_back(e.sign);
    std::map<EdgeMask, std::tuple<std::string, int, int>> expect = {
        {0b0110, {"lDD'd'", -1, 1}},
        {0b1010, {"lDl'D'", 0, 1}},
        {0b0101, {"LdD'd'", 1, 1}},
        {0b1001, {"Ldl'D'", 2, 1}},
        {0b0011, {"LLd'd'", 2, 2}},
    };
    for (const SpanningTree& t : enumerate_spanning_trees(g)) {
        auto it = expect.find(t.edges);
        REQUIRE(it != expect.end());
        auto [word, u, v] = it->second;
        CHECK(activity_word_ascii(4, t.edges, t.live, signs) == word);
        CHECK(t.u == u);
        CHECK(t.v == v);
    }
}

TEST_CASE("pretty tree words carry combining macrons") {
    TaitGraph g = example_tait();
    std::vector<int> signs = {1, 1, -1, -1};
    SpanningTree t = tree_with_grading(g, 0b0011);
    CHECK(activity_word_pretty(4, t.edges, t.live, signs) ==
          "LLd̄d̄");
}

TEST_CASE("classical counts") {
    TaitGraph triangle;
    triangle.vertex_count = 3;
    triangle.edges = {{0, 1, 1}, {1, 2, 1}, {2, 0, 1}};
    CHECK(spanning_tree_masks(triangle).size() == 3);
    CHECK(spanning_tree_count(triangle) == 3);

    TaitGraph path;  // already a tree
    path.vertex_count = 3;
    path.edges = {{0, 1, 1}, {1, 2, -1}};
    CHECK(spanning_tree_masks(path) == std::vector<EdgeMask>({0b11}));
    CHECK(spanning_tree_count(path) == 1);

    TaitGraph doubled;
    doubled.vertex_count = 2;
    doubled.edges = {{0, 1, 1}, {0, 1, -1}};
    CHECK(spanning_tree_masks(doubled).size() == 2);
    CHECK(spanning_tree_count(doubled) == 2);

    TaitGraph single;
    single.vertex_count = 1;
    single.edges = {};
    CHECK(spanning_tree_masks(single) == std::vector<EdgeMask>({0}));
    CHECK(spanning_tree_count(single) == 1);
}

TEST_CASE("loops never enter spanning trees") {
    TaitGraph g;
    g.vertex_count = 2;
    g.edges = {{0, 0, 1}, {0, 1, 1}, {1, 1, -1}};
    auto masks = spanning_tree_masks(g);
    CHECK(masks == std::vector<EdgeMask>({0b010}));
    CHECK(spanning_tree_count(g) == 1);
    // loops outside the tree are live (their cycle path is empty)
    SpanningTree t = tree_with_grading(g, 0b010);
    CHECK(t.live == std::vector<char>({1, 1, 1}));
}

TEST_CASE("is_spanning_tree rejects cycles, wrong sizes, disconnection") {
    TaitGraph g = example_tait();
    CHECK(is_spanning_tree(g, 0b0011));
    CHECK_FALSE(is_spanning_tree(g, 0b1100));  // doubled edge pair: cycle
    CHECK_FALSE(is_spanning_tree(g, 0b0111));  // too many edges
    CHECK_FALSE(is_spanning_tree(g, 0b0001));  // too few
}

TEST_CASE("edge 1 is always live") {
    for (const SpanningTree& t : enumerate_spanning_trees(example_tait()))
        CHECK(t.live[0] == 1);
}

TEST_CASE("matrix-tree matches enumeration on diagram Tait graphs") {
    for (const char* pd : {"X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)",
                           "X(1,1,2,2)",
                           "X(1,3,2,4) X(3,1,4,2)",
                           "X(2,4,5,1) X(4,3,6,7) X(7,8,1,5) X(8,6,3,2)"}) {
        TaitGraph g = tait_graph(parse_pd(pd));
        CHECK(spanning_tree_count(g) ==
              static_cast<long long>(spanning_tree_masks(g).size()));
    }
}
