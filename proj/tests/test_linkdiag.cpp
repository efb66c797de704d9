#include "doctest.h"
#include "qtkh/linkdiag.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

using namespace qtkh;

// Left-handed trefoil in the usual arc labelling.
static const char* kTrefoil = "X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)";

TEST_CASE("pd parsing accepts both bracket styles, commas and comments") {
    LinkDiagram a = parse_pd(kTrefoil);
    LinkDiagram b = parse_pd("# a trefoil\nX[1,4,2,5], X[3,6,4,1],\nX[5 2 6 3] # done");
    REQUIRE(a.n() == 3);
    REQUIRE(b.n() == 3);
    for (int c = 0; c < 3; ++c)
        for (int j = 0; j < 4; ++j)
            CHECK(a.crossings[c].arc[j] == b.crossings[c].arc[j]);
}

TEST_CASE("pd parsing keeps arbitrary positive labels") {
    LinkDiagram d = parse_pd("X(10,40,20,50) X(30,60,40,10) X(50,20,60,30)");
    CHECK(d.n() == 3);
    CHECK(d.arc_count == 6);
    CHECK(writhe(d) == -3);
}

TEST_CASE("pd parsing rejects malformed input") {
    CHECK_THROWS_AS(parse_pd("X(1,2,3)"), std::runtime_error);
    CHECK_THROWS_AS(parse_pd("X(1,2,3,4,5)"), std::runtime_error);
    CHECK_THROWS_AS(parse_pd("X(0,1,0,1)"), std::runtime_error);
    CHECK_THROWS_AS(parse_pd("X(1,2,2,1) X(3,4,4,3)"), std::runtime_error); // disconnected
    CHECK_THROWS_AS(parse_pd("X(1,1,1,1)"), std::runtime_error);            // label seen 4 times
    CHECK_THROWS_AS(parse_pd("X(1,2,3,4)"), std::runtime_error);            // labels seen once
    CHECK_THROWS_AS(parse_pd(""), std::runtime_error);
    CHECK_THROWS_AS(parse_pd("Y(1,1,2,2)"), std::runtime_error);
}

TEST_CASE("trefoil basics: signs, writhe, faces, components") {
    LinkDiagram d = parse_pd(kTrefoil);
    CHECK(d.arc_count == 6);
    CHECK(d.component_count == 1);
    for (int c = 0; c < 3; ++c) CHECK(d.crossings[c].sign == -1);
    CHECK(writhe(d) == -3);
    CHECK(positive_crossings(d) == 0);
    CHECK(d.face_count == 5);
}

TEST_CASE("mirror flips every crossing sign") {
    LinkDiagram d = parse_pd(kTrefoil);
    LinkDiagram m = mirror(d);
    CHECK(writhe(m) == 3);
    CHECK(m.component_count == 1);
    CHECK(m.face_count == 5);
    LinkDiagram mm = mirror(m);
    CHECK(writhe(mm) == -3);
}

TEST_CASE("one-crossing curls") {
    LinkDiagram pos = parse_pd("X(1,1,2,2)");
    CHECK(pos.n() == 1);
    CHECK(writhe(pos) == 1);
    CHECK(pos.face_count == 3);

    LinkDiagram neg = parse_pd("X(1,2,2,1)");
    CHECK(writhe(neg) == -1);

    // A-smoothing splits the positive curl into two circles, the negative
    // curl into one.
    CHECK(smoothing_circle_count(pos, State{Smoothing::A}) == 2);
    CHECK(smoothing_circle_count(neg, State{Smoothing::A}) == 1);
    CHECK(smoothing_circle_count(pos, State{Smoothing::B}) == 1);
    CHECK(smoothing_circle_count(neg, State{Smoothing::B}) == 2);
}

TEST_CASE("hopf link has two components") {
    LinkDiagram d = parse_pd("X(1,3,2,4) X(3,1,4,2)");
    CHECK(d.component_count == 2);
    CHECK(d.face_count == 4);
    int w = writhe(d);
    CHECK((w == 2 || w == -2));
}

TEST_CASE("smoothing circle counts on the trefoil") {
    LinkDiagram d = parse_pd(kTrefoil);
    State all_a(3, Smoothing::A), all_b(3, Smoothing::B);
    CHECK(smoothing_circle_count(d, all_a) == 3);
    CHECK(smoothing_circle_count(d, all_b) == 2);
    // single B at any crossing: 3-1+... each flip changes the count by 1
    for (int c = 0; c < 3; ++c) {
        State s = all_a;
        s[c] = Smoothing::B;
        CHECK(smoothing_circle_count(d, s) == 2);
    }
}

TEST_CASE("state circle count changes by exactly one per smoothing flip") {
    for (const char* pd : {kTrefoil, "X(1,1,2,2)", "X(1,3,2,4) X(3,1,4,2)"}) {
        LinkDiagram d = parse_pd(pd);
        int n = d.n();
        for (int mask = 0; mask < (1 << n); ++mask) {
            State s(n, Smoothing::A);
            for (int c = 0; c < n; ++c)
                if (mask & (1 << c)) s[c] = Smoothing::B;
            int base = smoothing_circle_count(d, s);
            for (int c = 0; c < n; ++c) {
                State t = s;
                t[c] = (t[c] == Smoothing::A) ? Smoothing::B : Smoothing::A;
                int flipped = smoothing_circle_count(d, t);
                CHECK(std::abs(flipped - base) == 1);
            }
        }
    }
}

TEST_CASE("tait graph of the trefoil") {
    LinkDiagram d = parse_pd(kTrefoil);
    TaitGraph g = tait_graph(d);
    CHECK(g.vertex_count == 2);
    CHECK(g.edges.size() == 3);
    CHECK(g.positive_count() == 3);
    CHECK(g.negative_count() == 0);
    // all three edges join the two vertices
    for (const auto& e : g.edges) CHECK(e.u != e.v);
}

TEST_CASE("tait graph shadings are complementary") {
    LinkDiagram d = parse_pd(kTrefoil);
    TaitGraph g0 = tait_graph_for_shading(d, 0);
    TaitGraph g1 = tait_graph_for_shading(d, 1);
    CHECK(g0.edges.size() == 3);
    CHECK(g1.edges.size() == 3);
    CHECK(g0.vertex_count + g1.vertex_count == d.face_count);
    for (size_t i = 0; i < 3; ++i)
        CHECK(g0.edges[i].sign == -g1.edges[i].sign);
}

TEST_CASE("tait graph of a positive curl is a loop") {
    LinkDiagram d = parse_pd("X(1,1,2,2)");
    TaitGraph g = tait_graph(d);
    CHECK(g.vertex_count == 1);
    REQUIRE(g.edges.size() == 1);
    CHECK(g.edges[0].u == g.edges[0].v);
    CHECK(g.edges[0].sign == 1);
}

TEST_CASE("unknot with no crossings") {
    LinkDiagram d = LinkDiagram::unknot();
    CHECK(d.n() == 0);
    CHECK(d.component_count == 1);
    CHECK(writhe(d) == 0);
    CHECK(smoothing_circle_count(d, State{}) == 1);
    TaitGraph g = tait_graph(d);
    CHECK(g.vertex_count == 1);
    CHECK(g.edges.empty());
}

TEST_CASE("crossing reordering keeps diagram invariants") {
    LinkDiagram d = parse_pd(kTrefoil);
    std::vector<int> perm = {2, 0, 1};
    LinkDiagram r = reorder_crossings(d, perm);
    CHECK(writhe(r) == writhe(d));
    CHECK(r.component_count == d.component_count);
    CHECK(r.face_count == d.face_count);
    CHECK(smoothing_circle_count(r, State(3, Smoothing::A)) == 3);
    TaitGraph g = tait_graph(r);
    CHECK(g.vertex_count == 2);
    CHECK(g.positive_count() == 3);
}

TEST_CASE("crossing storage order does not depend on input listing order") {
    // same crossings listed in a different order parse to an identical diagram
    for (auto [a, b] : {std::pair{kTrefoil, "X(5,2,6,3) X(1,4,2,5) X(3,6,4,1)"},
                        std::pair{"X(2,4,5,1) X(4,3,6,7) X(7,8,1,5) X(8,6,3,2)",
                                  "X(8,6,3,2) X(7,8,1,5) X(4,3,6,7) X(2,4,5,1)"}}) {
        LinkDiagram da = parse_pd(a), db = parse_pd(b);
        CHECK(to_pd_string(da) == to_pd_string(db));
        REQUIRE(da.n() == db.n());
        for (int c = 0; c < da.n(); ++c) {
            CHECK(da.crossings[c].sign == db.crossings[c].sign);
            for (int j = 0; j < 4; ++j)
                CHECK(da.crossings[c].arc[j] == db.crossings[c].arc[j]);
        }
    }
}

TEST_CASE("pd round trip through to_pd_string") {
    LinkDiagram d = parse_pd(kTrefoil);
    LinkDiagram e = parse_pd(to_pd_string(d));
    CHECK(e.n() == d.n());
    CHECK(writhe(e) == writhe(d));
    for (int c = 0; c < d.n(); ++c)
        for (int j = 0; j < 4; ++j)
            CHECK(e.crossings[c].arc[j] == d.crossings[c].arc[j]);
}

TEST_CASE("figure-eight knot from the closure of s1 s2^-1 s1 s2^-1") {
    LinkDiagram d = parse_pd("X(2,4,5,1) X(4,3,6,7) X(7,8,1,5) X(8,6,3,2)");
    CHECK(d.n() == 4);
    CHECK(d.component_count == 1);
    CHECK(writhe(d) == 0);
    CHECK(positive_crossings(d) == 2);
    // crossings are stored in canonical order (sorted by label multiset),
    // which here puts the two positive ones first
    CHECK(d.crossings[0].sign == 1);
    CHECK(d.crossings[1].sign == 1);
    CHECK(d.crossings[2].sign == -1);
    CHECK(d.crossings[3].sign == -1);
    CHECK(d.face_count == 6);
}
