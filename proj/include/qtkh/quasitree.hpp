#pragma once
// Spanning quasi-trees of a ribbon graph: one-face spanning subgraphs, their
// boundary-walk chord diagrams, live/dead activities and the (u,v) bigrading,
// plus the sign-driven exchange with spanning trees of the Tait graph.

#include <array>
#include <string>
#include <vector>

#include "qtkh/ribbon.hpp"

namespace qtkh {

struct Bigrading {
    int u = 0;
    int v = 0;
};
inline bool operator==(const Bigrading& a, const Bigrading& b) {
    return a.u == b.u && a.v == b.v;
}
inline bool operator<(const Bigrading& a, const Bigrading& b) {
    return a.u != b.u ? a.u < b.u : a.v < b.v;
}

// Single boundary walk of a quasi-tree.  walk lists the 0-based marks in
// visit order; chord c (= edge c) occupies the two positions span[c].
struct ChordDiagram {
    int n = 0;
    std::vector<int> walk;
    std::vector<std::array<int, 2>> span;  // sorted position pairs

    // endpoints alternate around the circle
    bool interleaved(int i, int j) const;
    // chord live iff it interleaves no lower-indexed chord
    std::vector<char> live_chords() const;
};

// Walks the subgraph boundary from mark 0; throws if it is not a single
// orbit (i.e. the mask is not a quasi-tree).
ChordDiagram chord_diagram(const RibbonGraph& rg, EdgeMask quasitree);

// Half the GF(2) rank of the interleaving matrix of the in-subgraph chords.
// Agrees with the Euler-formula genus (1 - V + |Q|)/2; kept as a second
// route for cross-checking.
int genus_from_chords(const ChordDiagram& cd, EdgeMask quasitree);

struct QuasiTree {
    EdgeMask edges = 0;
    int genus = 0;
    std::vector<char> live;  // per edge
    Bigrading grading;       // u = live outside - live inside, v = -genus
};

// All one-face spanning subgraphs, masks ascending.  Size filter first:
// |Q| lies in [V-1, V-1+2g] with |Q| == V-1 (mod 2).
std::vector<QuasiTree> enumerate_quasitrees(const RibbonGraph& rg,
                                            int max_edges = 16);

// Membership swap on positive edges only: the image of a quasi-tree is a
// spanning tree of the Tait graph and vice versa; the rule is an involution.
EdgeMask tree_from_quasitree(const RibbonGraph& rg, EdgeMask quasitree);
EdgeMask quasitree_from_tree(const RibbonGraph& rg, EdgeMask tree);

// Activity words, one letter per edge in order: capital iff the edge is in
// the subgraph, L-shape iff live, D-shape iff dead; negative edges (when
// signs are given) carry a trailing apostrophe in ASCII or a combining
// macron in the pretty form.
std::string activity_word_ascii(int n, EdgeMask member,
                                const std::vector<char>& live,
                                const std::vector<int>& signs = {});
std::string activity_word_pretty(int n, EdgeMask member,
                                 const std::vector<char>& live,
                                 const std::vector<int>& signs = {});

}  // namespace qtkh
