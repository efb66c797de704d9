#pragma once
// Spanning-tree side: enumeration over the signed Tait graph, the
// Matrix-Tree count as an independent oracle, and per-edge live/dead
// activities with the (u, v) grading carried by trees.

#include <vector>

#include "qtkh/linkdiag.hpp"
#include "qtkh/ribbon.hpp"  // EdgeMask

namespace qtkh {

struct SpanningTree {
    EdgeMask edges = 0;
    std::vector<char> live;  // per edge of the graph
    int u = 0;               // signed live count (sign pairs with membership)
    int v = 0;               // positive edges in the tree
};

// All spanning trees as edge masks, ascending.  Contraction/deletion with
// connectivity pruning; loops never enter a tree.
std::vector<EdgeMask> spanning_tree_masks(const TaitGraph& g);

// Laplacian cofactor determinant, exact integer arithmetic.
long long spanning_tree_count(const TaitGraph& g);

bool is_spanning_tree(const TaitGraph& g, EdgeMask t);

// Live iff no lower-indexed edge lies in the fundamental cut (tree edges)
// or fundamental cycle (non-tree edges).
std::vector<char> tree_activities(const TaitGraph& g, EdgeMask t);

// u = sum over live edges of +1 when membership matches the sign
// (positive-in or negative-out), else -1; v counts positive tree edges.
SpanningTree tree_with_grading(const TaitGraph& g, EdgeMask t);

std::vector<SpanningTree> enumerate_spanning_trees(const TaitGraph& g);

}  // namespace qtkh
