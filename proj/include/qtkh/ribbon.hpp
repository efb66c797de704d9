#pragma once
// Oriented ribbon graphs as permutation triples on the half-edge marks
// 1..2n (stored 0-based).  sigma0 rotates marks around vertices, sigma1 is
// the fixed pairing (2i-1,2i), sigma2 = sigma1 o sigma0^-1 traces faces.
//
// from_diagram builds the all-A ribbon graph of a link diagram: vertices are
// the circles of the all-A smoothing, edge i sits at crossing i, and the
// cyclic order of marks comes from walking each circle with odd-parity
// regions of the smoothed diagram on its left.  (On the sphere that rule is
// "outer circles counterclockwise" up to one global reversal, which changes
// nothing downstream.)

#include <cstdint>
#include <string>
#include <vector>

#include "qtkh/linkdiag.hpp"

namespace qtkh {

using EdgeMask = uint32_t;

inline bool mask_has(EdgeMask m, int edge) { return (m >> edge) & 1u; }

struct RibbonGraph {
    int n = 0;                    // edges; marks are 0..2n-1, edge of mark m is m/2
    std::vector<int> sigma0, sigma0_inv, sigma2, sigma2_inv;
    std::vector<int> vertex_of_mark;
    int vertex_count = 1;
    int face_count = 1;
    bool connected = true;
    std::vector<int> edge_sign;   // +1/-1 per edge; all +1 unless provided

    int edge_count() const { return n; }
    int genus() const { return (2 - vertex_count + n - face_count) / 2; }

    // Boundary components of the spanning subgraph with the given edges:
    // orbits of m -> sigma2^-1(m) on subgraph half-edges, sigma0(m) elsewhere.
    int face_count_of_subgraph(EdgeMask edges) const;
    // The successor map itself (chord-diagram walks reuse it).
    int subgraph_step(EdgeMask edges, int m) const {
        return mask_has(edges, m >> 1) ? sigma2_inv[m] : sigma0[m];
    }

    // Conjugate sigma0 by swapping marks 2i-1,2i for each edge in the mask;
    // relabels the same ribbon graph (gradings must not change).
    RibbonGraph with_swapped_marks(EdgeMask swaps) const;
};

// sigma0 given 1-based as images: img[m-1] = sigma0(m).
RibbonGraph ribbon_from_sigma0(const std::vector<int>& img_1based,
                               const std::vector<int>& signs = {});
// shading -1 = use chosen_shading(d); 0/1 force a checkerboard class for the
// edge signs (the rest of the construction never depends on it).
RibbonGraph ribbon_from_diagram(const LinkDiagram& d, int shading = -1);

// Cycle notation helpers (1-based).  Canonical print: cycles sorted by
// minimum, each starting at its minimum, fixed points omitted; entries are
// concatenated digits when the domain fits in 1..9, else space-separated.
std::string cycles_string(const std::vector<int>& img_1based);
std::vector<int> parse_cycles(const std::string& text, int domain_hint = 0);
std::string sigma0_string(const RibbonGraph& rg);
std::string sigma2_string(const RibbonGraph& rg);

// Permutation-file input: "sigma0 = (...)(...)" plus optional lines
// "signs = ++--" and "sigma2 = (...)" (redundant, cross-checked; a mismatch
// reports the first failing mark).
RibbonGraph parse_sigma_file(const std::string& text);

}  // namespace qtkh
