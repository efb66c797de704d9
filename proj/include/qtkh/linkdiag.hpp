#pragma once
// Link diagrams from planar diagram (PD) codes.
//
// A crossing X(a,b,c,d) lists its four arc ends counterclockwise starting at
// the incoming under-strand.  From a crossing list we recover strand
// orientations, crossing signs, the face structure of the underlying 4-valent
// plane graph (rejecting non-planar gluings), the checkerboard coloring, and
// the signed Tait graph.

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace qtkh {

enum class Smoothing : uint8_t { A, B };

// One smoothing choice per crossing.
using State = std::vector<Smoothing>;

struct Crossing {
    std::array<int, 4> arc;  // dense arc ids, slot 0 = incoming under-strand
    int sign = 0;            // +1 / -1 (right-hand rule on strand orientations)
};

struct TaitGraph {
    int vertex_count = 0;
    struct Edge {
        int u = 0, v = 0;  // shaded-region vertices
        int sign = 0;      // +1 if the A-smoothing joins the shaded corners
    };
    std::vector<Edge> edges;  // edge i belongs to crossing i

    int positive_count() const;
    int negative_count() const;
};

// Immutable once constructed; construction validates everything.
struct LinkDiagram {
    std::vector<Crossing> crossings;
    int arc_count = 0;            // arcs have dense ids 0..arc_count-1
    std::vector<int> arc_label;   // original label per arc id
    int component_count = 0;

    // Embedding data for the 4-valent plane graph.
    // Slot s = 4*crossing + k.  Dart d = 2*arc + occ points INTO the slot
    // holding that arc occurrence; d^1 is the reverse dart.
    std::vector<std::array<int, 2>> arc_slots;  // the two slots of each arc
    std::vector<int> slot_arc;                  // arc at each slot
    std::vector<int> arrive_dart;               // dart whose head is the slot
    std::vector<int> face_of_dart;              // faces lie LEFT of their darts
    int face_count = 0;
    std::vector<uint8_t> face_color;            // checkerboard classes 0/1
    int outer_face = 0;  // deterministic stand-in for the unbounded region

    int n() const { return static_cast<int>(crossings.size()); }

    int head_slot(int dart) const { return arc_slots[dart >> 1][dart & 1]; }
    // Dart leaving through a slot (tail there, head at the arc's other slot).
    int leave_dart(int slot) const {
        int a = slot_arc[slot];
        return 2 * a + (arc_slots[a][0] == slot ? 1 : 0);
    }
    // Face of the corner between slot j and slot j+1 (ccw) at a crossing.
    int corner_face(int crossing, int j) const {
        return face_of_dart[arrive_dart[4 * crossing + ((j + 1) & 3)]];
    }

    // Crossingless round unknot; the only 0-crossing diagram we accept.
    static LinkDiagram unknot();
};

// Parse a PD code: terms X(a,b,c,d) or X[a,b,c,d], '#' comments, arbitrary
// positive arc labels each appearing exactly twice.  Throws qtkh-tagged
// std::runtime_error on malformed input, disconnected projections, empty
// crossing lists, or non-planar gluings.
LinkDiagram parse_pd(const std::string& text);

// Build/validate from an explicit crossing list (arc entries are labels).
LinkDiagram diagram_from_crossings(const std::vector<std::array<int, 4>>& xs);

int writhe(const LinkDiagram& d);
int positive_crossings(const LinkDiagram& d);

// Mirror image: reverses each tuple's cyclic order (over/under swap).
LinkDiagram mirror(const LinkDiagram& d);
// Same diagram with crossings listed in a new order (perm[i] = old index).
LinkDiagram reorder_crossings(const LinkDiagram& d, const std::vector<int>& perm);

// Number of circles after smoothing every crossing per the state.
int smoothing_circle_count(const LinkDiagram& d, const State& s);
// Circle id per arc for a state (ids dense, in order of lowest member arc).
std::vector<int> state_circle_ids(const LinkDiagram& d, const State& s, int* count = nullptr);

// Signed Tait graph of one checkerboard class (0 or 1).
TaitGraph tait_graph_for_shading(const LinkDiagram& d, int color);
// The preferred shading: more positive edges; tie -> fewer vertices;
// tie -> the class not containing the designated outer face.
TaitGraph tait_graph(const LinkDiagram& d);
int chosen_shading(const LinkDiagram& d);

std::string to_pd_string(const LinkDiagram& d);

}  // namespace qtkh
