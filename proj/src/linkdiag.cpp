#include "qtkh/linkdiag.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace qtkh {

namespace {

[[noreturn]] void fail(const std::string& msg) {
    throw std::runtime_error("linkdiag: " + msg);
}

struct UnionFind {
    std::vector<int> p;
    explicit UnionFind(int n) : p(n) { std::iota(p.begin(), p.end(), 0); }
    int find(int x) {
        while (p[x] != x) x = p[x] = p[p[x]];
        return x;
    }
    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        p[b] = a;
        return true;
    }
};

// Recover in/out polarity for every slot.  Slot 0 is always an arriving
// under-strand, slot 2 a departing one.  The two slots of an arc have
// opposite polarity (an arc starts once and ends once), and the two over
// slots 1,3 of a crossing have opposite polarity (the over strand passes
// through).  Components that never pass under (possible only in links) are
// left free; they get a deterministic orientation.
std::vector<int8_t> slot_polarity(const LinkDiagram& d) {
    const int slots = 4 * d.n();
    std::vector<int8_t> pol(slots, -1);  // 1 = in, 0 = out
    std::vector<int> queue;
    auto set = [&](int s, int8_t v) {
        if (pol[s] == -1) {
            pol[s] = v;
            queue.push_back(s);
        } else if (pol[s] != v) {
            fail("inconsistent strand orientations (malformed PD code)");
        }
    };
    for (int c = 0; c < d.n(); ++c) {
        set(4 * c + 0, 1);
        set(4 * c + 2, 0);
    }
    auto propagate = [&]() {
        while (!queue.empty()) {
            int s = queue.back();
            queue.pop_back();
            int a = d.slot_arc[s];
            int other = d.arc_slots[a][0] == s ? d.arc_slots[a][1] : d.arc_slots[a][0];
            set(other, static_cast<int8_t>(1 - pol[s]));
            int k = s & 3;
            if (k == 1 || k == 3) set(s ^ 2, static_cast<int8_t>(1 - pol[s]));
        }
    };
    propagate();
    for (int s = 0; s < slots; ++s)
        if (pol[s] == -1) {  // all-over component; any orientation is coherent
            set(s, 1);
            propagate();
        }
    return pol;
}

// Canonical crossing order: sort by the label multiset (ties by raw tuple).
// Everything downstream -- edge indices, half-edge marks, the chord order and
// with it the whole bigraded table -- is phrased in terms of crossing indices,
// so storing a canonical order makes all outputs independent of how the input
// happened to list its crossings.
std::vector<std::array<int, 4>> canonical_order(std::vector<std::array<int, 4>> raw) {
    auto key = [](const std::array<int, 4>& x) {
        std::array<int, 4> s = x;
        std::sort(s.begin(), s.end());
        return std::pair(s, x);
    };
    std::stable_sort(raw.begin(), raw.end(),
                     [&](const auto& x, const auto& y) { return key(x) < key(y); });
    return raw;
}

void init_diagram(LinkDiagram& d, const std::vector<std::array<int, 4>>& raw_in) {
    if (raw_in.empty()) fail("empty crossing list");
    const std::vector<std::array<int, 4>> raw = canonical_order(raw_in);
    const int n = static_cast<int>(raw.size());

    // Dense arc ids; every label must appear exactly twice.
    std::map<int, int> id_of;
    std::map<int, int> uses;
    for (const auto& x : raw)
        for (int lab : x) {
            if (lab <= 0) fail("arc labels must be positive");
            ++uses[lab];
        }
    for (const auto& [lab, cnt] : uses) {
        if (cnt != 2) {
            std::ostringstream os;
            os << "arc label " << lab << " appears " << cnt << " times (want 2)";
            fail(os.str());
        }
        int id = static_cast<int>(id_of.size());
        id_of[lab] = id;
        d.arc_label.push_back(lab);
    }
    d.arc_count = static_cast<int>(id_of.size());
    if (d.arc_count != 2 * n) fail("arc/crossing count mismatch");

    d.crossings.resize(n);
    d.slot_arc.assign(4 * n, -1);
    d.arc_slots.assign(d.arc_count, {-1, -1});
    for (int c = 0; c < n; ++c)
        for (int k = 0; k < 4; ++k) {
            int a = id_of[raw[c][k]];
            d.crossings[c].arc[k] = a;
            int s = 4 * c + k;
            d.slot_arc[s] = a;
            if (d.arc_slots[a][0] == -1)
                d.arc_slots[a][0] = s;
            else
                d.arc_slots[a][1] = s;
        }

    d.arrive_dart.assign(4 * n, -1);
    for (int a = 0; a < d.arc_count; ++a) {
        d.arrive_dart[d.arc_slots[a][0]] = 2 * a + 0;
        d.arrive_dart[d.arc_slots[a][1]] = 2 * a + 1;
    }

    // Connectivity of the projection.
    UnionFind uf(n);
    for (int a = 0; a < d.arc_count; ++a)
        uf.unite(d.arc_slots[a][0] >> 2, d.arc_slots[a][1] >> 2);
    for (int c = 1; c < n; ++c)
        if (uf.find(c) != uf.find(0)) fail("diagram projection is disconnected");

    // Strand orientations -> crossing signs.  The over strand enters at
    // slot 3 exactly when the frame (over, under) is right-handed.
    auto pol = slot_polarity(d);
    for (int c = 0; c < n; ++c)
        d.crossings[c].sign = pol[4 * c + 3] == 1 ? +1 : -1;

    // Link components: follow each strand through the crossings.
    {
        std::vector<int> comp(d.arc_count, -1);
        int nc = 0;
        for (int a0 = 0; a0 < d.arc_count; ++a0) {
            if (comp[a0] != -1) continue;
            int a = a0;
            while (comp[a] == -1) {
                comp[a] = nc;
                int sin = pol[d.arc_slots[a][0]] == 1 ? d.arc_slots[a][0] : d.arc_slots[a][1];
                int k = sin & 3;
                int sout = (k == 0) ? sin + 2 : (sin ^ 2);  // straight through
                a = d.slot_arc[sout];
            }
            ++nc;
        }
        d.component_count = nc;
    }

    // Faces: walk with the face on the left (arrive at slot k, leave via k-1).
    d.face_of_dart.assign(2 * d.arc_count, -1);
    int nf = 0;
    for (int d0 = 0; d0 < 2 * d.arc_count; ++d0) {
        if (d.face_of_dart[d0] != -1) continue;
        int dart = d0;
        while (d.face_of_dart[dart] == -1) {
            d.face_of_dart[dart] = nf;
            int s = d.head_slot(dart);
            int s2 = (s & ~3) | ((s + 3) & 3);
            dart = d.leave_dart(s2);
        }
        ++nf;
    }
    d.face_count = nf;
    if (nf != n + 2) {
        std::ostringstream os;
        os << "non-planar gluing: " << nf << " faces for " << n
           << " crossings (expected " << n + 2 << ")";
        fail(os.str());
    }

    // Checkerboard 2-coloring: faces across an arc differ.
    d.face_color.assign(nf, 2);
    std::vector<int> stack{0};
    d.face_color[d.face_of_dart[0]] = 0;
    stack[0] = d.face_of_dart[0];
    std::vector<std::vector<int>> adj(nf);
    for (int a = 0; a < d.arc_count; ++a) {
        int f1 = d.face_of_dart[2 * a], f2 = d.face_of_dart[2 * a + 1];
        adj[f1].push_back(f2);
        adj[f2].push_back(f1);
    }
    while (!stack.empty()) {
        int f = stack.back();
        stack.pop_back();
        for (int g : adj[f]) {
            if (d.face_color[g] == 2) {
                d.face_color[g] = static_cast<uint8_t>(1 - d.face_color[f]);
                stack.push_back(g);
            } else if (d.face_color[g] == d.face_color[f]) {
                fail("internal: face coloring conflict");
            }
        }
    }

    d.outer_face = d.face_of_dart[d.arrive_dart[0]];
}

}  // namespace

int TaitGraph::positive_count() const {
    int k = 0;
    for (const auto& e : edges) k += e.sign > 0;
    return k;
}
int TaitGraph::negative_count() const {
    return static_cast<int>(edges.size()) - positive_count();
}

LinkDiagram LinkDiagram::unknot() {
    LinkDiagram d;
    d.component_count = 1;
    d.face_count = 2;
    d.face_color = {0, 1};
    d.outer_face = 0;
    return d;
}

LinkDiagram diagram_from_crossings(const std::vector<std::array<int, 4>>& xs) {
    LinkDiagram d;
    init_diagram(d, xs);
    return d;
}

LinkDiagram parse_pd(const std::string& text) {
    std::vector<std::array<int, 4>> raw;
    size_t i = 0;
    auto skip = [&]() {
        while (i < text.size()) {
            if (std::isspace(static_cast<unsigned char>(text[i])) || text[i] == ',') {
                ++i;
            } else if (text[i] == '#') {
                while (i < text.size() && text[i] != '\n') ++i;
            } else {
                break;
            }
        }
    };
    skip();
    while (i < text.size()) {
        if (text[i] != 'X' && text[i] != 'x') fail("expected 'X' at PD term");
        ++i;
        skip();
        if (i >= text.size() || (text[i] != '(' && text[i] != '[')) fail("expected '(' after X");
        char close = text[i] == '(' ? ')' : ']';
        ++i;
        std::array<int, 4> t{};
        for (int k = 0; k < 4; ++k) {
            skip();
            size_t j = i;
            while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
            if (j == i) fail("expected arc label");
            t[k] = std::stoi(text.substr(i, j - i));
            i = j;
            skip();
            if (k < 3) {
                // separators already skipped (comma or space)
            }
        }
        if (i >= text.size() || text[i] != close) fail("unterminated PD term");
        ++i;
        raw.push_back(t);
        skip();
    }
    return diagram_from_crossings(raw);
}

int writhe(const LinkDiagram& d) {
    int w = 0;
    for (const auto& c : d.crossings) w += c.sign;
    return w;
}

int positive_crossings(const LinkDiagram& d) {
    int k = 0;
    for (const auto& c : d.crossings) k += c.sign > 0;
    return k;
}

LinkDiagram mirror(const LinkDiagram& d) {
    std::vector<std::array<int, 4>> raw;
    for (const auto& c : d.crossings)
        raw.push_back({d.arc_label[c.arc[0]], d.arc_label[c.arc[3]],
                       d.arc_label[c.arc[2]], d.arc_label[c.arc[1]]});
    return diagram_from_crossings(raw);
}

LinkDiagram reorder_crossings(const LinkDiagram& d, const std::vector<int>& perm) {
    if (perm.size() != d.crossings.size()) fail("reorder: bad permutation size");
    std::vector<std::array<int, 4>> raw;
    for (int idx : perm) {
        const auto& c = d.crossings.at(idx);
        raw.push_back({d.arc_label[c.arc[0]], d.arc_label[c.arc[1]],
                       d.arc_label[c.arc[2]], d.arc_label[c.arc[3]]});
    }
    return diagram_from_crossings(raw);
}

std::vector<int> state_circle_ids(const LinkDiagram& d, const State& s, int* count) {
    if (static_cast<int>(s.size()) != d.n()) fail("state size mismatch");
    UnionFind uf(d.arc_count);
    for (int c = 0; c < d.n(); ++c) {
        // A-smoothing joins slots (0,1) and (2,3); B joins (0,3) and (1,2).
        int x = s[c] == Smoothing::A ? 1 : 3;
        uf.unite(d.slot_arc[4 * c], d.slot_arc[4 * c + x]);
        uf.unite(d.slot_arc[4 * c + (x ^ 2)], d.slot_arc[4 * c + 2]);
    }
    std::vector<int> id(d.arc_count, -1);
    int nc = 0;
    for (int a = 0; a < d.arc_count; ++a) {
        int r = uf.find(a);
        if (id[r] == -1) id[r] = nc++;
        id[a] = id[r];
    }
    if (count) *count = nc;
    return id;
}

int smoothing_circle_count(const LinkDiagram& d, const State& s) {
    if (d.n() == 0) return 1;
    int c = 0;
    state_circle_ids(d, s, &c);
    return c;
}

TaitGraph tait_graph_for_shading(const LinkDiagram& d, int color) {
    TaitGraph g;
    if (d.n() == 0) {  // bare circle: one shaded disc, no edges
        g.vertex_count = 1;
        return g;
    }
    std::vector<int> vid(d.face_count, -1);
    for (int f = 0; f < d.face_count; ++f)
        if (d.face_color[f] == color) vid[f] = g.vertex_count++;
    for (int c = 0; c < d.n(); ++c) {
        // Corners 1 and 3 (between slots 1-2 and 3-0) are the A-corners.
        int fa = d.corner_face(c, 1), fb = d.corner_face(c, 3);
        int f0 = d.corner_face(c, 0), f2 = d.corner_face(c, 2);
        TaitGraph::Edge e;
        if (d.face_color[fa] == color) {
            e = {vid[fa], vid[fb], +1};
        } else {
            e = {vid[f0], vid[f2], -1};
        }
        if (e.u < 0 || e.v < 0) fail("internal: shading corner mismatch");
        g.edges.push_back(e);
    }
    return g;
}

int chosen_shading(const LinkDiagram& d) {
    if (d.n() == 0) return 1 - d.face_color[d.outer_face];
    TaitGraph g0 = tait_graph_for_shading(d, 0);
    TaitGraph g1 = tait_graph_for_shading(d, 1);
    if (g0.positive_count() != g1.positive_count())
        return g0.positive_count() > g1.positive_count() ? 0 : 1;
    if (g0.vertex_count != g1.vertex_count)
        return g0.vertex_count < g1.vertex_count ? 0 : 1;
    return 1 - d.face_color[d.outer_face];
}

TaitGraph tait_graph(const LinkDiagram& d) {
    return tait_graph_for_shading(d, chosen_shading(d));
}

std::string to_pd_string(const LinkDiagram& d) {
    std::ostringstream os;
    for (size_t c = 0; c < d.crossings.size(); ++c) {
        if (c) os << ' ';
        os << 'X' << '(';
        for (int k = 0; k < 4; ++k) {
            if (k) os << ',';
            os << d.arc_label[d.crossings[c].arc[k]];
        }
        os << ')';
    }
    return os.str();
}

}  // namespace qtkh
