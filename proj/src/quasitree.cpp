#include "qtkh/quasitree.hpp"

#include <bit>
#include <cstdint>
#include <stdexcept>

namespace qtkh {

namespace {

[[noreturn]] void fail(const std::string& msg) {
    throw std::runtime_error("quasitree: " + msg);
}

}  // namespace

bool ChordDiagram::interleaved(int i, int j) const {
    int a = span[i][0], b = span[i][1];
    int c = span[j][0], d = span[j][1];
    return (a < c && c < b && b < d) || (c < a && a < d && d < b);
}

std::vector<char> ChordDiagram::live_chords() const {
    std::vector<char> live(n, 1);
    for (int i = 1; i < n; ++i)
        for (int j = 0; j < i; ++j)
            if (interleaved(i, j)) {
                live[i] = 0;
                break;
            }
    return live;
}

ChordDiagram chord_diagram(const RibbonGraph& rg, EdgeMask q) {
    ChordDiagram cd;
    cd.n = rg.n;
    if (rg.n == 0) return cd;
    cd.walk.reserve(2 * rg.n);
    int m = 0;
    do {
        cd.walk.push_back(m);
        m = rg.subgraph_step(q, m);
    } while (m != 0);
    if (static_cast<int>(cd.walk.size()) != 2 * rg.n)
        fail("subgraph boundary is not a single walk (not a quasi-tree)");
    cd.span.assign(rg.n, {-1, -1});
    for (int p = 0; p < 2 * rg.n; ++p) {
        int c = cd.walk[p] >> 1;
        if (cd.span[c][0] < 0)
            cd.span[c][0] = p;
        else
            cd.span[c][1] = p;
    }
    return cd;
}

int genus_from_chords(const ChordDiagram& cd, EdgeMask q) {
    std::vector<int> in;
    for (int c = 0; c < cd.n; ++c)
        if (mask_has(q, c)) in.push_back(c);
    int k = static_cast<int>(in.size());
    std::vector<uint64_t> rows(k, 0);
    for (int r = 0; r < k; ++r)
        for (int s = 0; s < k; ++s)
            if (r != s && cd.interleaved(in[r], in[s]))
                rows[r] |= uint64_t(1) << s;
    int rank = 0;
    for (int col = 0; col < k; ++col) {
        int piv = -1;
        for (int r = rank; r < k; ++r)
            if ((rows[r] >> col) & 1) {
                piv = r;
                break;
            }
        if (piv < 0) continue;
        std::swap(rows[rank], rows[piv]);
        for (int r = 0; r < k; ++r)
            if (r != rank && ((rows[r] >> col) & 1)) rows[r] ^= rows[rank];
        ++rank;
    }
    if (rank & 1) fail("internal: odd interleaving rank");
    return rank / 2;
}

std::vector<QuasiTree> enumerate_quasitrees(const RibbonGraph& rg, int max_edges) {
    if (!rg.connected) fail("ribbon graph must be connected");
    if (rg.n > max_edges) fail("edge count exceeds enumeration bound");
    if (rg.n >= 31) fail("edge count exceeds mask width");
    std::vector<QuasiTree> out;
    const int lo = rg.vertex_count - 1;
    const int hi = lo + 2 * rg.genus();
    const EdgeMask end = EdgeMask(1) << rg.n;
    for (EdgeMask mask = 0; mask < end; ++mask) {
        int k = std::popcount(mask);
        if (k < lo || k > hi || ((k - lo) & 1)) continue;
        if (rg.face_count_of_subgraph(mask) != 1) continue;
        QuasiTree qt;
        qt.edges = mask;
        qt.genus = (1 - rg.vertex_count + k) / 2;
        ChordDiagram cd = chord_diagram(rg, mask);
        qt.live = cd.live_chords();
        int u = 0;
        for (int c = 0; c < rg.n; ++c)
            if (qt.live[c]) u += mask_has(mask, c) ? -1 : 1;
        qt.grading = {u, -qt.genus};
        out.push_back(qt);
    }
    return out;
}

EdgeMask tree_from_quasitree(const RibbonGraph& rg, EdgeMask q) {
    EdgeMask t = 0;
    for (int c = 0; c < rg.n; ++c) {
        bool inside = mask_has(q, c);
        if (rg.edge_sign[c] > 0 ? !inside : inside) t |= EdgeMask(1) << c;
    }
    return t;
}

EdgeMask quasitree_from_tree(const RibbonGraph& rg, EdgeMask t) {
    return tree_from_quasitree(rg, t);
}

namespace {

std::string render_word(int n, EdgeMask member, const std::vector<char>& live,
                        const std::vector<int>& signs, bool pretty) {
    if (static_cast<int>(live.size()) != n)
        fail("live flags do not match edge count");
    if (!signs.empty() && static_cast<int>(signs.size()) != n)
        fail("signs do not match edge count");
    std::string w;
    for (int c = 0; c < n; ++c) {
        bool inside = mask_has(member, c);
        bool lv = live[c];
        if (lv && inside)
            w += 'L';
        else if (lv)
            w += pretty ? "ℓ" : "l";
        else
            w += inside ? 'D' : 'd';
        if (!signs.empty() && signs[c] < 0) w += pretty ? "̄" : "'";
    }
    return w;
}

}  // namespace

std::string activity_word_ascii(int n, EdgeMask member,
                                const std::vector<char>& live,
                                const std::vector<int>& signs) {
    return render_word(n, member, live, signs, false);
}

std::string activity_word_pretty(int n, EdgeMask member,
                                 const std::vector<char>& live,
                                 const std::vector<int>& signs) {
    return render_word(n, member, live, signs, true);
}

}  // namespace qtkh
