#include "qtkh/treemodel.hpp"

#include <algorithm>
#include <bit>
#include <climits>
#include <queue>
#include <stdexcept>
#include <string>
#include <vector>

namespace qtkh {

namespace {

[[noreturn]] void fail(const std::string& msg) {
    throw std::runtime_error("treemodel: " + msg);
}

struct UnionFind {
    std::vector<int> p;
    explicit UnionFind(int n) : p(n) {
        for (int i = 0; i < n; ++i) p[i] = i;
    }
    int find(int x) {
        while (p[x] != x) x = p[x] = p[p[x]];
        return x;
    }
    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        p[a] = b;
        return true;
    }
};

void rec_trees(const TaitGraph& g, int e, UnionFind uf, int comps, EdgeMask mask,
               std::vector<EdgeMask>& out) {
    const int total = static_cast<int>(g.edges.size());
    if (comps - 1 > total - e) return;  // cannot reconnect any more
    if (e == total) {
        if (comps == 1) out.push_back(mask);
        return;
    }
    int a = uf.find(g.edges[e].u), b = uf.find(g.edges[e].v);
    // exclude e
    rec_trees(g, e + 1, uf, comps, mask, out);
    // include e unless it closes a cycle
    if (a != b) {
        uf.unite(a, b);
        rec_trees(g, e + 1, uf, comps - 1, mask | (EdgeMask(1) << e), out);
    }
}

__int128 mul_checked(__int128 a, __int128 b) {
    __int128 r;
    if (__builtin_mul_overflow(a, b, &r)) fail("determinant overflow");
    return r;
}

}  // namespace

std::vector<EdgeMask> spanning_tree_masks(const TaitGraph& g) {
    if (g.vertex_count <= 0) fail("graph has no vertices");
    if (g.edges.size() > 30) fail("edge count exceeds mask width");
    std::vector<EdgeMask> out;
    rec_trees(g, 0, UnionFind(g.vertex_count), g.vertex_count, 0, out);
    std::sort(out.begin(), out.end());
    return out;
}

long long spanning_tree_count(const TaitGraph& g) {
    const int m = g.vertex_count - 1;
    if (m < 0) fail("graph has no vertices");
    if (m == 0) return 1;
    std::vector<std::vector<__int128>> a(m, std::vector<__int128>(m, 0));
    for (const auto& e : g.edges) {
        if (e.u == e.v) continue;
        if (e.u < m) a[e.u][e.u] += 1;
        if (e.v < m) a[e.v][e.v] += 1;
        if (e.u < m && e.v < m) {
            a[e.u][e.v] -= 1;
            a[e.v][e.u] -= 1;
        }
    }
    // fraction-free elimination keeps every entry an exact integer
    __int128 prev = 1;
    int sign = 1;
    for (int k = 0; k + 1 < m; ++k) {
        if (a[k][k] == 0) {
            int p = -1;
            for (int r = k + 1; r < m; ++r)
                if (a[r][k] != 0) {
                    p = r;
                    break;
                }
            if (p < 0) return 0;
            std::swap(a[k], a[p]);
            sign = -sign;
        }
        for (int i = k + 1; i < m; ++i)
            for (int j = k + 1; j < m; ++j) {
                __int128 x = mul_checked(a[k][k], a[i][j]);
                __int128 y = mul_checked(a[i][k], a[k][j]);
                __int128 num = x - y;
                if (num % prev != 0) fail("internal: inexact division");
                a[i][j] = num / prev;
            }
        prev = a[k][k];
    }
    __int128 det = sign * a[m - 1][m - 1];
    if (det < 0) fail("internal: negative tree count");
    if (det > LLONG_MAX) fail("tree count exceeds 64 bits");
    return static_cast<long long>(det);
}

bool is_spanning_tree(const TaitGraph& g, EdgeMask t) {
    if (std::popcount(t) != g.vertex_count - 1) return false;
    UnionFind uf(g.vertex_count);
    int comps = g.vertex_count;
    for (int e = 0; e < static_cast<int>(g.edges.size()); ++e)
        if (mask_has(t, e)) {
            if (!uf.unite(g.edges[e].u, g.edges[e].v)) return false;  // cycle
            --comps;
        }
    return comps == 1;
}

std::vector<char> tree_activities(const TaitGraph& g, EdgeMask t) {
    const int total = static_cast<int>(g.edges.size());
    // tree adjacency for cycle walks
    std::vector<std::vector<std::pair<int, int>>> adj(g.vertex_count);
    for (int e = 0; e < total; ++e)
        if (mask_has(t, e)) {
            adj[g.edges[e].u].push_back({g.edges[e].v, e});
            adj[g.edges[e].v].push_back({g.edges[e].u, e});
        }
    std::vector<char> live(total, 1);
    for (int e = 0; e < total; ++e) {
        if (mask_has(t, e)) {
            // sides of the fundamental cut: components of T - e
            UnionFind uf(g.vertex_count);
            for (int f = 0; f < total; ++f)
                if (f != e && mask_has(t, f)) uf.unite(g.edges[f].u, g.edges[f].v);
            for (int f = 0; f < e; ++f) {
                if (mask_has(t, f)) continue;
                if (uf.find(g.edges[f].u) != uf.find(g.edges[f].v)) {
                    live[e] = 0;
                    break;
                }
            }
        } else {
            int src = g.edges[e].u, dst = g.edges[e].v;
            if (src == dst) continue;  // loop: empty cycle path, stays live
            // tree path src..dst via parent pointers
            std::vector<int> via(g.vertex_count, -1);
            std::vector<int> par(g.vertex_count, -1);
            std::queue<int> bfs;
            bfs.push(src);
            par[src] = src;
            while (!bfs.empty()) {
                int x = bfs.front();
                bfs.pop();
                if (x == dst) break;
                for (auto [y, f] : adj[x])
                    if (par[y] < 0) {
                        par[y] = x;
                        via[y] = f;
                        bfs.push(y);
                    }
            }
            if (par[dst] < 0) fail("internal: tree does not span");
            for (int x = dst; x != src; x = par[x])
                if (via[x] < e) {
                    live[e] = 0;
                    break;
                }
        }
    }
    return live;
}

SpanningTree tree_with_grading(const TaitGraph& g, EdgeMask t) {
    SpanningTree st;
    st.edges = t;
    st.live = tree_activities(g, t);
    const int total = static_cast<int>(g.edges.size());
    for (int e = 0; e < total; ++e) {
        bool inside = mask_has(t, e);
        bool pos = g.edges[e].sign > 0;
        if (st.live[e]) st.u += (inside == pos) ? 1 : -1;
        if (inside && pos) st.v += 1;
    }
    return st;
}

std::vector<SpanningTree> enumerate_spanning_trees(const TaitGraph& g) {
    std::vector<SpanningTree> out;
    for (EdgeMask t : spanning_tree_masks(g)) out.push_back(tree_with_grading(g, t));
    return out;
}

}  // namespace qtkh
