#include "qtkh/ribbon.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace qtkh {

namespace {

[[noreturn]] void fail(const std::string& msg) {
    throw std::runtime_error("ribbon: " + msg);
}

int orbit_count(const std::vector<int>& next) {
    std::vector<char> seen(next.size(), 0);
    int k = 0;
    for (size_t i = 0; i < next.size(); ++i) {
        if (seen[i]) continue;
        ++k;
        for (int j = static_cast<int>(i); !seen[j]; j = next[j]) seen[j] = 1;
    }
    return k;
}

void finish(RibbonGraph& rg) {
    const int m = 2 * rg.n;
    rg.sigma0_inv.assign(m, 0);
    for (int i = 0; i < m; ++i) rg.sigma0_inv[rg.sigma0[i]] = i;
    rg.sigma2.assign(m, 0);
    rg.sigma2_inv.assign(m, 0);
    for (int i = 0; i < m; ++i) rg.sigma2[i] = rg.sigma0_inv[i] ^ 1;  // sigma1 after sigma0^-1
    for (int i = 0; i < m; ++i) rg.sigma2_inv[rg.sigma2[i]] = i;

    rg.vertex_of_mark.assign(m, -1);
    int nv = 0;
    for (int i = 0; i < m; ++i) {
        if (rg.vertex_of_mark[i] != -1) continue;
        for (int j = i; rg.vertex_of_mark[j] == -1; j = rg.sigma0[j]) rg.vertex_of_mark[j] = nv;
        ++nv;
    }
    rg.vertex_count = rg.n == 0 ? 1 : nv;
    rg.face_count = rg.n == 0 ? 1 : orbit_count(rg.sigma2);

    // Transitivity of <sigma0, sigma1> = connectivity of the ribbon graph.
    if (rg.n > 0) {
        std::vector<char> seen(m, 0);
        std::vector<int> stack{0};
        seen[0] = 1;
        int cnt = 1;
        while (!stack.empty()) {
            int x = stack.back();
            stack.pop_back();
            for (int y : {rg.sigma0[x], rg.sigma0_inv[x], x ^ 1})
                if (!seen[y]) {
                    seen[y] = 1;
                    ++cnt;
                    stack.push_back(y);
                }
        }
        rg.connected = cnt == m;
    }
    if (rg.edge_sign.empty()) rg.edge_sign.assign(rg.n, +1);
    if (static_cast<int>(rg.edge_sign.size()) != rg.n) fail("edge sign count mismatch");
}

}  // namespace

int RibbonGraph::face_count_of_subgraph(EdgeMask edges) const {
    if (n == 0) return 1;
    const int m = 2 * n;
    std::vector<char> seen(m, 0);
    int k = 0;
    for (int i = 0; i < m; ++i) {
        if (seen[i]) continue;
        ++k;
        for (int j = i; !seen[j]; j = subgraph_step(edges, j)) seen[j] = 1;
    }
    return k;
}

RibbonGraph RibbonGraph::with_swapped_marks(EdgeMask swaps) const {
    auto relabel = [&](int m) { return mask_has(swaps, m >> 1) ? m ^ 1 : m; };
    RibbonGraph out;
    out.n = n;
    out.edge_sign = edge_sign;
    out.sigma0.assign(2 * n, 0);
    for (int i = 0; i < 2 * n; ++i) out.sigma0[relabel(i)] = relabel(sigma0[i]);
    finish(out);
    return out;
}

RibbonGraph ribbon_from_sigma0(const std::vector<int>& img_1based,
                               const std::vector<int>& signs) {
    const int m = static_cast<int>(img_1based.size());
    if (m % 2) fail("sigma0 domain must have even size");
    std::vector<char> hit(m, 0);
    RibbonGraph rg;
    rg.n = m / 2;
    rg.sigma0.assign(m, 0);
    for (int i = 0; i < m; ++i) {
        int v = img_1based[i];
        if (v < 1 || v > m) fail("sigma0 image out of range");
        if (hit[v - 1]) fail("sigma0 is not a permutation");
        hit[v - 1] = 1;
        rg.sigma0[i] = v - 1;
    }
    if (!signs.empty()) rg.edge_sign = signs;
    finish(rg);
    return rg;
}

RibbonGraph ribbon_from_diagram(const LinkDiagram& d, int shading) {
    RibbonGraph rg;
    rg.n = d.n();
    if (rg.n == 0) {
        finish(rg);
        return rg;
    }
    const int n = d.n();

    // Circles of the all-A state.
    State all_a(n, Smoothing::A);
    int ncirc = 0;
    std::vector<int> circ = state_circle_ids(d, all_a, &ncirc);

    // Merge faces of the diagram through the A-channels: at each crossing the
    // two A-corner faces become one region of the smoothed diagram.
    std::vector<int> rp(d.face_count);
    std::iota(rp.begin(), rp.end(), 0);
    auto rfind = [&rp](int x) {
        while (rp[x] != x) x = rp[x] = rp[rp[x]];
        return x;
    };
    for (int c = 0; c < n; ++c) rp[rfind(d.corner_face(c, 1))] = rfind(d.corner_face(c, 3));
    int nregions = 0;
    std::vector<int> rid(d.face_count, -1);
    for (int f = 0; f < d.face_count; ++f) {
        int r = rfind(f);
        if (rid[r] == -1) rid[r] = nregions++;
        rid[f] = rid[r];
    }
    if (nregions != ncirc + 1) fail("internal: region count != circles + 1");

    // Walk each circle once; record the smoothing sites passed and the region
    // on the left (constant along a circle).
    struct Walk {
        std::vector<int> marks;
        int left = -1, right = -1;
    };
    std::vector<Walk> walks(ncirc);
    std::vector<char> dart_done(2 * d.arc_count, 0);
    auto walk_from = [&](int d0) {
        Walk w;
        int dart = d0;
        do {
            dart_done[dart] = 1;
            int s = d.head_slot(dart);
            w.marks.push_back(2 * (s >> 2) + ((s & 3) < 2 ? 0 : 1));
            int left = rid[d.face_of_dart[dart]];
            int right = rid[d.face_of_dart[dart ^ 1]];
            if (w.left == -1) {
                w.left = left;
                w.right = right;
            } else if (w.left != left || w.right != right) {
                fail("internal: circle side regions not constant");
            }
            dart = d.leave_dart(s ^ 1);  // A-partner slot, straight on
        } while (dart != d0);
        return w;
    };
    for (int a = 0; a < d.arc_count; ++a) {
        int ci = circ[a];
        if (!walks[ci].marks.empty()) continue;
        walks[ci] = walk_from(2 * a);
    }

    // Parity of regions: the circles' left/right regions form a tree on the
    // sphere; 2-color it from the designated outer region.
    std::vector<int> parity(nregions, -1);
    parity[rid[d.outer_face]] = 0;
    for (bool moved = true; moved;) {
        moved = false;
        for (const auto& w : walks) {
            for (auto [x, y] : {std::pair{w.left, w.right}, std::pair{w.right, w.left}}) {
                if (parity[x] != -1 && parity[y] == -1) {
                    parity[y] = 1 - parity[x];
                    moved = true;
                }
            }
        }
    }
    for (int p : parity)
        if (p == -1) fail("internal: region parity incomplete");

    rg.sigma0.assign(2 * n, -1);
    for (auto& w : walks) {
        if (parity[w.left] == 0) {  // want odd on the left: reverse the walk
            std::reverse(w.marks.begin(), w.marks.end());
        }
        const int L = static_cast<int>(w.marks.size());
        for (int i = 0; i < L; ++i) rg.sigma0[w.marks[i]] = w.marks[(i + 1) % L];
    }
    for (int v : rg.sigma0)
        if (v < 0) fail("internal: sigma0 incomplete");

    finish(rg);
    if (rg.vertex_count != ncirc) fail("internal: vertex count != all-A circles");

    TaitGraph g = shading < 0 ? tait_graph(d) : tait_graph_for_shading(d, shading);
    rg.edge_sign.clear();
    for (const auto& e : g.edges) rg.edge_sign.push_back(e.sign);
    if (static_cast<int>(rg.edge_sign.size()) != rg.n) fail("internal: sign count");
    return rg;
}

std::string cycles_string(const std::vector<int>& img_1based) {
    const int m = static_cast<int>(img_1based.size());
    std::vector<char> seen(m, 0);
    std::ostringstream os;
    bool compact = m <= 9;
    bool any = false;
    for (int i = 0; i < m; ++i) {
        if (seen[i] || img_1based[i] == i + 1) {
            seen[i] = 1;
            continue;
        }
        os << '(';
        int j = i;
        bool first = true;
        while (!seen[j]) {
            seen[j] = 1;
            if (!first && !compact) os << ' ';
            os << j + 1;
            first = false;
            j = img_1based[j] - 1;
        }
        os << ')';
        any = true;
    }
    if (!any) os << "()";
    return os.str();
}

std::vector<int> parse_cycles(const std::string& text, int domain_hint) {
    // Tokenize into cycles of integer tokens.
    std::vector<std::vector<int>> cyc;
    size_t i = 0;
    while (i < text.size()) {
        char ch = text[i];
        if (std::isspace(static_cast<unsigned char>(ch))) {
            ++i;
            continue;
        }
        if (ch != '(') fail("cycle notation: expected '('");
        ++i;
        std::vector<int> cur;
        std::vector<std::string> words;
        std::string w;
        while (i < text.size() && text[i] != ')') {
            char c2 = text[i];
            if (std::isdigit(static_cast<unsigned char>(c2))) {
                w += c2;
            } else if (std::isspace(static_cast<unsigned char>(c2)) || c2 == ',') {
                if (!w.empty()) words.push_back(w);
                w.clear();
            } else {
                fail("cycle notation: bad character");
            }
            ++i;
        }
        if (i >= text.size()) fail("cycle notation: unterminated cycle");
        ++i;
        if (!w.empty()) words.push_back(w);
        for (const auto& s : words) cur.push_back(std::stoi(s));
        cyc.push_back(cur);
    }

    // A lone digit run like (15724863) is one mark per digit; space- or
    // comma-separated entries are read verbatim (and are required once any
    // label exceeds 9).
    bool split = false;
    for (const auto& c : cyc)
        if (c.size() == 1 && c[0] >= 10) split = true;
    if (split) {
        std::vector<std::vector<int>> digits;
        for (const auto& c : cyc) {
            std::vector<int> cur;
            for (int v : c)
                for (char ch : std::to_string(v)) cur.push_back(ch - '0');
            digits.push_back(cur);
        }
        cyc = digits;
    }

    int mx = domain_hint;
    for (const auto& c : cyc)
        for (int v : c) mx = std::max(mx, v);
    if (mx > 1024) fail("cycle notation: domain too large");
    std::vector<int> img(mx);
    std::iota(img.begin(), img.end(), 1);
    std::vector<char> used(mx, 0);
    for (const auto& c : cyc)
        for (size_t k = 0; k < c.size(); ++k) {
            int a = c[k], b = c[(k + 1) % c.size()];
            if (a < 1 || a > mx) fail("cycle entry out of range");
            if (used[a - 1]) fail("cycle notation: repeated entry");
            used[a - 1] = 1;
            img[a - 1] = b;
        }
    return img;
}

std::string sigma0_string(const RibbonGraph& rg) {
    std::vector<int> img(2 * rg.n);
    for (int i = 0; i < 2 * rg.n; ++i) img[i] = rg.sigma0[i] + 1;
    return cycles_string(img);
}

std::string sigma2_string(const RibbonGraph& rg) {
    std::vector<int> img(2 * rg.n);
    for (int i = 0; i < 2 * rg.n; ++i) img[i] = rg.sigma2[i] + 1;
    return cycles_string(img);
}

RibbonGraph parse_sigma_file(const std::string& text) {
    std::string sigma0_txt, sigma2_txt, signs_txt;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        auto eq = line.find('=');
        if (eq == std::string::npos) continue;
        std::string key = line.substr(0, eq), val = line.substr(eq + 1);
        auto trim = [](std::string s) {
            size_t a = s.find_first_not_of(" \t\r");
            size_t b = s.find_last_not_of(" \t\r");
            return a == std::string::npos ? std::string() : s.substr(a, b - a + 1);
        };
        key = trim(key);
        val = trim(val);
        if (key == "sigma0")
            sigma0_txt = val;
        else if (key == "sigma2")
            sigma2_txt = val;
        else if (key == "signs")
            signs_txt = val;
        else
            fail("permutation file: unknown key '" + key + "'");
    }
    if (sigma0_txt.empty()) fail("permutation file: missing sigma0 line");
    std::vector<int> img = parse_cycles(sigma0_txt);
    std::vector<int> signs;
    for (char c : signs_txt) {
        if (c == '+')
            signs.push_back(+1);
        else if (c == '-')
            signs.push_back(-1);
        else if (!std::isspace(static_cast<unsigned char>(c)))
            fail("permutation file: signs must be + or -");
    }
    if (!signs.empty() && signs.size() * 2 != img.size())
        fail("permutation file: need one sign per edge");
    RibbonGraph rg = ribbon_from_sigma0(img, signs);
    if (!sigma2_txt.empty()) {
        std::vector<int> claim = parse_cycles(sigma2_txt, 2 * rg.n);
        if (static_cast<int>(claim.size()) != 2 * rg.n)
            fail("permutation file: sigma2 domain mismatch");
        for (int m = 0; m < 2 * rg.n; ++m)
            if (claim[m] - 1 != rg.sigma2[m]) {
                std::ostringstream os;
                os << "sigma2 cross-check failed at mark " << m + 1 << ": file says "
                   << claim[m] << ", sigma1*sigma0^-1 gives " << rg.sigma2[m] + 1
                   << " (orbit " << sigma2_string(rg) << ")";
                fail(os.str());
            }
    }
    return rg;
}

}  // namespace qtkh
