#include "qtkh/poly.hpp"

#include <bit>
#include <cstdlib>
#include <set>
#include <stdexcept>

#include "qtkh/treemodel.hpp"

namespace qtkh {

namespace {

[[noreturn]] void fail(const std::string& msg) {
    throw std::runtime_error("poly: " + msg);
}

long long mul_ll(long long a, long long b) {
    long long r;
    if (__builtin_mul_overflow(a, b, &r)) fail("coefficient overflow");
    return r;
}

long long add_ll(long long a, long long b) {
    long long r;
    if (__builtin_add_overflow(a, b, &r)) fail("coefficient overflow");
    return r;
}

}  // namespace

LaurentPoly LaurentPoly::one() {
    LaurentPoly p;
    p.terms[0] = 1;
    return p;
}

void LaurentPoly::add_term(int exp2, long long coef) {
    if (coef == 0) return;
    auto it = terms.find(exp2);
    if (it == terms.end()) {
        terms[exp2] = coef;
        return;
    }
    it->second = add_ll(it->second, coef);
    if (it->second == 0) terms.erase(it);
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
    for (auto [e, c] : o.terms) add_term(e, c);
    return *this;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
    LaurentPoly out;
    for (auto [e1, c1] : terms)
        for (auto [e2, c2] : o.terms) out.add_term(e1 + e2, mul_ll(c1, c2));
    return out;
}

LaurentPoly LaurentPoly::shifted(int exp2) const {
    LaurentPoly out;
    for (auto [e, c] : terms) out.terms[e + exp2] = c;
    return out;
}

LaurentPoly LaurentPoly::negated() const {
    LaurentPoly out;
    for (auto [e, c] : terms) out.terms[e] = -c;
    return out;
}

std::string LaurentPoly::str(const std::string& var) const {
    if (terms.empty()) return "0";
    std::string s;
    for (auto [e, c] : terms) {
        long long mag = c < 0 ? -c : c;
        if (s.empty())
            s += c < 0 ? "-" : "";
        else
            s += c < 0 ? " - " : " + ";
        std::string power;
        if (e != 0) {
            power = var + "^";
            if (e % 2 == 0)
                power += std::to_string(e / 2);
            else
                power += std::to_string(e) + "/2";
        }
        if (power.empty())
            s += std::to_string(mag);
        else if (mag == 1)
            s += power;
        else
            s += std::to_string(mag) + "*" + power;
    }
    return s;
}

LaurentPoly kauffman_bracket(const LinkDiagram& d) {
    const int n = d.n();
    if (n > 20) fail("too many crossings for the state sum");
    if (n == 0) return LaurentPoly::one();
    LaurentPoly delta;  // -A^2 - A^-2
    delta.terms[4] = -1;
    delta.terms[-4] = -1;
    std::vector<LaurentPoly> dpow(n + 1);
    dpow[0] = LaurentPoly::one();
    for (int k = 1; k <= n; ++k) dpow[k] = dpow[k - 1] * delta;

    LaurentPoly out;
    State s(n, Smoothing::A);
    for (uint32_t mask = 0; mask < (uint32_t(1) << n); ++mask) {
        for (int c = 0; c < n; ++c)
            s[c] = (mask >> c) & 1 ? Smoothing::B : Smoothing::A;
        int b = std::popcount(mask);
        int circles = smoothing_circle_count(d, s);
        if (circles < 1 || circles > n + 1) fail("internal: circle count");
        out += dpow[circles - 1].shifted(2 * (n - 2 * b));
    }
    return out;
}

LaurentPoly jones_from_bracket(const LinkDiagram& d) {
    LaurentPoly br = kauffman_bracket(d);
    const int w = writhe(d);
    LaurentPoly norm = br.shifted(-6 * w);
    if (w & 1) norm = norm.negated();
    LaurentPoly out;
    for (auto [ka, c] : norm.terms) {
        if (ka % 4 != 0) fail("internal: quarter exponent after normalization");
        out.add_term(-ka / 4, c);
    }
    return out;
}

IndexPair indices_from_grading(const Bigrading& g, const DiagramContext& ctx) {
    IndexPair p;
    p.j = 2 * (g.u - g.v + ctx.writhe - 1) + (ctx.rg_vertices - ctx.positive);
    p.i = p.j - g.u - ctx.writhe + 1;
    return p;
}

Bigrading grading_from_indices(const IndexPair& p, const DiagramContext& ctx) {
    Bigrading g;
    g.u = p.j - p.i - ctx.writhe + 1;
    int num = p.j - 2 * p.i + ctx.rg_vertices - ctx.positive;
    if (num & 1) fail("index pair has wrong parity");
    g.v = num / 2;
    return g;
}

int BigradedTable::thickness() const {
    std::set<int> vs;
    for (auto& [g, c] : counts) vs.insert(g.v);
    return static_cast<int>(vs.size());
}

BigradedTable build_table(const LinkDiagram& d, int shading, int max_edges) {
    if (d.component_count != 1) fail("bigraded table requires a knot diagram");
    BigradedTable tab;
    RibbonGraph rg = ribbon_from_diagram(d, shading);
    TaitGraph tait =
        shading < 0 ? tait_graph(d) : tait_graph_for_shading(d, shading);
    std::vector<int> tait_signs;
    for (const auto& e : tait.edges) tait_signs.push_back(e.sign);

    tab.ctx.writhe = writhe(d);
    tab.ctx.positive = positive_crossings(d);
    tab.ctx.rg_vertices = rg.vertex_count;
    tab.rg_genus = rg.genus();

    for (const QuasiTree& qt : enumerate_quasitrees(rg, max_edges)) {
        GeneratorRow row;
        row.quasitree = qt.edges;
        row.grading = qt.grading;
        row.genus = qt.genus;
        row.ij = indices_from_grading(qt.grading, tab.ctx);
        row.tree = tree_from_quasitree(rg, qt.edges);
        if (!is_spanning_tree(tait, row.tree))
            fail("partner subgraph is not a spanning tree");
        row.qt_word = activity_word_ascii(rg.n, qt.edges, qt.live);
        row.qt_word_pretty = activity_word_pretty(rg.n, qt.edges, qt.live);
        std::vector<char> tree_live = tree_activities(tait, row.tree);
        row.tree_word = activity_word_ascii(rg.n, row.tree, tree_live, tait_signs);
        row.tree_word_pretty =
            activity_word_pretty(rg.n, row.tree, tree_live, tait_signs);
        tab.counts[qt.grading] += 1;
        tab.chi_q.add_term(2 * row.ij.j, (row.ij.i & 1) ? -1 : 1);
        tab.rows.push_back(row);
    }
    return tab;
}

LaurentPoly apply_calibration(const LaurentPoly& chi_q, Calibration cal) {
    LaurentPoly out;
    for (auto [k, c] : chi_q.terms) {
        if (k & 1) fail("internal: half-integer q exponent");
        int j = k / 2;
        long long coef = c;
        if (cal.eps < 0 && ((j + 1) & 1)) coef = -coef;
        out.add_term(cal.sigma * (j + 1), coef);
    }
    return out;
}

std::vector<Calibration> calibrate_candidates(const LaurentPoly& chi_q,
                                              const LaurentPoly& jones_t) {
    std::vector<Calibration> out;
    for (int eps : {1, -1})
        for (int sigma : {1, -1})
            if (apply_calibration(chi_q, {eps, sigma}) == jones_t)
                out.push_back({eps, sigma});
    return out;
}

Calibration calibrate_on_anchors() {
    LinkDiagram unknot = LinkDiagram::unknot();
    LinkDiagram trefoil = parse_pd("X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)");

    auto chi = [](const LinkDiagram& d) { return build_table(d).chi_q; };
    LaurentPoly chi_u = chi(unknot), chi_t = chi(trefoil);
    LaurentPoly jones_u = jones_from_bracket(unknot);
    LaurentPoly jones_t = jones_from_bracket(trefoil);

    // eps is inert on a polynomial whose exponents j all have odd parity
    auto eps_inert = [](const LaurentPoly& p) {
        for (auto [k, c] : p.terms)
            if (((k / 2 + 1) & 1) != 0) return false;
        return true;
    };

    std::set<std::pair<int, int>> seen;
    std::vector<Calibration> unique;
    for (Calibration a : calibrate_candidates(chi_u, jones_u)) {
        bool also_trefoil = false;
        for (Calibration b : calibrate_candidates(chi_t, jones_t))
            if (a.eps == b.eps && a.sigma == b.sigma) also_trefoil = true;
        if (!also_trefoil) continue;
        Calibration canon = a;
        if (eps_inert(chi_u) && eps_inert(chi_t)) canon.eps = 1;
        if (seen.insert({canon.eps, canon.sigma}).second) unique.push_back(canon);
    }
    if (unique.size() != 1) fail("calibration is not unique");
    return unique[0];
}

JonesComparison compare_jones(const LinkDiagram& d, Calibration cal, int shading,
                              int max_edges) {
    JonesComparison cmp;
    cmp.chi_q = build_table(d, shading, max_edges).chi_q;
    cmp.chi_t = apply_calibration(cmp.chi_q, cal);
    cmp.jones_t = jones_from_bracket(d);
    cmp.equal = cmp.chi_t == cmp.jones_t;
    return cmp;
}

}  // namespace qtkh
