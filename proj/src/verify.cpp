#include "qtkh/verify.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <sstream>

#include "qtkh/poly.hpp"
#include "qtkh/quasitree.hpp"
#include "qtkh/treemodel.hpp"

namespace qtkh {

bool VerifyReport::all_pass() const {
    for (const CheckResult& c : checks)
        if (!c.pass) return false;
    return true;
}

int VerifyReport::failed_count() const {
    int k = 0;
    for (const CheckResult& c : checks) k += c.pass ? 0 : 1;
    return k;
}

void VerifyReport::add(const std::string& name, bool pass,
                       const std::string& detail) {
    checks.push_back({name, pass, pass ? std::string() : detail});
}

namespace {

using Counts = std::map<Bigrading, long long>;

Counts grading_counts(const std::vector<QuasiTree>& qts) {
    Counts c;
    for (const QuasiTree& q : qts) c[q.grading] += 1;
    return c;
}

std::string counts_str(const Counts& c) {
    std::ostringstream os;
    for (auto& [g, k] : c) os << "(" << g.u << "," << g.v << "):" << k << " ";
    return os.str();
}

std::string mask_str(EdgeMask m) {
    std::ostringstream os;
    os << "{";
    bool first = true;
    for (int e = 0; e < 32; ++e)
        if (mask_has(m, e)) {
            os << (first ? "" : ",") << e + 1;
            first = false;
        }
    os << "}";
    return os.str();
}

}  // namespace

VerifyReport verify_diagram(const LinkDiagram& d, const VerifyOptions& opt) {
    VerifyReport rep;
    const int n = d.n();
    std::mt19937_64 rng(opt.seed);
    RibbonGraph rg = ribbon_from_diagram(d);

    // Boundary orbits of a spanning subgraph against the smoothing oracle:
    // the subgraph with exactly the edges of H picks B-smoothings on H.
    {
        bool ok = true;
        std::string detail;
        auto check_mask = [&](uint32_t mask) {
            State s(n, Smoothing::A);
            for (int c = 0; c < n; ++c)
                if (mask_has(mask, c)) s[c] = Smoothing::B;
            int faces = rg.face_count_of_subgraph(mask);
            int circles = smoothing_circle_count(d, s);
            if (faces != circles && ok) {
                ok = false;
                std::ostringstream os;
                os << "subgraph " << mask_str(mask) << ": " << faces
                   << " boundary orbits vs " << circles << " circles";
                detail = os.str();
            }
        };
        if (n <= 10) {
            for (uint32_t mask = 0; mask < (uint32_t(1) << n); ++mask)
                check_mask(mask);
        } else {
            check_mask(0);
            check_mask((uint32_t(1) << n) - 1);
            for (int t = 0; t < 512; ++t)
                check_mask(static_cast<uint32_t>(rng()) &
                           ((uint32_t(1) << n) - 1));
        }
        rep.add("faces-vs-circles", ok, detail);
    }

    std::vector<QuasiTree> qts = enumerate_quasitrees(rg, opt.max_edges);
    rep.add("quasitrees-nonempty", !qts.empty(), "no quasi-tree found");

    // Genus two ways: GF(2) chord rank against the Euler count.
    {
        bool ok = true;
        std::string detail;
        for (const QuasiTree& q : qts) {
            ChordDiagram cd = chord_diagram(rg, q.edges);
            int gc = genus_from_chords(cd, q.edges);
            if (gc != q.genus) {
                ok = false;
                std::ostringstream os;
                os << "quasi-tree " << mask_str(q.edges) << ": chord rank gives "
                   << gc << ", Euler count gives " << q.genus;
                detail = os.str();
                break;
            }
        }
        rep.add("genus-two-routes", ok, detail);
    }

    // Genus window and the thickness bound.
    {
        bool ok = true;
        std::string detail;
        int rg_genus = rg.genus();
        std::set<int> vs;
        for (const QuasiTree& q : qts) {
            vs.insert(q.grading.v);
            if (q.genus < 0 || q.genus > rg_genus) {
                ok = false;
                detail = "quasi-tree " + mask_str(q.edges) +
                         " genus outside [0, ambient genus]";
                break;
            }
        }
        if (ok && static_cast<int>(vs.size()) > rg_genus + 1) {
            ok = false;
            detail = "more distinct v-gradings than ambient genus + 1";
        }
        rep.add("genus-window-and-thickness", ok, detail);
    }

    // Both checkerboard classes: counts against the Matrix-Tree determinant,
    // the membership-swap bijection, liveness and grading transport.
    Counts base_counts = grading_counts(qts);
    for (int shading = 0; shading < 2; ++shading) {
        std::string tag = "[shading " + std::to_string(shading) + "]";
        RibbonGraph rgs = ribbon_from_diagram(d, shading);
        TaitGraph tait = tait_graph_for_shading(d, shading);
        std::vector<QuasiTree> qs = enumerate_quasitrees(rgs, opt.max_edges);
        std::vector<EdgeMask> trees = spanning_tree_masks(tait);
        long long det = spanning_tree_count(tait);

        {
            bool ok = qs.size() == trees.size() &&
                      det == static_cast<long long>(trees.size());
            std::ostringstream os;
            os << qs.size() << " quasi-trees, " << trees.size()
               << " spanning trees, determinant " << det;
            rep.add("counts-vs-matrix-tree" + tag, ok, os.str());
        }

        {
            bool ok = true;
            std::string detail;
            std::set<EdgeMask> tree_set(trees.begin(), trees.end());
            std::set<EdgeMask> image;
            for (const QuasiTree& q : qs) {
                EdgeMask t = tree_from_quasitree(rgs, q.edges);
                image.insert(t);
                if (!is_spanning_tree(tait, t)) {
                    ok = false;
                    detail = "image " + mask_str(t) + " of quasi-tree " +
                             mask_str(q.edges) + " is not a spanning tree";
                    break;
                }
                if (quasitree_from_tree(rgs, t) != q.edges) {
                    ok = false;
                    detail = "round trip moved " + mask_str(q.edges);
                    break;
                }
            }
            if (ok && image != tree_set) {
                ok = false;
                detail = "bijection image misses some spanning tree";
            }
            rep.add("bijection-identity" + tag, ok, detail);
        }

        {
            bool ok = true;
            std::string detail;
            for (const QuasiTree& q : qs) {
                EdgeMask t = tree_from_quasitree(rgs, q.edges);
                std::vector<char> tl = tree_activities(tait, t);
                if (tl != q.live) {
                    ok = false;
                    detail = "liveness differs on pair " + mask_str(q.edges) +
                             " <-> " + mask_str(t);
                    break;
                }
            }
            rep.add("liveness-chord-vs-cutcycle" + tag, ok, detail);
        }

        {
            bool ok = true;
            std::string detail;
            int num = tait.vertex_count + tait.positive_count() - rgs.vertex_count;
            if (num % 2 != 0) {
                ok = false;
                detail = "grading offset is not an integer";
            }
            int offset = num / 2;
            for (const QuasiTree& q : qs) {
                if (!ok) break;
                EdgeMask t = tree_from_quasitree(rgs, q.edges);
                SpanningTree st = tree_with_grading(tait, t);
                if (st.u != q.grading.u) {
                    ok = false;
                    detail = "u not preserved on pair " + mask_str(q.edges) +
                             " <-> " + mask_str(t);
                } else if (st.v + q.genus != offset) {
                    std::ostringstream os;
                    os << "v(T) + g(Q) = " << st.v + q.genus << " != " << offset
                       << " on pair " << mask_str(q.edges) << " <-> "
                       << mask_str(t);
                    ok = false;
                    detail = os.str();
                }
            }
            rep.add("tree-grading-transport" + tag, ok, detail);
        }

        {
            Counts cs = grading_counts(qs);
            rep.add("grading-counts-shading-free" + tag, cs == base_counts,
                    "shading changed the table: " + counts_str(cs) + "vs " +
                        counts_str(base_counts));
        }
    }

    // Euler characteristic against the bracket oracle (knots only).
    if (opt.with_jones && d.component_count == 1 && n <= 20) {
        Calibration cal = calibrate_on_anchors();
        JonesComparison cmp = compare_jones(d, cal, -1, opt.max_edges);
        rep.add("chi-vs-jones", cmp.equal,
                "chi = " + cmp.chi_t.str("t") + " but bracket gives " +
                    cmp.jones_t.str("t"));
    }

    // Randomized invariance: crossing reorderings and mark swaps must keep
    // the bigraded table.
    if (n > 0) {
        bool ok = true;
        std::string detail;
        std::vector<int> perm(n);
        std::iota(perm.begin(), perm.end(), 0);
        for (int t = 0; t < opt.trials && ok; ++t) {
            if (t % 2 == 0) {
                std::shuffle(perm.begin(), perm.end(), rng);
                LinkDiagram d2 = reorder_crossings(d, perm);
                Counts cs =
                    grading_counts(enumerate_quasitrees(ribbon_from_diagram(d2),
                                                        opt.max_edges));
                if (cs != base_counts) {
                    ok = false;
                    detail = "crossing reorder changed the table: " +
                             counts_str(cs) + "vs " + counts_str(base_counts);
                }
            } else {
                EdgeMask m = static_cast<EdgeMask>(rng()) &
                             ((EdgeMask(1) << n) - 1);
                Counts cs = grading_counts(
                    enumerate_quasitrees(rg.with_swapped_marks(m),
                                         opt.max_edges));
                if (cs != base_counts) {
                    ok = false;
                    detail = "mark swap " + mask_str(m) +
                             " changed the table: " + counts_str(cs) + "vs " +
                             counts_str(base_counts);
                }
            }
        }
        rep.add("relabeling-invariance", ok, detail);
    }

    return rep;
}

VerifyReport verify_ribbon(const RibbonGraph& rg, const VerifyOptions& opt) {
    VerifyReport rep;
    std::mt19937_64 rng(opt.seed);
    rep.add("connected", rg.connected, "ribbon graph is not connected");

    std::vector<QuasiTree> qts = enumerate_quasitrees(rg, opt.max_edges);
    rep.add("quasitrees-nonempty", !qts.empty(), "no quasi-tree found");

    {
        bool ok = true;
        std::string detail;
        for (const QuasiTree& q : qts) {
            int gc = genus_from_chords(chord_diagram(rg, q.edges), q.edges);
            if (gc != q.genus) {
                ok = false;
                detail = "quasi-tree " + mask_str(q.edges) +
                         ": chord rank disagrees with Euler count";
                break;
            }
        }
        rep.add("genus-two-routes", ok, detail);
    }

    {
        bool ok = true;
        std::string detail;
        int rg_genus = rg.genus();
        std::set<int> vs;
        for (const QuasiTree& q : qts) {
            vs.insert(q.grading.v);
            if (q.genus < 0 || q.genus > rg_genus) {
                ok = false;
                detail = "quasi-tree " + mask_str(q.edges) +
                         " genus outside [0, ambient genus]";
                break;
            }
        }
        if (ok && static_cast<int>(vs.size()) > rg_genus + 1) {
            ok = false;
            detail = "more distinct v-gradings than ambient genus + 1";
        }
        rep.add("genus-window-and-thickness", ok, detail);
    }

    {
        bool ok = true;
        std::string detail;
        for (const QuasiTree& q : qts) {
            EdgeMask t = tree_from_quasitree(rg, q.edges);
            if (quasitree_from_tree(rg, t) != q.edges) {
                ok = false;
                detail = "membership swap is not an involution on " +
                         mask_str(q.edges);
                break;
            }
        }
        rep.add("bijection-involution", ok, detail);
    }

    if (rg.n > 0) {
        bool ok = true;
        std::string detail;
        Counts base = grading_counts(qts);
        for (int t = 0; t < opt.trials && ok; ++t) {
            EdgeMask m =
                static_cast<EdgeMask>(rng()) & ((EdgeMask(1) << rg.n) - 1);
            Counts cs = grading_counts(
                enumerate_quasitrees(rg.with_swapped_marks(m), opt.max_edges));
            if (cs != base) {
                ok = false;
                detail = "mark swap " + mask_str(m) + " changed the table";
            }
        }
        rep.add("relabeling-invariance", ok, detail);
    }

    return rep;
}

}  // namespace qtkh
