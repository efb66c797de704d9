#pragma once
// Exact Laurent polynomials (doubled exponents so half-integer powers stay
// integral), the Kauffman-bracket state sum with its Jones normalization,
// the (u,v) <-> (i,j) index maps, the bigraded generator table, and the
// one-time variable calibration between the q- and t-conventions.

#include <map>
#include <string>
#include <vector>

#include "qtkh/linkdiag.hpp"
#include "qtkh/quasitree.hpp"

namespace qtkh {

// Coefficient map keyed by twice the exponent: key k stands for x^(k/2).
struct LaurentPoly {
    std::map<int, long long> terms;

    static LaurentPoly one();
    bool is_zero() const { return terms.empty(); }
    void add_term(int exp2, long long coef);
    LaurentPoly& operator+=(const LaurentPoly& o);
    LaurentPoly operator*(const LaurentPoly& o) const;
    LaurentPoly shifted(int exp2) const;  // multiply by x^(exp2/2)
    LaurentPoly negated() const;
    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
        return a.terms == b.terms;
    }
    // "-q^-4 + q^-3 + 2*q^-1" style; odd doubled exponents print as p/2
    std::string str(const std::string& var) const;
};

// Sum over all smoothing states of A^(#A-#B) * (-A^2-A^-2)^(circles-1),
// returned in the variable A.
LaurentPoly kauffman_bracket(const LinkDiagram& d);

// (-A^3)^(-writhe) * bracket, then A = t^(-1/4); returned in t.
LaurentPoly jones_from_bracket(const LinkDiagram& d);

// Diagram numbers the (u,v) <-> (i,j) affine maps depend on.
struct DiagramContext {
    int writhe = 0;
    int positive = 0;     // positive crossings
    int rg_vertices = 1;  // circles of the all-A smoothing
};

struct IndexPair {
    int i = 0;
    int j = 0;
};

// j = 2(u - v + w - 1) + (V_rg - c+), i = j - u - w + 1, and back.
IndexPair indices_from_grading(const Bigrading& g, const DiagramContext& ctx);
Bigrading grading_from_indices(const IndexPair& p, const DiagramContext& ctx);

struct GeneratorRow {
    EdgeMask quasitree = 0;
    EdgeMask tree = 0;
    Bigrading grading;
    int genus = 0;
    IndexPair ij;
    std::string qt_word, qt_word_pretty;      // no sign bars
    std::string tree_word, tree_word_pretty;  // bars on negative edges
};

struct BigradedTable {
    DiagramContext ctx;
    int rg_genus = 0;
    std::vector<GeneratorRow> rows;            // quasi-tree masks ascending
    std::map<Bigrading, long long> counts;
    LaurentPoly chi_q;                         // sum of (-1)^i q^j
    int thickness() const;                     // distinct v values
};

// Full pipeline for one diagram: ribbon graph, quasi-trees, partner trees
// with tree-side activities, indices, Euler characteristic.  shading -1 =
// automatic choice; 0/1 force a checkerboard class.
BigradedTable build_table(const LinkDiagram& d, int shading = -1,
                          int max_edges = 16);

// Substitution q -> eps * t^(sigma/2) applied to a q-polynomial, including
// the overall eps * t^(sigma/2) unit factor that sends the zero-crossing
// unknot's characteristic to 1.
struct Calibration {
    int eps = 1;    // +1 or -1
    int sigma = 1;  // +1 or -1
};
LaurentPoly apply_calibration(const LaurentPoly& chi_q, Calibration cal);

// All (eps, sigma) under which chi matches the target exactly.
std::vector<Calibration> calibrate_candidates(const LaurentPoly& chi_q,
                                              const LaurentPoly& jones_t);

// Intersect the candidate sets of the zero-crossing unknot and a trefoil,
// canonicalize eps to +1 when every exponent leaves it inert, and require a
// unique survivor.
Calibration calibrate_on_anchors();

struct JonesComparison {
    LaurentPoly chi_q;    // in q
    LaurentPoly chi_t;    // calibrated, in t
    LaurentPoly jones_t;  // bracket oracle, in t
    bool equal = false;
};
JonesComparison compare_jones(const LinkDiagram& d, Calibration cal,
                              int shading = -1, int max_edges = 16);

}  // namespace qtkh
