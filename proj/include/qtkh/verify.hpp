#pragma once
// Cross-oracle consistency battery: every construction in the library is
// checked against an independent route (state-sum circle counts vs. boundary
// orbits, chord-rank genus vs. Euler genus, quasi-tree counts vs. the
// Matrix-Tree determinant, chord liveness vs. cut/cycle liveness, Euler
// characteristic vs. the Kauffman-bracket Jones polynomial, and invariance
// under relabelings that must not matter).

#include <cstdint>
#include <string>
#include <vector>

#include "qtkh/linkdiag.hpp"
#include "qtkh/ribbon.hpp"

namespace qtkh {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;  // empty when passing; counterexample text otherwise
};

struct VerifyReport {
    std::vector<CheckResult> checks;
    bool all_pass() const;
    int failed_count() const;
    void add(const std::string& name, bool pass, const std::string& detail = "");
};

struct VerifyOptions {
    std::uint64_t seed = 20260824;
    int trials = 100;      // randomized invariance trials
    int max_edges = 16;    // subset-enumeration guard
    bool with_jones = true;  // Euler characteristic vs. bracket (knots only)
};

// Full battery for a link diagram (both checkerboard shadings).
VerifyReport verify_diagram(const LinkDiagram& d, const VerifyOptions& opt = {});

// The subset of checks that make sense for a bare ribbon graph input.
VerifyReport verify_ribbon(const RibbonGraph& rg, const VerifyOptions& opt = {});

}  // namespace qtkh
