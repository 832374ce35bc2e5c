#pragma once

#include <string>
#include <utility>
#include <vector>

#include "lrc/codebook.hpp"
#include "lrc/locality.hpp"

namespace lrc {

// One iteration of the sub-code extraction loop: coordinate i was chosen
// together with a repair set S; T = S minus everything already fixed; the
// surviving sub-code keeps the words whose S-projection equals sigma.
struct SubcodeStep {
    int i = 0;
    CoordSet S;
    CoordSet T;
    std::vector<Symbol> sigma;  // over S in ascending coordinate order
    std::size_t size_after = 0;

    int t() const { return static_cast<int>(T.size()); }
};

struct SubcodeTrace {
    std::vector<SubcodeStep> steps;
    int ell = 0;        // largest j with |C_j| > 1
    CoordSet R_final;   // union of S_j + {i_j} over the first ell steps
    // Populated only when run with retain_subcodes: the words of C_j after
    // each step, for restricted-code analyses.
    std::vector<std::vector<Word>> retained;
};

// Steps to replay verbatim before automatic selection takes over. Each
// pair must satisfy the eligibility rule of the step it lands on.
struct Strategy {
    std::vector<std::pair<int, CoordSet>> forced_steps;

    static Strategy automatic() { return {}; }
    static Strategy forced(std::vector<std::pair<int, CoordSet>> steps) {
        return Strategy{std::move(steps)};
    }
};

// Runs the sub-code extraction loop to a single word, recording the full
// trace. Automatic selection picks the smallest-index information
// coordinate not yet fixed whose canonical minimal repair set has size
// <= r; sigma ties break lexicographically. Repair sets are always
// evaluated against the full code.
SubcodeTrace run_subcode(const SystematicCode& c, int r,
                         const Strategy& strategy = {},
                         const SearchBudget& budget = {},
                         bool retain_subcodes = false);

struct BoundReport {
    int n = 0, k = 0, d = 0, r = 0;
    int rhs = 0;          // k + ceil(k/r) + d - 2
    bool holds = false;   // n >= rhs
    bool optimal = false; // n == rhs
};

BoundReport check_locality_bound(int n, int k, int d, int r);

// Checks that a trace exhibits the equalities every valid run on an
// optimal code must show: full-width steps, ell = k/r - 1, sub-code sizes
// q^(k - r j), and pairwise-disjoint groups of r+1 coordinates. A failing
// check falsifies the optimality claim.
struct TightnessReport {
    bool steps_full_width = true;  // t_j = |S_j| = r for every step
    bool ell_matches = true;       // ell = k/r - 1
    bool sizes_match = true;       // |C_j| = q^(k - r j)
    bool groups_disjoint = true;   // {S_j + {i_j}} disjoint, r+1 elements each
    int expected_ell = 0;
    std::string detail;            // first offending step, when any

    bool pass() const {
        return steps_full_width && ell_matches && sizes_match && groups_disjoint;
    }
};

TightnessReport verify_trace_tightness(const SubcodeTrace& trace, int k, int r,
                                       int q);

// True iff the projection onto the disjoint union of the sets takes all
// q^k values (each exactly once). Requires total size k.
bool independence_check(const SystematicCode& c,
                        const std::vector<CoordSet>& sets);

}  // namespace lrc
