#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "lrc/codebook.hpp"
#include "lrc/locality.hpp"

namespace lrc {

struct ItemVerdict {
    bool pass = false;
    std::string detail;  // witness on pass, counterexample on failure
};

// Outcome of the structure verifiers. `applicable` distinguishes
// "hypotheses unmet" from "theorem falsified": items are only meaningful
// when the report is applicable.
struct StructureReport {
    bool applicable = false;
    std::string reason;  // why not applicable
    bool optimal = false;
    std::vector<CoordSet> groups;  // repair groups S + {i}, sorted
    CoordSet info_coords;          // I
    CoordSet light_parities;       // L: parity coordinates inside groups
    CoordSet heavy_parities;       // H: parity coordinates outside groups
    std::map<std::string, ItemVerdict> items;
    std::optional<int> heavy_bound;  // k - (k/r - 1)(d - 3)

    bool all_pass() const;
};

// Item checks for repair-group structure on an optimal code with r | k,
// r < k: every repair set of size <= r for an information coordinate has
// size exactly r (t4_1), every group is reversible (t4_2), groups are
// pairwise equal or disjoint (t4_3), and a relabeling into the
// information/light/heavy normal form exists (t4_4).
StructureReport verify_theorem4(const SystematicCode& c, int r,
                                const SearchBudget& budget = {});

// Item checks for the parity partition when additionally d < r + 3:
// light parities each depend on one disjoint size-r information group
// (t5_1), heavy parities depend on every information symbol (t5_2), light
// parities have locality exactly r (t5_3), and heavy parities have no
// repair set smaller than k - (k/r - 1)(d - 3) (t5_4).
StructureReport verify_theorem5(const SystematicCode& c, int r,
                                const SearchBudget& budget = {});

// Both verifiers with their item verdicts merged into one report.
// Theorem-5 items are included only when d < r + 3.
StructureReport verify_structure(const SystematicCode& c, int r,
                                 const SearchBudget& budget = {});

// Strong dependency test for a parity coordinate h: every pair of encoder
// inputs differing in exactly one information coordinate must produce
// encodings differing at h. `info_groups` is the partition of [k] into
// locality groups; h must be a parity coordinate outside all of them.
bool heavy_dependency_check(const SystematicCode& c, int h,
                            const std::vector<CoordSet>& info_groups);

}  // namespace lrc
