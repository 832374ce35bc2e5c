#pragma once

#include <map>
#include <optional>
#include <vector>

#include "lrc/codebook.hpp"

namespace lrc {

// Cap on the number of subsets a repair-set search may enumerate.
struct SearchBudget {
    std::size_t max_subsets = std::size_t{1} << 20;
};

// True iff coordinate i is a function of the coordinates in S across the
// whole codebook: any two words agreeing on S agree at i. S = {} means
// column i is constant.
bool determines(const Codebook& c, const CoordSet& s, int i);

// Smallest repair set for coordinate i, searching subsets of [n]\{i} by
// increasing cardinality and lexicographically within each cardinality.
// The first hit wins, which makes witnesses deterministic. nullopt when
// nothing of size <= size_cap works.
std::optional<CoordSet> min_repair_set(const Codebook& c, int i, int size_cap,
                                       const SearchBudget& budget = {});

// Every determining set for i of size <= size_cap, in search order.
std::vector<CoordSet> determining_sets(const Codebook& c, int i, int size_cap,
                                       const SearchBudget& budget = {});

struct LocalityEntry {
    int coordinate = 0;
    std::optional<int> locality;     // nullopt: nothing within the cap
    std::optional<CoordSet> witness; // canonical minimal repair set
};

using LocalityProfile = std::vector<LocalityEntry>;

LocalityProfile locality_profile(const Codebook& c, int size_cap,
                                 const SearchBudget& budget = {});

// Max locality over the information coordinates; nullopt if any of them
// has no repair set within the cap.
std::optional<int> information_locality(const SystematicCode& c, int size_cap,
                                        const SearchBudget& budget = {});

// For each member of the group, whether the remaining members determine it.
std::map<int, bool> reversibility_check(const Codebook& c, const CoordSet& group);

}  // namespace lrc
