#pragma once

#include <map>
#include <optional>
#include <vector>

#include "lrc/codebook.hpp"
#include "lrc/locality.hpp"

namespace lrc {

// A received word with some coordinates erased.
struct ErasurePattern {
    std::vector<std::optional<Symbol>> word;

    CoordSet erased() const;
};

struct RecoveryResult {
    enum class Status { Unique, Ambiguous, Inconsistent };

    Status status = Status::Inconsistent;
    std::optional<Word> word;      // when unique
    std::size_t match_count = 0;
};

// Scans the codebook for words matching every non-erased symbol. Unique
// whenever at most d - 1 coordinates of a codeword were erased.
RecoveryResult recover_erasures(const Codebook& c, const ErasurePattern& pattern);

struct LocalRepair {
    Symbol value = 0;
    CoordSet accessed;  // the witness set that was read
};

// Repairs each erased coordinate from its witness set in the profile,
// reporting the coordinates accessed. Throws NeedsGlobalRepair when some
// erased coordinate has no witness or its witness is itself erased.
std::map<int, LocalRepair> local_repair(const Codebook& c,
                                        const ErasurePattern& pattern,
                                        const LocalityProfile& profile);

}  // namespace lrc
