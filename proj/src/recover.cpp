#include "lrc/recover.hpp"

#include <algorithm>
#include <string>

namespace lrc {

namespace {

void validate_pattern(const Codebook& c, const ErasurePattern& pattern) {
    if (static_cast<int>(pattern.word.size()) != c.n()) {
        throw ShapeError("pattern length " + std::to_string(pattern.word.size()) +
                         " != n = " + std::to_string(c.n()));
    }
    for (const auto& symbol : pattern.word) {
        if (symbol && *symbol >= c.q()) {
            throw ShapeError("pattern symbol " + std::to_string(*symbol) +
                             " out of range for q = " + std::to_string(c.q()));
        }
    }
}

bool matches(const Word& w, const ErasurePattern& pattern) {
    for (std::size_t pos = 0; pos < w.size(); ++pos) {
        if (pattern.word[pos] && *pattern.word[pos] != w[pos]) return false;
    }
    return true;
}

}  // namespace

CoordSet ErasurePattern::erased() const {
    CoordSet out;
    for (std::size_t pos = 0; pos < word.size(); ++pos) {
        if (!word[pos]) out.push_back(static_cast<int>(pos));
    }
    return out;
}

RecoveryResult recover_erasures(const Codebook& c, const ErasurePattern& pattern) {
    validate_pattern(c, pattern);
    RecoveryResult result;
    for (const Word& w : c.words()) {
        if (!matches(w, pattern)) continue;
        if (++result.match_count == 1) {
            result.word = w;
        } else {
            result.word.reset();
        }
    }
    result.status = result.match_count == 0 ? RecoveryResult::Status::Inconsistent
                    : result.match_count == 1 ? RecoveryResult::Status::Unique
                                              : RecoveryResult::Status::Ambiguous;
    return result;
}

std::map<int, LocalRepair> local_repair(const Codebook& c,
                                        const ErasurePattern& pattern,
                                        const LocalityProfile& profile) {
    validate_pattern(c, pattern);
    const CoordSet erased = pattern.erased();

    std::map<int, LocalRepair> repairs;
    for (int coord : erased) {
        const LocalityEntry* entry = nullptr;
        for (const LocalityEntry& candidate : profile) {
            if (candidate.coordinate == coord) {
                entry = &candidate;
                break;
            }
        }
        if (!entry || !entry->witness) {
            throw NeedsGlobalRepair("coordinate " + std::to_string(coord + 1) +
                                    " has no witness set in the profile");
        }
        const CoordSet& witness = *entry->witness;
        for (int w : witness) {
            if (!pattern.word[w]) {
                throw NeedsGlobalRepair("witness of coordinate " +
                                        std::to_string(coord + 1) +
                                        " reads erased coordinate " +
                                        std::to_string(w + 1));
            }
        }
        // The witness determines the coordinate, so the first codeword
        // agreeing with the pattern on the witness carries the value.
        const Word* match = nullptr;
        for (const Word& w : c.words()) {
            bool agrees = true;
            for (int pos : witness) {
                if (*pattern.word[pos] != w[pos]) {
                    agrees = false;
                    break;
                }
            }
            if (agrees) {
                match = &w;
                break;
            }
        }
        if (!match) {
            throw NeedsGlobalRepair("witness values of coordinate " +
                                    std::to_string(coord + 1) +
                                    " match no codeword");
        }
        repairs[coord] = LocalRepair{(*match)[coord], witness};
    }
    return repairs;
}

}  // namespace lrc
