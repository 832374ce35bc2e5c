#include "lrc/locality.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <string>
#include <unordered_map>

namespace lrc {

namespace {

std::uint64_t pack_projection(const Word& w, const CoordSet& s, int bits) {
    std::uint64_t key = 0;
    for (int c : s) key = (key << bits) | w[c];
    return key;
}

bool determines_packed(const Codebook& c, const CoordSet& s, int i, int bits) {
    std::unordered_map<std::uint64_t, Symbol> seen;
    seen.reserve(c.size() * 2);
    for (const Word& w : c.words()) {
        auto [it, inserted] = seen.try_emplace(pack_projection(w, s, bits), w[i]);
        if (!inserted && it->second != w[i]) return false;
    }
    return true;
}

bool determines_sorted(const Codebook& c, const CoordSet& s, int i) {
    std::vector<std::size_t> order(c.size());
    for (std::size_t idx = 0; idx < order.size(); ++idx) order[idx] = idx;
    auto proj_less = [&](std::size_t a, std::size_t b) {
        for (int coord : s) {
            if (c.word(a)[coord] != c.word(b)[coord]) {
                return c.word(a)[coord] < c.word(b)[coord];
            }
        }
        return false;
    };
    std::sort(order.begin(), order.end(), proj_less);
    for (std::size_t idx = 1; idx < order.size(); ++idx) {
        const bool same_group = !proj_less(order[idx - 1], order[idx]);
        if (same_group && c.word(order[idx - 1])[i] != c.word(order[idx])[i]) {
            return false;
        }
    }
    return true;
}

// Number of subsets a search up to `size_cap` will touch, saturating, for
// the budget check.
std::size_t subset_count(int pool, int size_cap, std::size_t saturate_at) {
    std::size_t total = 0;
    for (int s = 0; s <= size_cap; ++s) {
        // C(pool, s), saturating
        std::size_t binom = 1;
        for (int t = 0; t < s; ++t) {
            if (binom > saturate_at) break;
            binom = binom * static_cast<std::size_t>(pool - t) / (t + 1);
        }
        total += binom;
        if (total > saturate_at) return saturate_at + 1;
    }
    return total;
}

void check_cap_and_budget(const Codebook& c, int i, int size_cap,
                          const SearchBudget& budget) {
    if (i < 0 || i >= c.n()) {
        throw ShapeError("coordinate " + std::to_string(i + 1) + " outside [1, " +
                         std::to_string(c.n()) + "]");
    }
    if (size_cap < 0 || size_cap > c.n() - 1) {
        throw ShapeError("size cap " + std::to_string(size_cap) +
                         " outside [0, n - 1]");
    }
    const std::size_t count = subset_count(c.n() - 1, size_cap, budget.max_subsets);
    if (count > budget.max_subsets) {
        throw TooLarge("repair-set search would enumerate more than " +
                       std::to_string(budget.max_subsets) + " subsets");
    }
}

// Enumerates subsets of the coordinates != i by increasing cardinality,
// lexicographic within each; calls visit(S) until it returns true.
template <typename Visit>
void for_each_subset(int n, int i, int size_cap, Visit&& visit) {
    CoordSet pool;
    pool.reserve(n - 1);
    for (int c = 0; c < n; ++c) {
        if (c != i) pool.push_back(c);
    }
    const int m = static_cast<int>(pool.size());
    for (int s = 0; s <= size_cap; ++s) {
        if (s > m) break;
        std::vector<int> idx(s);
        for (int t = 0; t < s; ++t) idx[t] = t;
        while (true) {
            CoordSet subset(s);
            for (int t = 0; t < s; ++t) subset[t] = pool[idx[t]];
            if (visit(subset)) return;
            // next combination
            int t = s - 1;
            while (t >= 0 && idx[t] == m - s + t) --t;
            if (t < 0) break;
            ++idx[t];
            for (int u = t + 1; u < s; ++u) idx[u] = idx[u - 1] + 1;
        }
    }
}

}  // namespace

bool determines(const Codebook& c, const CoordSet& s_raw, int i) {
    const CoordSet s = normalized_coords(s_raw, c.n());
    if (i < 0 || i >= c.n()) {
        throw ShapeError("coordinate " + std::to_string(i + 1) + " outside [1, " +
                         std::to_string(c.n()) + "]");
    }
    if (std::binary_search(s.begin(), s.end(), i)) {
        throw ShapeError("target coordinate " + std::to_string(i + 1) +
                         " inside its own repair set");
    }
    if (s.empty()) {
        for (const Word& w : c.words()) {
            if (w[i] != c.word(0)[i]) return false;
        }
        return true;
    }
    const int bits = std::bit_width(static_cast<unsigned>(c.q() - 1));
    if (s.size() * static_cast<std::size_t>(bits) <= 64) {
        return determines_packed(c, s, i, bits);
    }
    return determines_sorted(c, s, i);
}

std::optional<CoordSet> min_repair_set(const Codebook& c, int i, int size_cap,
                                       const SearchBudget& budget) {
    check_cap_and_budget(c, i, size_cap, budget);
    std::optional<CoordSet> found;
    for_each_subset(c.n(), i, size_cap, [&](const CoordSet& s) {
        if (determines(c, s, i)) {
            found = s;
            return true;
        }
        return false;
    });
    return found;
}

std::vector<CoordSet> determining_sets(const Codebook& c, int i, int size_cap,
                                       const SearchBudget& budget) {
    check_cap_and_budget(c, i, size_cap, budget);
    std::vector<CoordSet> all;
    for_each_subset(c.n(), i, size_cap, [&](const CoordSet& s) {
        if (determines(c, s, i)) all.push_back(s);
        return false;
    });
    return all;
}

LocalityProfile locality_profile(const Codebook& c, int size_cap,
                                 const SearchBudget& budget) {
    LocalityProfile profile;
    profile.reserve(c.n());
    for (int i = 0; i < c.n(); ++i) {
        LocalityEntry entry;
        entry.coordinate = i;
        if (auto witness = min_repair_set(c, i, size_cap, budget)) {
            entry.locality = static_cast<int>(witness->size());
            entry.witness = std::move(*witness);
        }
        profile.push_back(std::move(entry));
    }
    return profile;
}

std::optional<int> information_locality(const SystematicCode& c, int size_cap,
                                        const SearchBudget& budget) {
    int worst = 0;
    for (int i = 0; i < c.k(); ++i) {
        const auto witness = min_repair_set(c.base(), i, size_cap, budget);
        if (!witness) return std::nullopt;
        worst = std::max(worst, static_cast<int>(witness->size()));
    }
    return worst;
}

std::map<int, bool> reversibility_check(const Codebook& c, const CoordSet& group_raw) {
    const CoordSet group = normalized_coords(group_raw, c.n());
    if (group.size() < 2) {
        throw ShapeError("reversibility needs a group of at least two coordinates");
    }
    std::map<int, bool> verdicts;
    for (int member : group) {
        CoordSet rest;
        rest.reserve(group.size() - 1);
        for (int other : group) {
            if (other != member) rest.push_back(other);
        }
        verdicts[member] = determines(c, rest, member);
    }
    return verdicts;
}

}  // namespace lrc
