#include "lrc/subcode.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <string>

namespace lrc {

namespace {

std::uint64_t ipow(std::uint64_t base, int exp) {
    std::uint64_t result = 1;
    for (int i = 0; i < exp; ++i) result *= base;
    return result;
}

std::vector<Symbol> project(const Word& w, const CoordSet& s) {
    std::vector<Symbol> out;
    out.reserve(s.size());
    for (int c : s) out.push_back(w[c]);
    return out;
}

std::string set_str(const CoordSet& s) {
    std::string out = "{";
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(s[i] + 1);
    }
    return out + "}";
}

}  // namespace

SubcodeTrace run_subcode(const SystematicCode& code, int r,
                         const Strategy& strategy, const SearchBudget& budget,
                         bool retain_subcodes) {
    const Codebook& base = code.base();
    const int n = base.n();
    if (r < 1 || r > n - 1) {
        throw ShapeError("locality parameter r = " + std::to_string(r) +
                         " outside [1, n - 1]");
    }

    std::vector<std::uint32_t> current(base.size());
    for (std::uint32_t idx = 0; idx < current.size(); ++idx) current[idx] = idx;

    std::vector<char> fixed(n, 0);  // membership in R_{j-1}
    // Repair sets never change across iterations (they are properties of
    // the full code), so compute each information coordinate's canonical
    // set at most once.
    std::vector<std::optional<std::optional<CoordSet>>> repair_cache(code.k());

    SubcodeTrace trace;
    std::size_t forced_used = 0;

    while (current.size() > 1) {
        int chosen = -1;
        CoordSet repair;

        if (forced_used < strategy.forced_steps.size()) {
            const auto& [i, s_raw] = strategy.forced_steps[forced_used];
            ++forced_used;
            if (i < 0 || i >= n) {
                throw InvalidStrategy("forced coordinate " + std::to_string(i + 1) +
                                      " outside [1, " + std::to_string(n) + "]");
            }
            if (fixed[i]) {
                throw InvalidStrategy("forced coordinate " + std::to_string(i + 1) +
                                      " already fixed in a previous step");
            }
            const CoordSet s = normalized_coords(s_raw, n);
            if (static_cast<int>(s.size()) > r) {
                throw InvalidStrategy("forced repair set " + set_str(s) +
                                      " larger than r = " + std::to_string(r));
            }
            if (std::binary_search(s.begin(), s.end(), i)) {
                throw InvalidStrategy("forced repair set contains its target " +
                                      std::to_string(i + 1));
            }
            if (!determines(base, s, i)) {
                throw InvalidStrategy("forced set " + set_str(s) +
                                      " does not determine coordinate " +
                                      std::to_string(i + 1));
            }
            chosen = i;
            repair = s;
        } else {
            for (int cand = 0; cand < code.k(); ++cand) {
                if (fixed[cand]) continue;
                if (!repair_cache[cand]) {
                    repair_cache[cand] = min_repair_set(base, cand, r, budget);
                }
                if (repair_cache[cand]->has_value()) {
                    chosen = cand;
                    repair = **repair_cache[cand];
                    break;
                }
            }
            if (chosen < 0) {
                throw InternalInvariantViolation(
                    "no eligible coordinate although the sub-code still has " +
                    std::to_string(current.size()) +
                    " words; the input cannot have information locality " +
                    std::to_string(r));
            }
        }

        SubcodeStep step;
        step.i = chosen;
        step.S = repair;
        for (int c : repair) {
            if (!fixed[c]) step.T.push_back(c);
        }

        // Most frequent projection onto S; an ordered map makes the
        // lexicographically smallest win ties.
        std::map<std::vector<Symbol>, std::size_t> counts;
        for (std::uint32_t idx : current) {
            ++counts[project(base.word(idx), repair)];
        }
        const std::vector<Symbol>* best = nullptr;
        std::size_t best_count = 0;
        for (const auto& [sigma, count] : counts) {
            if (count > best_count) {
                best = &sigma;
                best_count = count;
            }
        }
        step.sigma = *best;

        std::vector<std::uint32_t> survivors;
        survivors.reserve(best_count);
        for (std::uint32_t idx : current) {
            if (project(base.word(idx), repair) == step.sigma) {
                survivors.push_back(idx);
            }
        }
        current = std::move(survivors);
        step.size_after = current.size();

        fixed[chosen] = 1;
        for (int c : repair) fixed[c] = 1;

        if (retain_subcodes) {
            std::vector<Word> words;
            words.reserve(current.size());
            for (std::uint32_t idx : current) words.push_back(base.word(idx));
            trace.retained.push_back(std::move(words));
        }
        trace.steps.push_back(std::move(step));
    }

    if (forced_used < strategy.forced_steps.size()) {
        throw InvalidStrategy("the code shrank to one word before " +
                              std::to_string(strategy.forced_steps.size() - forced_used) +
                              " forced step(s) could run");
    }

    trace.ell = static_cast<int>(trace.steps.size()) - 1;
    std::vector<char> in_r(n, 0);
    for (int j = 0; j < trace.ell; ++j) {
        in_r[trace.steps[j].i] = 1;
        for (int c : trace.steps[j].S) in_r[c] = 1;
    }
    for (int c = 0; c < n; ++c) {
        if (in_r[c]) trace.R_final.push_back(c);
    }
    return trace;
}

BoundReport check_locality_bound(int n, int k, int d, int r) {
    if (n < 1 || k < 1 || d < 1 || r < 1 || r > k || k > n) {
        throw ShapeError("need 1 <= r <= k <= n and d >= 1");
    }
    BoundReport report;
    report.n = n;
    report.k = k;
    report.d = d;
    report.r = r;
    report.rhs = k + (k + r - 1) / r + d - 2;
    report.holds = n >= report.rhs;
    report.optimal = n == report.rhs;
    return report;
}

TightnessReport verify_trace_tightness(const SubcodeTrace& trace, int k, int r,
                                       int q) {
    if (k < 1 || r < 1 || q < 2 || r > k || k % r != 0) {
        throw ShapeError("tightness check needs q >= 2 and r | k");
    }
    TightnessReport report;
    report.expected_ell = k / r - 1;
    auto note = [&](const std::string& msg) {
        if (report.detail.empty()) report.detail = msg;
    };

    for (std::size_t j = 0; j < trace.steps.size(); ++j) {
        const SubcodeStep& step = trace.steps[j];
        if (step.t() != r || static_cast<int>(step.S.size()) != r) {
            report.steps_full_width = false;
            note("step " + std::to_string(j + 1) + " fixed t = " +
                 std::to_string(step.t()) + " fresh coordinates with |S| = " +
                 std::to_string(step.S.size()) + ", expected " + std::to_string(r));
            break;
        }
    }

    if (trace.ell != report.expected_ell) {
        report.ell_matches = false;
        note("ell = " + std::to_string(trace.ell) + ", expected k/r - 1 = " +
             std::to_string(report.expected_ell));
    }

    for (std::size_t j = 0; j < trace.steps.size(); ++j) {
        const int exponent = k - r * static_cast<int>(j + 1);
        const std::uint64_t expected =
            exponent >= 0 ? ipow(static_cast<std::uint64_t>(q), exponent) : 0;
        if (exponent < 0 || trace.steps[j].size_after != expected) {
            report.sizes_match = false;
            note("step " + std::to_string(j + 1) + " left " +
                 std::to_string(trace.steps[j].size_after) +
                 " words, expected q^(k - r j) = " + std::to_string(expected));
            break;
        }
    }

    std::map<int, std::size_t> owner;
    for (std::size_t j = 0; j < trace.steps.size() && report.groups_disjoint; ++j) {
        CoordSet group = trace.steps[j].S;
        group.push_back(trace.steps[j].i);
        std::sort(group.begin(), group.end());
        if (std::adjacent_find(group.begin(), group.end()) != group.end() ||
            static_cast<int>(group.size()) != r + 1) {
            report.groups_disjoint = false;
            note("step " + std::to_string(j + 1) + " group does not have r + 1 = " +
                 std::to_string(r + 1) + " distinct coordinates");
            break;
        }
        for (int c : group) {
            auto [it, inserted] = owner.try_emplace(c, j);
            if (!inserted) {
                report.groups_disjoint = false;
                note("coordinate " + std::to_string(c + 1) + " appears in steps " +
                     std::to_string(it->second + 1) + " and " + std::to_string(j + 1));
                break;
            }
        }
    }
    return report;
}

bool independence_check(const SystematicCode& code,
                        const std::vector<CoordSet>& sets) {
    CoordSet all;
    for (const CoordSet& s : sets) {
        const CoordSet norm = normalized_coords(s, code.n());
        all.insert(all.end(), norm.begin(), norm.end());
    }
    std::sort(all.begin(), all.end());
    if (std::adjacent_find(all.begin(), all.end()) != all.end()) {
        throw ShapeError("coordinate sets overlap");
    }
    if (static_cast<int>(all.size()) != code.k()) {
        throw ShapeError("sets cover " + std::to_string(all.size()) +
                         " coordinates, expected k = " + std::to_string(code.k()));
    }
    return mds_projection_check(code.base(), all).bijective;
}

}  // namespace lrc
