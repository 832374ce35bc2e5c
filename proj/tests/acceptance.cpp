// Acceptance suite: one pass/fail line per criterion, nonzero exit when
// anything fails. Everything here is exact; there are no tolerances.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#include "lrc/construct.hpp"
#include "lrc/json_io.hpp"
#include "lrc/recover.hpp"
#include "lrc/structure.hpp"
#include "lrc/subcode.hpp"
#include "oracles.hpp"

using namespace lrc;

namespace {

struct Check {
    bool ok = true;
    std::string detail;
    int asserts = 0;

    void require(bool condition, const std::string& message) {
        ++asserts;
        if (!condition && ok) {
            ok = false;
            detail = message;
        }
    }
};

int failures = 0;

template <typename Fn>
void criterion(int id, const std::string& name, Fn&& fn) {
    Check check;
    const auto start = std::chrono::steady_clock::now();
    try {
        fn(check);
    } catch (const std::exception& e) {
        check.require(false, std::string("exception: ") + e.what());
    }
    const auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                             std::chrono::steady_clock::now() - start)
                             .count();
    if (!check.ok) ++failures;
    std::printf("[%s] criterion %d: %s (%d checks, %lld ms)%s%s\n",
                check.ok ? "PASS" : "FAIL", id, name.c_str(), check.asserts,
                static_cast<long long>(elapsed), check.ok ? "" : " -- ",
                check.ok ? "" : check.detail.c_str());
    std::fflush(stdout);
}

std::string spec_str(int q, int k, int r, int d) {
    return "q=" + std::to_string(q) + " k=" + std::to_string(k) +
           " r=" + std::to_string(r) + " d=" + std::to_string(d);
}

// All repair groups of an optimal code: every determining set of size <= r
// per information coordinate, closed with its target.
std::vector<CoordSet> repair_groups(const SystematicCode& code, int r) {
    std::vector<CoordSet> groups;
    for (int i = 0; i < code.k(); ++i) {
        for (const CoordSet& s : determining_sets(code.base(), i, r)) {
            CoordSet group = s;
            group.push_back(i);
            std::sort(group.begin(), group.end());
            if (std::find(groups.begin(), groups.end(), group) == groups.end()) {
                groups.push_back(group);
            }
        }
    }
    return groups;
}

bool additively_closed(const Codebook& c) {
    for (std::size_t a = 0; a < c.size(); ++a) {
        for (std::size_t b = a; b < c.size(); ++b) {
            Word sum(c.n());
            for (int pos = 0; pos < c.n(); ++pos) {
                sum[pos] =
                    static_cast<Symbol>((c.word(a)[pos] + c.word(b)[pos]) % c.q());
            }
            if (!c.contains(sum)) return false;
        }
    }
    return true;
}

void criterion_1_bound_grid(Check& check) {
    int cases = 0;
    for (int q : {5, 7, 11}) {
        for (int k : {2, 4, 6}) {
            if (oracle::ipow(q, k) > 65536) continue;
            for (int r = 1; r < k; ++r) {
                if (k % r != 0) continue;
                for (int d : {2, 3, 4}) {
                    if (q < k + d - 1) continue;
                    ++cases;
                    const std::string tag = spec_str(q, k, r, d);
                    const SystematicCode code = build_pyramid({q, k, r, d});
                    check.require(code.n() == k + k / r + d - 2,
                                  tag + ": wrong block length");
                    check.require(min_distance(code.base()) == d,
                                  tag + ": min distance != d");
                    check.require(information_locality(code, r) == r,
                                  tag + ": information locality != r");
                    const BoundReport bound =
                        check_locality_bound(code.n(), k, d, r);
                    check.require(bound.holds && bound.optimal,
                                  tag + ": bound not met with equality");
                }
            }
        }
    }
    check.require(cases == 23, "expected 23 grid cases, got " + std::to_string(cases));
}

void criterion_2_singleton(Check& check) {
    const Codebook fixtures[] = {
        build_pyramid({7, 4, 2, 3}).base(),
        build_pyramid({5, 2, 1, 3}).base(),
        build_rs_mds(7, 3, 4).base(),
        build_rs_mds(2, 1, 2).base(),
        build_nonreversible_example(),
        Codebook(2, {{0, 0, 0}, {0, 1, 1}, {1, 0, 1}, {1, 1, 0}}),
        Codebook(2, {{0, 0, 0}, {1, 1, 1}}),
        twist(build_pyramid({7, 4, 2, 3}).base(), TwistSpec::seeded(1)),
    };
    for (const Codebook& c : fixtures) {
        check.require(check_singleton(c).holds, "fixture violates the Singleton bound");
    }

    oracle::Rng rng(481516);
    for (int trial = 0; trial < 100; ++trial) {
        const int q = 2 + static_cast<int>(rng.below(9));
        const int n = 2 + static_cast<int>(rng.below(7));
        const std::uint64_t space = oracle::ipow(q, n);
        const std::uint64_t want =
            2 + rng.below(std::min<std::uint64_t>(space - 1, 80));
        std::vector<Word> words;
        while (words.size() < want) {
            Word w(n);
            for (int i = 0; i < n; ++i) w[i] = static_cast<Symbol>(rng.below(q));
            if (std::find(words.begin(), words.end(), w) == words.end()) {
                words.push_back(std::move(w));
            }
        }
        std::vector<Word> sub;
        for (const Word& w : words) {
            if (rng.below(3) != 0) sub.push_back(w);
        }
        if (sub.size() < 2) sub.assign(words.begin(), words.begin() + 2);
        check.require(check_singleton(Codebook(q, sub)).holds,
                      "random sub-code violates the Singleton bound");
    }
}

void criterion_3_mds_projections(Check& check) {
    const Codebook rs = build_rs_mds(7, 3, 4).base();
    int count = 0;
    for (int a = 0; a < 6; ++a) {
        for (int b = a + 1; b < 6; ++b) {
            for (int c = b + 1; c < 6; ++c) {
                ++count;
                check.require(mds_projection_check(rs, {a, b, c}).bijective,
                              "projection {" + std::to_string(a + 1) + "," +
                                  std::to_string(b + 1) + "," + std::to_string(c + 1) +
                                  "} not bijective");
            }
        }
    }
    check.require(count == 20, "expected C(6,3) = 20 projections");
}

void criterion_4_trace_tightness(Check& check) {
    const SystematicCode pyramid = build_pyramid({7, 4, 2, 3});
    const SubcodeTrace trace = run_subcode(pyramid, 2);
    check.require(trace.ell == 1, "ell != 1");
    check.require(trace.steps.size() == 2, "expected 2 steps");
    check.require(pyramid.base().size() == 2401, "|C_0| != 2401");
    check.require(trace.steps[0].size_after == 49, "|C_1| != 49");
    check.require(trace.steps[1].size_after == 1, "|C_2| != 1");
    check.require(trace.steps[0].t() == 2 && trace.steps[1].t() == 2, "t_j != 2");
    check.require(verify_trace_tightness(trace, 4, 2, 7).pass(),
                  "automatic run not tight");

    // five distinct forced first steps: each information coordinate with
    // its unique size-r repair set, plus one group replayed the other way
    // around (light parity repaired from its information pair)
    const std::vector<std::pair<int, CoordSet>> first_steps = {
        {0, {1, 4}}, {1, {0, 4}}, {2, {3, 5}}, {3, {2, 5}}, {4, {0, 1}}};
    for (const auto& step : first_steps) {
        const SubcodeTrace forced =
            run_subcode(pyramid, 2, Strategy::forced({step}));
        check.require(verify_trace_tightness(forced, 4, 2, 7).pass(),
                      "forced first step (" + std::to_string(step.first + 1) +
                          ") not tight");
    }
}

void criterion_5_reversibility(Check& check) {
    const PyramidSpec specs[] = {{7, 4, 2, 3}, {5, 2, 1, 3}};
    for (const PyramidSpec& spec : specs) {
        const SystematicCode code = build_pyramid(spec);
        std::vector<Codebook> variants = {code.base()};
        for (std::uint64_t seed : {1, 2, 3}) {
            variants.push_back(twist(code.base(), TwistSpec::seeded(seed)));
        }
        const std::vector<CoordSet> groups = repair_groups(code, spec.r);
        check.require(static_cast<int>(groups.size()) == spec.k / spec.r,
                      "unexpected number of repair groups");
        for (const Codebook& variant : variants) {
            for (const CoordSet& group : groups) {
                for (const auto& [member, ok] : reversibility_check(variant, group)) {
                    check.require(ok, spec_str(spec.q, spec.k, spec.r, spec.d) +
                                          ": group member " +
                                          std::to_string(member + 1) +
                                          " not recoverable");
                }
            }
        }
    }

    const auto verdicts = reversibility_check(build_nonreversible_example(), {0, 1, 2});
    check.require(verdicts.at(2) && !verdicts.at(0) && !verdicts.at(1),
                  "AND-code pattern is not {false, false, true}");
}

void criterion_6_structure(Check& check) {
    const SystematicCode pyramid = build_pyramid({7, 4, 2, 3});
    std::vector<SystematicCode> variants = {pyramid};
    for (std::uint64_t seed : {1, 2, 3}) {
        variants.push_back(twist(pyramid, TwistSpec::seeded(seed)));
    }
    for (const SystematicCode& code : variants) {
        const StructureReport t4 = verify_theorem4(code, 2);
        check.require(t4.applicable && t4.all_pass(), "a theorem-4 item failed");
        const StructureReport t5 = verify_theorem5(code, 2);
        check.require(t5.applicable && t5.all_pass(), "a theorem-5 item failed");
        check.require(t5.heavy_bound == 4, "heavy bound != 4");

        const auto heavy_witness = min_repair_set(code.base(), 6, 6);
        check.require(heavy_witness && heavy_witness->size() == 4,
                      "heavy parity locality != 4");

        const std::vector<CoordSet> groups = {{0, 1}, {2, 3}};
        check.require(heavy_dependency_check(code, 6, groups),
                      "heavy parity fails the dependency check");
        check.require(!heavy_dependency_check(code, 4, groups) &&
                          !heavy_dependency_check(code, 5, groups),
                      "a light parity passes the heavy dependency check");
    }
}

void criterion_7_mds_subcodes(Check& check) {
    const SystematicCode pyramid = build_pyramid({7, 4, 2, 3});
    const std::vector<CoordSet> info_groups = {{0, 1}, {2, 3}};
    const CoordSet unfixed_for_group[] = {{0, 1, 4, 6}, {2, 3, 5, 6}};
    oracle::Rng rng(23);
    for (int g = 0; g < 2; ++g) {
        const CoordSet& fixed_coords = info_groups[1 - g];
        for (int sample = 0; sample < 3; ++sample) {
            std::vector<Symbol> sigma;
            for (std::size_t pos = 0; pos < fixed_coords.size(); ++pos) {
                sigma.push_back(static_cast<Symbol>(rng.below(7)));
            }
            std::vector<Word> kept;
            for (const Word& w : pyramid.base().words()) {
                bool match = true;
                for (std::size_t pos = 0; pos < fixed_coords.size(); ++pos) {
                    if (w[fixed_coords[pos]] != sigma[pos]) {
                        match = false;
                        break;
                    }
                }
                if (match) kept.push_back(w);
            }
            check.require(kept.size() == 49, "restricted code is not 49 words");
            check.require(
                is_mds(punctured(Codebook(7, kept), unfixed_for_group[g])),
                "restricted code on the unfixed coordinates is not MDS");
        }
    }
}

void criterion_8_twist_invariance(Check& check) {
    const SystematicCode pyramid = build_pyramid({7, 4, 2, 3});
    const int base_distance = min_distance(pyramid.base());
    const LocalityProfile base_profile = locality_profile(pyramid.base(), 6);
    const StructureReport base_report = verify_structure(pyramid, 2);

    bool some_twist_not_closed = false;
    for (std::uint64_t seed : {1, 2, 3}) {
        const SystematicCode twisted = twist(pyramid, TwistSpec::seeded(seed));
        check.require(min_distance(twisted.base()) == base_distance,
                      "twist changed the distance");

        const LocalityProfile profile = locality_profile(twisted.base(), 6);
        for (int i = 0; i < pyramid.n(); ++i) {
            check.require(profile[i].locality == base_profile[i].locality &&
                              profile[i].witness == base_profile[i].witness,
                          "twist changed the locality profile");
        }

        const StructureReport report = verify_structure(twisted, 2);
        check.require(report.applicable == base_report.applicable &&
                          report.optimal == base_report.optimal &&
                          report.groups == base_report.groups &&
                          report.light_parities == base_report.light_parities &&
                          report.heavy_parities == base_report.heavy_parities &&
                          report.heavy_bound == base_report.heavy_bound,
                      "twist changed the structure report");
        for (const auto& [key, verdict] : base_report.items) {
            check.require(report.items.count(key) == 1 &&
                              report.items.at(key).pass == verdict.pass,
                          "twist changed verdict " + key);
        }

        if (!additively_closed(twisted.base())) some_twist_not_closed = true;
    }
    check.require(some_twist_not_closed,
                  "no twisted codebook failed additive closure");
}

void criterion_9_recovery(Check& check) {
    const SystematicCode pyramid = build_pyramid({5, 2, 1, 3});
    const Codebook& base = pyramid.base();
    int patterns = 0;
    for (const Word& w : base.words()) {
        std::vector<CoordSet> erasure_sets = {{}};
        for (int a = 0; a < base.n(); ++a) {
            erasure_sets.push_back({a});
            for (int b = a + 1; b < base.n(); ++b) erasure_sets.push_back({a, b});
        }
        for (const CoordSet& coords : erasure_sets) {
            ++patterns;
            ErasurePattern pattern;
            for (Symbol s : w) pattern.word.emplace_back(s);
            for (int c : coords) pattern.word[c] = std::nullopt;
            const RecoveryResult result = recover_erasures(base, pattern);
            check.require(result.status == RecoveryResult::Status::Unique &&
                              *result.word == w,
                          "a <= 2-erasure pattern did not recover uniquely");
        }
    }
    check.require(patterns == 25 * 16, "expected 25 * 16 patterns");

    const LocalityProfile profile = locality_profile(base, 4);
    for (const Word& w : base.words()) {
        for (int i = 0; i < pyramid.k(); ++i) {
            ErasurePattern pattern;
            for (Symbol s : w) pattern.word.emplace_back(s);
            pattern.word[i] = std::nullopt;
            const auto repaired = local_repair(base, pattern, profile);
            check.require(repaired.at(i).value == w[i] &&
                              repaired.at(i).accessed.size() <= 1,
                          "information repair read more than r = 1 coordinates");
        }
    }
}

}  // namespace

int main() {
    criterion(1, "pyramid grid meets the block-length bound with equality",
              criterion_1_bound_grid);
    criterion(2, "Singleton bound holds on fixtures and random sub-codes",
              criterion_2_singleton);
    criterion(3, "all size-k projections of the MDS code are bijections",
              criterion_3_mds_projections);
    criterion(4, "sub-code extraction is tight, also under forced first steps",
              criterion_4_trace_tightness);
    criterion(5, "repair groups are reversible; the AND-code is not",
              criterion_5_reversibility);
    criterion(6, "repair-group and parity-partition structure checks",
              criterion_6_structure);
    criterion(7, "fixing all but one group leaves an MDS code",
              criterion_7_mds_subcodes);
    criterion(8, "twists preserve every report and break linearity",
              criterion_8_twist_invariance);
    criterion(9, "erasure recovery is unique; information repair reads r",
              criterion_9_recovery);

    if (failures == 0) {
        std::printf("all acceptance criteria passed\n");
        return 0;
    }
    std::printf("%d criterion(s) FAILED\n", failures);
    return 1;
}
