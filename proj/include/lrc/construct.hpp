#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "lrc/codebook.hpp"

namespace lrc {

struct PyramidSpec {
    int q = 0;  // prime alphabet size
    int k = 0;  // information symbols
    int r = 0;  // locality group size, r | k
    int d = 0;  // minimum distance, >= 2
};

// Per-coordinate alphabet permutations. Either explicit, or generated
// deterministically from a seed.
struct TwistSpec {
    std::optional<std::uint64_t> seed;
    std::vector<std::vector<Symbol>> perms;

    static TwistSpec seeded(std::uint64_t s) { return TwistSpec{s, {}}; }
    static TwistSpec explicit_perms(std::vector<std::vector<Symbol>> p) {
        return TwistSpec{std::nullopt, std::move(p)};
    }
};

// Systematic MDS code of parameters [k + d - 1, q^k, d] over GF(q),
// materialized as an explicit codebook.
SystematicCode build_rs_mds(int q, int k, int d, const Limits& limits = {});

// Pyramid construction: information symbols in k/r consecutive groups of
// size r, one light parity per group (the first MDS parity restricted to
// that group), and d - 2 heavy parities. Meets n = k + k/r + d - 2 with
// distance exactly d and information locality exactly r. r = k degrades
// to the plain MDS code.
SystematicCode build_pyramid(const PyramidSpec& spec, const Limits& limits = {});

// The permutations a seed expands to: per coordinate, a Fisher-Yates
// shuffle of {0..q-1} driven by a fixed linear congruential generator
// with a per-coordinate offset. Stable across platforms.
std::vector<std::vector<Symbol>> twist_permutations(std::uint64_t seed, int q,
                                                    int n);

// Applies per-coordinate alphabet bijections. Preserves q, n, K, all
// distances and the whole determined-by relation, but generally destroys
// linearity.
Codebook twist(const Codebook& c, const TwistSpec& spec);
SystematicCode twist(const SystematicCode& c, const TwistSpec& spec);

// The q = 2, n = 3 code {000, 010, 100, 111} whose third coordinate is
// the AND of the first two: {1,2} determines 3 but {2,3} does not
// determine 1, so its local constraint is not reversible.
Codebook build_nonreversible_example();

}  // namespace lrc
