#include "lrc/construct.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <string>

#include "lrc/field.hpp"

namespace lrc {

namespace {

std::uint64_t checked_codebook_size(int q, int k, const Limits& limits, int n) {
    std::uint64_t size = 1;
    for (int i = 0; i < k; ++i) {
        size *= static_cast<std::uint64_t>(q);
        if (size > limits.max_words) break;
    }
    if (size > limits.max_words ||
        size * static_cast<std::uint64_t>(n) > limits.max_symbols) {
        throw TooLarge("q^k = " + std::to_string(size) + " words of length " +
                       std::to_string(n) + " exceed the size cap");
    }
    return size;
}

// All q^k messages in lexicographic order, encoded through `parity_of`.
template <typename ParityFn>
SystematicCode enumerate_systematic(int q, int k, int n, const Limits& limits,
                                    ParityFn&& parity_of) {
    const std::uint64_t count = checked_codebook_size(q, k, limits, n);
    std::vector<Word> words;
    words.reserve(count);
    Word message(k, 0);
    for (std::uint64_t rank = 0; rank < count; ++rank) {
        Word w(n);
        std::copy(message.begin(), message.end(), w.begin());
        parity_of(message, w);
        words.push_back(std::move(w));
        for (int pos = k - 1; pos >= 0; --pos) {
            if (++message[pos] < q) break;
            message[pos] = 0;
        }
    }
    return SystematicCode(Codebook(q, std::move(words), limits), k);
}

}  // namespace

SystematicCode build_rs_mds(int q, int k, int d, const Limits& limits) {
    if (k < 1 || d < 2) {
        throw InvalidSpec("MDS construction needs k >= 1 and d >= 2");
    }
    if (q < k + d - 1) {
        throw AlphabetTooSmall("need q >= k + d - 1 = " + std::to_string(k + d - 1) +
                               ", got q = " + std::to_string(q));
    }
    const int n = k + d - 1;
    const auto coeffs = systematic_mds_generator(q, k, d - 1);
    PrimeField field(q);
    return enumerate_systematic(q, k, n, limits,
                                [&](const Word& message, Word& w) {
                                    for (int j = 0; j < d - 1; ++j) {
                                        std::int64_t acc = 0;
                                        for (int i = 0; i < k; ++i) {
                                            acc = field.add(acc, field.mul(coeffs[j][i],
                                                                           message[i]));
                                        }
                                        w[k + j] = static_cast<Symbol>(acc);
                                    }
                                });
}

SystematicCode build_pyramid(const PyramidSpec& spec, const Limits& limits) {
    const auto [q, k, r, d] = spec;
    if (k < 1 || r < 1 || r > k || k % r != 0) {
        throw InvalidSpec("need 1 <= r <= k with r | k, got r = " + std::to_string(r) +
                          ", k = " + std::to_string(k));
    }
    if (d < 2) {
        throw InvalidSpec("need d >= 2, got d = " + std::to_string(d));
    }
    if (q < k + d - 1) {
        throw InvalidSpec("underlying MDS code needs q >= k + d - 1 = " +
                          std::to_string(k + d - 1) + ", got q = " + std::to_string(q));
    }
    if (!is_prime(q)) {
        throw InvalidSpec("alphabet size " + std::to_string(q) + " is not prime");
    }
    if (r == k) {
        // k/r = 1: the single light parity is the full first MDS parity.
        return build_rs_mds(q, k, d, limits);
    }

    const int groups = k / r;
    const int n = k + groups + d - 2;
    const auto coeffs = systematic_mds_generator(q, k, d - 1);
    PrimeField field(q);

    // Coordinate order: information [0..k), light parities (first MDS
    // parity restricted per group), then the remaining d - 2 heavy
    // parities.
    return enumerate_systematic(
        q, k, n, limits, [&](const Word& message, Word& w) {
            for (int g = 0; g < groups; ++g) {
                std::int64_t acc = 0;
                for (int i = g * r; i < (g + 1) * r; ++i) {
                    acc = field.add(acc, field.mul(coeffs[0][i], message[i]));
                }
                w[k + g] = static_cast<Symbol>(acc);
            }
            for (int j = 1; j < d - 1; ++j) {
                std::int64_t acc = 0;
                for (int i = 0; i < k; ++i) {
                    acc = field.add(acc, field.mul(coeffs[j][i], message[i]));
                }
                w[k + groups + j - 1] = static_cast<Symbol>(acc);
            }
        });
}

std::vector<std::vector<Symbol>> twist_permutations(std::uint64_t seed, int q,
                                                    int n) {
    std::vector<std::vector<Symbol>> perms(n);
    for (int c = 0; c < n; ++c) {
        // Fixed LCG stream with a per-coordinate offset; std engines do
        // not guarantee identical streams across platforms.
        std::uint64_t state =
            seed * 0x9E3779B97F4A7C15ull + static_cast<std::uint64_t>(c + 1) * 0xBF58476D1CE4E5B9ull;
        auto next = [&state]() {
            state = state * 6364136223846793005ull + 1442695040888963407ull;
            return state >> 33;
        };
        std::vector<Symbol>& perm = perms[c];
        perm.resize(q);
        std::iota(perm.begin(), perm.end(), Symbol{0});
        for (int j = q - 1; j > 0; --j) {
            std::swap(perm[j], perm[next() % static_cast<std::uint64_t>(j + 1)]);
        }
    }
    return perms;
}

Codebook twist(const Codebook& c, const TwistSpec& spec) {
    std::vector<std::vector<Symbol>> perms = spec.perms;
    if (perms.empty()) {
        if (!spec.seed) {
            throw ShapeError("twist needs a seed or explicit permutations");
        }
        perms = twist_permutations(*spec.seed, c.q(), c.n());
    }
    if (static_cast<int>(perms.size()) != c.n()) {
        throw ShapeError("got " + std::to_string(perms.size()) +
                         " permutations for n = " + std::to_string(c.n()) +
                         " coordinates");
    }
    for (const auto& perm : perms) {
        if (static_cast<int>(perm.size()) != c.q()) {
            throw ShapeError("permutation length != q");
        }
        std::vector<char> hit(c.q(), 0);
        for (Symbol s : perm) {
            if (s >= c.q() || hit[s]) {
                throw ShapeError("per-coordinate map is not a permutation of the alphabet");
            }
            hit[s] = 1;
        }
    }
    std::vector<Word> words;
    words.reserve(c.size());
    for (const Word& w : c.words()) {
        Word mapped(w.size());
        for (std::size_t pos = 0; pos < w.size(); ++pos) {
            mapped[pos] = perms[pos][w[pos]];
        }
        words.push_back(std::move(mapped));
    }
    return Codebook(c.q(), std::move(words));
}

SystematicCode twist(const SystematicCode& c, const TwistSpec& spec) {
    // Bijections on the information coordinates keep the prefix bijective.
    return SystematicCode(twist(c.base(), spec), c.k());
}

Codebook build_nonreversible_example() {
    return Codebook(2, {{0, 0, 0}, {0, 1, 0}, {1, 0, 0}, {1, 1, 1}});
}

}  // namespace lrc
