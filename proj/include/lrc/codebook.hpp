#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "lrc/errors.hpp"

namespace lrc {

using Symbol = std::uint16_t;
using Word = std::vector<Symbol>;

// Coordinates are 0-based and coordinate sets are kept sorted ascending.
// The JSON layer converts to the 1-based convention used in file formats.
using CoordSet = std::vector<int>;

// Default size caps. All analyses are exhaustive, so anything beyond these
// is rejected with TooLarge instead of silently taking minutes.
struct Limits {
    std::size_t max_words = 65536;
    std::size_t max_symbols = std::size_t{1} << 22;
};

/// An explicit (n, K, d)_q code: a set of K distinct length-n words over
/// {0..q-1}. Words are stored sorted lexicographically and never change
/// after construction.
class Codebook {
public:
    Codebook(int q, std::vector<Word> words, const Limits& limits = {});

    int q() const { return q_; }
    int n() const { return n_; }
    std::size_t size() const { return words_.size(); }
    const std::vector<Word>& words() const { return words_; }
    const Word& word(std::size_t index) const { return words_[index]; }

    // Membership test (binary search over the sorted word list).
    bool contains(const Word& w) const;

    // k such that |C| = q^k, if such an integer exists.
    std::optional<int> integral_dimension() const;

private:
    int q_;
    int n_;
    std::vector<Word> words_;
};

/// A codebook of size q^k whose first k coordinates range over all of
/// Sigma^k; those coordinates are the information symbols and determine
/// the codeword.
class SystematicCode {
public:
    SystematicCode(Codebook base, int k);

    const Codebook& base() const { return base_; }
    int q() const { return base_.q(); }
    int n() const { return base_.n(); }
    int k() const { return k_; }

    // The codeword whose information prefix equals `message`.
    const Word& encode(const Word& message) const;

private:
    Codebook base_;
    int k_;
};

int hamming_distance(const Word& x, const Word& y);

// Exact minimum distance over all unordered pairs. Throws DegenerateCode
// when the code has fewer than two words.
int min_distance(const Codebook& c);

struct SingletonReport {
    int lhs = 0;        // n
    double rhs = 0.0;   // log_q K + d - 1
    bool holds = false; // n >= rhs, decided in exact integer arithmetic
    double slack = 0.0; // lhs - rhs
    std::optional<int> exact_dimension;  // k when K = q^k
};

SingletonReport check_singleton(const Codebook& c);

struct ProjectionReport {
    bool bijective = false;
    // Two distinct codewords with equal projection, when not bijective.
    std::optional<std::pair<Word, Word>> counterexample;
};

// Whether the projection onto S hits every value of Sigma^k exactly once.
// Requires |S| = k where |C| = q^k.
ProjectionReport mds_projection_check(const Codebook& c, const CoordSet& s);

// n = k + d - 1, i.e. the Singleton bound is met with equality.
bool is_mds(const Codebook& c);

SystematicCode systematic_from_codebook(Codebook c, int k);

// The codebook obtained by keeping only the listed coordinates. Throws
// ShapeError if two words collide on them.
Codebook punctured(const Codebook& c, const CoordSet& keep);

// Normalizes a user-supplied coordinate set: sorts it and validates that
// entries are distinct and inside [0, n).
CoordSet normalized_coords(const CoordSet& coords, int n);

}  // namespace lrc
