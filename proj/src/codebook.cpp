#include "lrc/codebook.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <string>
#include <unordered_map>

namespace lrc {

namespace {

std::string coord_str(int i) { return std::to_string(i + 1); }

}  // namespace

Codebook::Codebook(int q, std::vector<Word> words, const Limits& limits)
    : q_(q), words_(std::move(words)) {
    if (q_ < 2) {
        throw ShapeError("alphabet size must be >= 2, got " + std::to_string(q_));
    }
    if (q_ > 65536) {
        throw TooLarge("alphabet size " + std::to_string(q_) + " exceeds 65536");
    }
    if (words_.empty()) {
        throw ShapeError("a codebook needs at least one word");
    }
    n_ = static_cast<int>(words_.front().size());
    if (n_ < 1) {
        throw ShapeError("codewords must have at least one coordinate");
    }
    if (words_.size() > limits.max_words ||
        words_.size() * static_cast<std::size_t>(n_) > limits.max_symbols) {
        throw TooLarge("codebook of " + std::to_string(words_.size()) + " words x " +
                       std::to_string(n_) + " symbols exceeds the size cap");
    }
    for (const Word& w : words_) {
        if (static_cast<int>(w.size()) != n_) {
            throw ShapeError("codewords have mixed lengths");
        }
        for (Symbol s : w) {
            if (s >= q_) {
                throw ShapeError("symbol " + std::to_string(s) +
                                 " out of range for q = " + std::to_string(q_));
            }
        }
    }
    std::sort(words_.begin(), words_.end());
    if (std::adjacent_find(words_.begin(), words_.end()) != words_.end()) {
        throw ShapeError("duplicate codeword");
    }
}

bool Codebook::contains(const Word& w) const {
    return std::binary_search(words_.begin(), words_.end(), w);
}

std::optional<int> Codebook::integral_dimension() const {
    const std::uint64_t target = words_.size();
    std::uint64_t power = 1;
    int k = 0;
    while (power < target) {
        power *= static_cast<std::uint64_t>(q_);
        ++k;
    }
    if (power == target) return k;
    return std::nullopt;
}

SystematicCode::SystematicCode(Codebook base, int k)
    : base_(std::move(base)), k_(k) {
    if (k_ < 1 || k_ > base_.n()) {
        throw ShapeError("dimension k = " + std::to_string(k_) +
                         " outside [1, n = " + std::to_string(base_.n()) + "]");
    }
    std::uint64_t expected = 1;
    for (int i = 0; i < k_; ++i) {
        expected *= static_cast<std::uint64_t>(base_.q());
        if (expected > base_.size()) break;
    }
    if (expected != base_.size()) {
        throw NonIntegralDimension("|C| = " + std::to_string(base_.size()) +
                                   " != q^k for q = " + std::to_string(base_.q()) +
                                   ", k = " + std::to_string(k_));
    }
    // Words are sorted, so equal prefixes sit next to each other; distinct
    // prefixes with |C| = q^k means the prefix map is a bijection.
    const auto& words = base_.words();
    for (std::size_t idx = 1; idx < words.size(); ++idx) {
        if (std::equal(words[idx].begin(), words[idx].begin() + k_,
                       words[idx - 1].begin())) {
            throw NotSystematic("two codewords share the information prefix");
        }
    }
}

const Word& SystematicCode::encode(const Word& message) const {
    if (static_cast<int>(message.size()) != k_) {
        throw ShapeError("message length " + std::to_string(message.size()) +
                         " != k = " + std::to_string(k_));
    }
    std::size_t rank = 0;
    for (Symbol s : message) {
        if (s >= base_.q()) {
            throw ShapeError("message symbol out of range");
        }
        rank = rank * static_cast<std::size_t>(base_.q()) + s;
    }
    // Sorted words with a bijective prefix: word order equals prefix rank.
    return base_.word(rank);
}

int hamming_distance(const Word& x, const Word& y) {
    if (x.size() != y.size()) {
        throw ShapeError("length mismatch: " + std::to_string(x.size()) + " vs " +
                         std::to_string(y.size()));
    }
    int count = 0;
    for (std::size_t i = 0; i < x.size(); ++i) count += (x[i] != y[i]);
    return count;
}

int min_distance(const Codebook& c) {
    if (c.size() < 2) {
        throw DegenerateCode("minimum distance needs at least two codewords");
    }
    const std::size_t count = c.size();
    const int n = c.n();
    std::vector<Symbol> flat;
    flat.reserve(count * static_cast<std::size_t>(n));
    for (const Word& w : c.words()) flat.insert(flat.end(), w.begin(), w.end());

    int best = n;
    for (std::size_t a = 0; a + 1 < count && best > 1; ++a) {
        const Symbol* wa = flat.data() + a * n;
        for (std::size_t b = a + 1; b < count; ++b) {
            const Symbol* wb = flat.data() + b * n;
            int dist = 0;
            for (int t = 0; t < n; ++t) {
                dist += (wa[t] != wb[t]);
                if (dist >= best) break;
            }
            if (dist < best) {
                best = dist;
                if (best == 1) break;
            }
        }
    }
    return best;
}

SingletonReport check_singleton(const Codebook& c) {
    if (c.size() < 2) {
        throw DegenerateCode("Singleton check needs at least two codewords");
    }
    SingletonReport report;
    const int d = min_distance(c);
    report.lhs = c.n();
    report.exact_dimension = c.integral_dimension();

    // holds <=> K <= q^(n - d + 1), settled without floating point.
    std::uint64_t cap = 1;
    bool at_least_k = false;
    for (int t = 0; t < c.n() - d + 1; ++t) {
        cap *= static_cast<std::uint64_t>(c.q());
        if (cap >= c.size()) {
            at_least_k = true;
            break;
        }
    }
    report.holds = at_least_k || cap >= c.size();

    const double log_q_k =
        std::log(static_cast<double>(c.size())) / std::log(static_cast<double>(c.q()));
    report.rhs = (report.exact_dimension ? static_cast<double>(*report.exact_dimension)
                                         : log_q_k) +
                 d - 1;
    report.slack = report.lhs - report.rhs;
    return report;
}

namespace {

// Packs the projection of w onto sorted coordinate set s into one 64-bit
// key, most significant coordinate first. Valid only when it fits.
std::uint64_t pack_projection(const Word& w, const CoordSet& s, int bits) {
    std::uint64_t key = 0;
    for (int c : s) key = (key << bits) | w[c];
    return key;
}

}  // namespace

ProjectionReport mds_projection_check(const Codebook& c, const CoordSet& s_raw) {
    const auto k = c.integral_dimension();
    if (!k) {
        throw NonIntegralDimension("|C| = " + std::to_string(c.size()) +
                                   " is not a power of q = " + std::to_string(c.q()));
    }
    const CoordSet s = normalized_coords(s_raw, c.n());
    if (static_cast<int>(s.size()) != *k) {
        throw ShapeError("projection set has size " + std::to_string(s.size()) +
                         ", expected k = " + std::to_string(*k));
    }

    ProjectionReport report;
    const int bits = std::bit_width(static_cast<unsigned>(c.q() - 1));
    if (s.size() * static_cast<std::size_t>(bits) <= 64) {
        std::unordered_map<std::uint64_t, std::size_t> seen;
        seen.reserve(c.size() * 2);
        for (std::size_t idx = 0; idx < c.size(); ++idx) {
            const std::uint64_t key = pack_projection(c.word(idx), s, bits);
            auto [it, inserted] = seen.try_emplace(key, idx);
            if (!inserted) {
                report.bijective = false;
                report.counterexample = {c.word(it->second), c.word(idx)};
                return report;
            }
        }
    } else {
        std::vector<std::size_t> order(c.size());
        for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
        auto proj_less = [&](std::size_t a, std::size_t b) {
            for (int coord : s) {
                if (c.word(a)[coord] != c.word(b)[coord]) {
                    return c.word(a)[coord] < c.word(b)[coord];
                }
            }
            return false;
        };
        std::sort(order.begin(), order.end(), proj_less);
        for (std::size_t i = 1; i < order.size(); ++i) {
            if (!proj_less(order[i - 1], order[i]) && !proj_less(order[i], order[i - 1])) {
                report.bijective = false;
                report.counterexample = {c.word(order[i - 1]), c.word(order[i])};
                return report;
            }
        }
    }
    // |C| = q^k distinct projections onto k coordinates: a bijection.
    report.bijective = true;
    return report;
}

bool is_mds(const Codebook& c) {
    const auto k = c.integral_dimension();
    if (!k) {
        throw NonIntegralDimension("|C| = " + std::to_string(c.size()) +
                                   " is not a power of q = " + std::to_string(c.q()));
    }
    return c.n() == *k + min_distance(c) - 1;
}

SystematicCode systematic_from_codebook(Codebook c, int k) {
    return SystematicCode(std::move(c), k);
}

Codebook punctured(const Codebook& c, const CoordSet& keep_raw) {
    const CoordSet keep = normalized_coords(keep_raw, c.n());
    if (keep.empty()) throw ShapeError("cannot keep zero coordinates");
    std::vector<Word> words;
    words.reserve(c.size());
    for (const Word& w : c.words()) {
        Word projected;
        projected.reserve(keep.size());
        for (int coord : keep) projected.push_back(w[coord]);
        words.push_back(std::move(projected));
    }
    return Codebook(c.q(), std::move(words));  // ctor rejects collisions
}

CoordSet normalized_coords(const CoordSet& coords, int n) {
    CoordSet sorted = coords;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 0; i < sorted.size(); ++i) {
        if (sorted[i] < 0 || sorted[i] >= n) {
            throw ShapeError("coordinate " + coord_str(sorted[i]) +
                             " outside [1, " + std::to_string(n) + "]");
        }
        if (i > 0 && sorted[i] == sorted[i - 1]) {
            throw ShapeError("repeated coordinate " + coord_str(sorted[i]));
        }
    }
    return sorted;
}

}  // namespace lrc
