#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "lrc/errors.hpp"

namespace lrc {

/// Arithmetic in GF(p) for prime p, with all elements canonical in {0..p-1}.
class PrimeField {
public:
    explicit PrimeField(std::int64_t p);

    std::int64_t p() const { return p_; }

    std::int64_t add(std::int64_t a, std::int64_t b) const;
    std::int64_t sub(std::int64_t a, std::int64_t b) const;
    std::int64_t mul(std::int64_t a, std::int64_t b) const;
    std::int64_t neg(std::int64_t a) const;
    std::int64_t pow(std::int64_t a, std::int64_t e) const;
    std::int64_t inv(std::int64_t a) const;  // DivisionByZero when a = 0
    std::int64_t div(std::int64_t a, std::int64_t b) const;

private:
    std::int64_t canonical(std::int64_t a) const;
    std::int64_t p_;
};

bool is_prime(std::int64_t p);

enum class FieldOp { Add, Sub, Mul, Inv, Div };

// One-shot dispatch form of the field operations. `b` is ignored for Inv.
std::int64_t field_arith(std::int64_t p, FieldOp op, std::int64_t a,
                         std::optional<std::int64_t> b = std::nullopt);

// Parity coefficients of a systematic [k+m, k, m+1] MDS code over GF(p):
// m rows of k coefficients, so that appending p_j = sum_i c[j][i] x_i to x
// gives minimum distance m+1. Derived by Gaussian elimination on a
// Vandermonde generator with evaluation points 0..k+m-1, hence requires
// p >= k + m.
std::vector<std::vector<std::int64_t>> systematic_mds_generator(std::int64_t p,
                                                                int k, int m);

}  // namespace lrc
