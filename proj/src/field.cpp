#include "lrc/field.hpp"

#include <string>

namespace lrc {

bool is_prime(std::int64_t p) {
    if (p < 2) return false;
    if (p % 2 == 0) return p == 2;
    for (std::int64_t f = 3; f * f <= p; f += 2) {
        if (p % f == 0) return false;
    }
    return true;
}

PrimeField::PrimeField(std::int64_t p) : p_(p) {
    if (!is_prime(p)) {
        throw NotPrime("modulus " + std::to_string(p) + " is not prime");
    }
}

std::int64_t PrimeField::canonical(std::int64_t a) const {
    std::int64_t v = a % p_;
    return v < 0 ? v + p_ : v;
}

std::int64_t PrimeField::add(std::int64_t a, std::int64_t b) const {
    return canonical(canonical(a) + canonical(b));
}

std::int64_t PrimeField::sub(std::int64_t a, std::int64_t b) const {
    return canonical(canonical(a) - canonical(b));
}

std::int64_t PrimeField::mul(std::int64_t a, std::int64_t b) const {
    return canonical(canonical(a) * canonical(b));
}

std::int64_t PrimeField::neg(std::int64_t a) const {
    return canonical(-canonical(a));
}

std::int64_t PrimeField::pow(std::int64_t a, std::int64_t e) const {
    if (e < 0) return inv(pow(a, -e));
    std::int64_t base = canonical(a);
    std::int64_t result = 1;
    while (e > 0) {
        if (e & 1) result = mul(result, base);
        base = mul(base, base);
        e >>= 1;
    }
    return result;
}

std::int64_t PrimeField::inv(std::int64_t a) const {
    std::int64_t v = canonical(a);
    if (v == 0) {
        throw DivisionByZero("inverse of 0 in GF(" + std::to_string(p_) + ")");
    }
    // Fermat: a^(p-2)
    return pow(v, p_ - 2);
}

std::int64_t PrimeField::div(std::int64_t a, std::int64_t b) const {
    return mul(a, inv(b));
}

std::int64_t field_arith(std::int64_t p, FieldOp op, std::int64_t a,
                         std::optional<std::int64_t> b) {
    PrimeField f(p);
    if (op != FieldOp::Inv && !b.has_value()) {
        throw ShapeError("binary field operation needs a second operand");
    }
    switch (op) {
        case FieldOp::Add: return f.add(a, *b);
        case FieldOp::Sub: return f.sub(a, *b);
        case FieldOp::Mul: return f.mul(a, *b);
        case FieldOp::Inv: return f.inv(a);
        case FieldOp::Div: return f.div(a, *b);
    }
    throw ShapeError("unknown field operation");
}

std::vector<std::vector<std::int64_t>> systematic_mds_generator(std::int64_t p,
                                                                int k, int m) {
    PrimeField f(p);
    if (k < 1 || m < 1) {
        throw ShapeError("generator needs k >= 1 and m >= 1");
    }
    if (p < k + m) {
        throw AlphabetTooSmall("need p >= k + m = " + std::to_string(k + m) +
                               ", got p = " + std::to_string(p));
    }

    // Vandermonde generator on evaluation points 0..k+m-1: row i holds the
    // i-th powers. Row-reducing the left k x k block (itself Vandermonde,
    // hence invertible) puts the generator in [I | P] form.
    const int cols = k + m;
    std::vector<std::vector<std::int64_t>> g(k, std::vector<std::int64_t>(cols));
    for (int j = 0; j < cols; ++j) {
        std::int64_t power = 1;
        for (int i = 0; i < k; ++i) {
            g[i][j] = power;
            power = f.mul(power, j);
        }
    }

    for (int col = 0; col < k; ++col) {
        int pivot = col;
        while (pivot < k && g[pivot][col] == 0) ++pivot;
        if (pivot == k) {
            throw InternalInvariantViolation("Vandermonde block not invertible");
        }
        std::swap(g[pivot], g[col]);
        const std::int64_t scale = f.inv(g[col][col]);
        for (int j = 0; j < cols; ++j) g[col][j] = f.mul(g[col][j], scale);
        for (int row = 0; row < k; ++row) {
            if (row == col || g[row][col] == 0) continue;
            const std::int64_t factor = g[row][col];
            for (int j = 0; j < cols; ++j) {
                g[row][j] = f.sub(g[row][j], f.mul(factor, g[col][j]));
            }
        }
    }

    std::vector<std::vector<std::int64_t>> coeffs(m, std::vector<std::int64_t>(k));
    for (int j = 0; j < m; ++j) {
        for (int i = 0; i < k; ++i) coeffs[j][i] = g[i][k + j];
    }
    return coeffs;
}

}  // namespace lrc
