#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "bott/errors.hpp"

// Exact arithmetic kernel: arbitrary-precision integers/rationals and the
// fraction-free linear algebra used by the fan and intersection layers.
// No floating point anywhere.

namespace bott {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

using IntVec = std::vector<Int>;
using IntMat = std::vector<IntVec>;  // row-major

inline Int dot(const IntVec& a, const IntVec& b) {
    if (a.size() != b.size())
        throw LengthMismatch("dot: vectors of length " + std::to_string(a.size()) +
                             " and " + std::to_string(b.size()));
    Int s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

inline bool is_zero_vector(const IntVec& v) {
    for (const Int& x : v)
        if (x != 0) return false;
    return true;
}

// Determinant by Bareiss fraction-free elimination. All intermediate
// divisions are exact.
inline Int determinant(IntMat m) {
    const std::size_t n = m.size();
    if (n == 0) return 1;
    for (const IntVec& row : m)
        if (row.size() != n) throw LengthMismatch("determinant: matrix not square");

    Int sign = 1;
    Int prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k] == 0) {
            std::size_t p = k + 1;
            while (p < n && m[p][k] == 0) ++p;
            if (p == n) return 0;
            std::swap(m[k], m[p]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j)
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
            m[i][k] = 0;
        }
        prev = m[k][k];
    }
    return sign * m[n - 1][n - 1];
}

// Exact solve of A x = b for an integer matrix whose columns are linearly
// independent (rows >= cols). Fraction-free forward elimination, rational
// back-substitution; the result is accepted only if it is integral and
// reproduces b exactly. Returns nullopt when the system is singular,
// inconsistent, or the solution is not integral.
inline std::optional<IntVec> solve_integer_system(const IntMat& a, const IntVec& b) {
    const std::size_t rows = a.size();
    if (b.size() != rows) throw LengthMismatch("solve_integer_system: rhs length");
    const std::size_t cols = rows == 0 ? 0 : a[0].size();
    for (const IntVec& row : a)
        if (row.size() != cols) throw LengthMismatch("solve_integer_system: ragged matrix");
    if (cols > rows) return std::nullopt;

    // Augmented working copy [A | b].
    IntMat m(rows, IntVec(cols + 1));
    for (std::size_t i = 0; i < rows; ++i) {
        for (std::size_t j = 0; j < cols; ++j) m[i][j] = a[i][j];
        m[i][cols] = b[i];
    }

    Int prev = 1;
    for (std::size_t k = 0; k < cols; ++k) {
        std::size_t p = k;
        while (p < rows && m[p][k] == 0) ++p;
        if (p == rows) return std::nullopt;  // rank-deficient columns
        if (p != k) std::swap(m[k], m[p]);
        for (std::size_t i = k + 1; i < rows; ++i) {
            for (std::size_t j = k + 1; j <= cols; ++j)
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
            m[i][k] = 0;
        }
        prev = m[k][k];
    }

    // Rows past the column rank must have been reduced to 0 = 0.
    for (std::size_t i = cols; i < rows; ++i)
        if (m[i][cols] != 0) return std::nullopt;

    std::vector<Rat> x(cols);
    for (std::size_t k = cols; k-- > 0;) {
        Rat s(m[k][cols]);
        for (std::size_t j = k + 1; j < cols; ++j) s -= Rat(m[k][j]) * x[j];
        x[k] = s / Rat(m[k][k]);
    }

    IntVec out(cols);
    for (std::size_t k = 0; k < cols; ++k) {
        if (denominator(x[k]) != 1) return std::nullopt;
        out[k] = numerator(x[k]);
    }

    // Exact verification against the original system.
    for (std::size_t i = 0; i < rows; ++i) {
        Int s = 0;
        for (std::size_t j = 0; j < cols; ++j) s += a[i][j] * out[j];
        if (s != b[i]) return std::nullopt;
    }
    return out;
}

// base^exp for a nonzero rational base and integer (possibly negative) exponent.
inline Rat rational_pow(const Rat& base, Int exp) {
    if (base == 0) throw Error("ZeroBase", "rational_pow: zero base");
    bool invert = exp < 0;
    if (invert) exp = -exp;
    Rat acc = 1;
    Rat sq = base;
    while (exp > 0) {
        if ((exp & 1) != 0) acc *= sq;
        exp >>= 1;
        if (exp > 0) sq *= sq;
    }
    return invert ? Rat(1) / acc : acc;
}

}  // namespace bott
