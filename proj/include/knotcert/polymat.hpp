#pragma once

#include "knotcert/braid.hpp"
#include "knotcert/laurent.hpp"
#include "knotcert/ratpoly.hpp"

#include <algorithm>
#include <cstddef>
#include <utility>
#include <vector>

namespace knotcert {

using PolyMatrix = std::vector<std::vector<RatPoly>>;

/// Fraction-free (Bareiss) determinant over Q[t]; all divisions are exact.
inline RatPoly poly_det(PolyMatrix m) {
    const std::size_t n = m.size();
    if (n == 0) return RatPoly::constant(Rat(1));
    for (const auto& row : m)
        if (row.size() != n) throw internal_error("poly_det: matrix not square");
    int sign = 1;
    RatPoly prev = RatPoly::constant(Rat(1));
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k].is_zero()) {
            std::size_t piv = k + 1;
            while (piv < n && m[piv][k].is_zero()) ++piv;
            if (piv == n) return RatPoly::zero();
            std::swap(m[k], m[piv]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j)
                m[i][j] = RatPoly::divexact(m[k][k] * m[i][j] - m[i][k] * m[k][j], prev);
            m[i][k] = RatPoly::zero();
        }
        prev = m[k][k];
    }
    RatPoly det = m[n - 1][n - 1];
    return sign < 0 ? -det : det;
}

/// Determinant of a Laurent-polynomial matrix up to a unit +-t^k (each row is
/// shifted to clear negative exponents first).  That is exactly the slack the
/// Alexander normalization removes.
inline Laurent laurent_det_up_to_units(const std::vector<std::vector<Laurent>>& m) {
    const std::size_t n = m.size();
    if (n == 0) return Laurent::one();
    PolyMatrix pm(n, std::vector<RatPoly>(n));
    for (std::size_t i = 0; i < n; ++i) {
        long shift = 0;
        for (const auto& e : m[i])
            if (!e.is_zero()) shift = std::min(shift, e.min_exp());
        for (std::size_t j = 0; j < n; ++j)
            pm[i][j] = RatPoly::from_laurent(m[i][j].shifted(-shift), false);
    }
    return poly_det(std::move(pm)).to_laurent_scaled();
}

/// Exact rational determinant (Gaussian elimination over Q).
inline Rat rat_det(std::vector<std::vector<Rat>> m) {
    const std::size_t n = m.size();
    Rat det(1);
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t piv = k;
        while (piv < n && m[piv][k] == 0) ++piv;
        if (piv == n) return Rat(0);
        if (piv != k) {
            std::swap(m[k], m[piv]);
            det = -det;
        }
        det *= m[k][k];
        for (std::size_t i = k + 1; i < n; ++i) {
            if (m[i][k] == 0) continue;
            Rat f = m[i][k] / m[k][k];
            for (std::size_t j = k; j < n; ++j) m[i][j] -= f * m[k][j];
        }
    }
    return det;
}

/// Smith normal form over Q[t].  Returns the diagonal entries (monic, in
/// divisibility order d1 | d2 | ...), including any zeros at the end.
inline std::vector<RatPoly> smith_diagonal(PolyMatrix m) {
    const std::size_t rows = m.size();
    const std::size_t cols = rows == 0 ? 0 : m[0].size();
    std::vector<RatPoly> diag;
    std::size_t t = 0;
    const std::size_t bound = std::min(rows, cols);
    while (t < bound) {
        // locate a minimal-degree nonzero pivot in the working block
        long best = -1;
        std::size_t bi = t, bj = t;
        for (std::size_t i = t; i < rows; ++i)
            for (std::size_t j = t; j < cols; ++j)
                if (!m[i][j].is_zero() && (best < 0 || m[i][j].degree() < best)) {
                    best = m[i][j].degree();
                    bi = i;
                    bj = j;
                }
        if (best < 0) break;  // block is zero
        std::swap(m[t], m[bi]);
        for (std::size_t i = t; i < rows; ++i) std::swap(m[i][t], m[i][bj]);

        bool again = false;
        for (std::size_t i = t + 1; i < rows && !again; ++i) {
            if (m[i][t].is_zero()) continue;
            auto [q, r] = RatPoly::divmod(m[i][t], m[t][t]);
            for (std::size_t j = t; j < cols; ++j) m[i][j] = m[i][j] - q * m[t][j];
            if (!r.is_zero()) again = true;  // smaller-degree entry appeared
        }
        if (again) continue;
        for (std::size_t j = t + 1; j < cols && !again; ++j) {
            if (m[t][j].is_zero()) continue;
            auto [q, r] = RatPoly::divmod(m[t][j], m[t][t]);
            for (std::size_t i = t; i < rows; ++i) m[i][j] = m[i][j] - q * m[i][t];
            if (!r.is_zero()) again = true;
        }
        if (again) continue;
        // pivot must divide the rest of the block
        bool fixed = false;
        for (std::size_t i = t + 1; i < rows && !fixed; ++i)
            for (std::size_t j = t + 1; j < cols && !fixed; ++j)
                if (!RatPoly::divides(m[t][t], m[i][j])) {
                    for (std::size_t jj = t; jj < cols; ++jj) m[t][jj] = m[t][jj] + m[i][jj];
                    fixed = true;
                }
        if (fixed) continue;
        diag.push_back(m[t][t].monic());
        ++t;
    }
    while (diag.size() < bound) diag.push_back(RatPoly::zero());
    return diag;
}

}  // namespace knotcert
