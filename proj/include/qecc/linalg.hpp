#pragma once

#include <cstdint>
#include <vector>

#include "qecc/gf.hpp"

namespace qecc {

/// Row-reduce a matrix over the prime field F_p in place (reduced row
/// echelon form, rows sorted by pivot column, zero rows dropped).
/// Returns the pivot columns.
inline std::vector<std::size_t> rref_fp(std::vector<std::vector<std::uint32_t>>& rows, std::uint32_t p) {
    std::vector<std::size_t> pivots;
    if (rows.empty()) return pivots;
    const std::size_t ncols = rows[0].size();
    std::size_t r = 0;
    auto inv_mod = [p](std::uint32_t a) {
        // p is prime; Fermat
        std::uint64_t res = 1, b = a, e = p - 2;
        while (e) {
            if (e & 1) res = res * b % p;
            b = b * b % p;
            e >>= 1;
        }
        return static_cast<std::uint32_t>(res);
    };
    for (std::size_t col = 0; col < ncols && r < rows.size(); ++col) {
        std::size_t sel = r;
        while (sel < rows.size() && rows[sel][col] == 0) ++sel;
        if (sel == rows.size()) continue;
        std::swap(rows[r], rows[sel]);
        std::uint32_t iv = inv_mod(rows[r][col]);
        if (iv != 1)
            for (auto& v : rows[r]) v = static_cast<std::uint32_t>(std::uint64_t(v) * iv % p);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i == r || rows[i][col] == 0) continue;
            std::uint64_t f = rows[i][col];
            for (std::size_t j = col; j < ncols; ++j)
                rows[i][j] = static_cast<std::uint32_t>((rows[i][j] + (p - rows[r][j] % p) * f) % p);
        }
        pivots.push_back(col);
        ++r;
    }
    rows.resize(r);
    return pivots;
}

/// Reduce v against an RREF basis; returns the residue (zero iff v in span).
inline std::vector<std::uint32_t> reduce_against_fp(std::vector<std::uint32_t> v,
                                                    const std::vector<std::vector<std::uint32_t>>& rref,
                                                    const std::vector<std::size_t>& pivots, std::uint32_t p) {
    for (std::size_t i = 0; i < rref.size(); ++i) {
        std::uint32_t c = v[pivots[i]];
        if (c == 0) continue;
        for (std::size_t j = pivots[i]; j < v.size(); ++j)
            v[j] = static_cast<std::uint32_t>((v[j] + std::uint64_t(p - rref[i][j] % p) * c) % p);
    }
    return v;
}

inline bool is_zero_vec(const std::vector<std::uint32_t>& v) {
    for (auto x : v)
        if (x) return false;
    return true;
}

/// Nullspace basis of an F_p matrix (rows need not be independent).
inline std::vector<std::vector<std::uint32_t>> nullspace_fp(std::vector<std::vector<std::uint32_t>> rows,
                                                            std::size_t ncols, std::uint32_t p) {
    auto pivots = rref_fp(rows, p);
    std::vector<bool> is_pivot(ncols, false);
    for (auto c : pivots) is_pivot[c] = true;
    std::vector<std::vector<std::uint32_t>> basis;
    for (std::size_t free_col = 0; free_col < ncols; ++free_col) {
        if (is_pivot[free_col]) continue;
        std::vector<std::uint32_t> v(ncols, 0);
        v[free_col] = 1;
        for (std::size_t i = 0; i < rows.size(); ++i) {
            std::uint32_t c = rows[i][free_col];
            if (c) v[pivots[i]] = (p - c) % p;
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

/// RREF over an arbitrary FieldCtx; rows are symbol vectors. Returns pivots.
inline std::vector<std::size_t> rref_field(const FieldPtr& F, std::vector<Vec>& rows) {
    std::vector<std::size_t> pivots;
    if (rows.empty()) return pivots;
    const std::size_t ncols = rows[0].size();
    std::size_t r = 0;
    for (std::size_t col = 0; col < ncols && r < rows.size(); ++col) {
        std::size_t sel = r;
        while (sel < rows.size() && rows[sel][col] == 0) ++sel;
        if (sel == rows.size()) continue;
        std::swap(rows[r], rows[sel]);
        Elem iv = F->inv(rows[r][col]);
        if (iv != 1)
            for (auto& v : rows[r]) v = F->mul(v, iv);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i == r || rows[i][col] == 0) continue;
            Elem f = rows[i][col];
            for (std::size_t j = col; j < ncols; ++j) rows[i][j] = F->sub(rows[i][j], F->mul(f, rows[r][j]));
        }
        pivots.push_back(col);
        ++r;
    }
    rows.resize(r);
    return pivots;
}

inline std::vector<Vec> nullspace_field(const FieldPtr& F, std::vector<Vec> rows, std::size_t ncols) {
    auto pivots = rref_field(F, rows);
    std::vector<bool> is_pivot(ncols, false);
    for (auto c : pivots) is_pivot[c] = true;
    std::vector<Vec> basis;
    for (std::size_t free_col = 0; free_col < ncols; ++free_col) {
        if (is_pivot[free_col]) continue;
        Vec v(ncols, 0);
        v[free_col] = 1;
        for (std::size_t i = 0; i < rows.size(); ++i)
            if (rows[i][free_col]) v[pivots[i]] = F->neg(rows[i][free_col]);
        basis.push_back(std::move(v));
    }
    return basis;
}

}  // namespace qecc
