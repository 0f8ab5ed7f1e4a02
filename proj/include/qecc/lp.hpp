#pragma once

#include <vector>

#include "qecc/bigint.hpp"
#include "qecc/error.hpp"

namespace qecc {

/// Exact-rational feasibility of { x >= 0 : Aeq x = beq, Ale x <= ble },
/// by phase-1 simplex with explicit artificials and Bland's rule (finite
/// termination with exact pivots). Returns a witness when feasible.
struct LPFeasibility {
    bool feasible = false;
    std::vector<BigRat> witness;
};

inline LPFeasibility lp_phase1(std::vector<std::vector<BigRat>> eq_rows, std::vector<BigRat> eq_rhs,
                               std::vector<std::vector<BigRat>> le_rows, std::vector<BigRat> le_rhs,
                               std::size_t nvars) {
    const std::size_t n_eq = eq_rows.size(), n_le = le_rows.size();
    const std::size_t rows = n_eq + n_le;
    // columns: structural | slacks (one per <= row) | artificials | rhs
    const std::size_t slack0 = nvars;
    const std::size_t art0 = nvars + n_le;
    const std::size_t ncols = art0 + rows;  // upper bound on artificial count
    const std::size_t rhs = ncols;

    std::vector<std::vector<BigRat>> T(rows, std::vector<BigRat>(ncols + 1, 0));
    std::vector<long> basis(rows, -1);
    std::size_t nart = 0;

    for (std::size_t i = 0; i < n_le; ++i) {
        for (std::size_t j = 0; j < nvars; ++j) T[i][j] = le_rows[i][j];
        T[i][slack0 + i] = 1;
        T[i][rhs] = le_rhs[i];
        if (T[i][rhs] < 0)
            for (auto& v : T[i]) v = -v;  // slack coefficient went to -1; needs an artificial
        if (T[i][slack0 + i] == 1 && T[i][rhs] >= 0) {
            basis[i] = static_cast<long>(slack0 + i);
        } else {
            T[i][art0 + nart] = 1;
            basis[i] = static_cast<long>(art0 + nart++);
        }
    }
    for (std::size_t i = 0; i < n_eq; ++i) {
        std::size_t r = n_le + i;
        for (std::size_t j = 0; j < nvars; ++j) T[r][j] = eq_rows[i][j];
        T[r][rhs] = eq_rhs[i];
        if (T[r][rhs] < 0)
            for (auto& v : T[r]) v = -v;
        T[r][art0 + nart] = 1;
        basis[r] = static_cast<long>(art0 + nart++);
    }

    // reduced-cost row for minimizing the artificial sum
    std::vector<BigRat> obj(ncols + 1, 0);
    for (std::size_t a = 0; a < nart; ++a) obj[art0 + a] = 1;
    for (std::size_t i = 0; i < rows; ++i)
        if (basis[i] >= static_cast<long>(art0))
            for (std::size_t j = 0; j <= ncols; ++j) obj[j] -= T[i][j];

    for (;;) {
        // Bland: smallest-index entering column with negative reduced cost
        std::size_t enter = ncols;
        for (std::size_t j = 0; j < ncols; ++j)
            if (obj[j] < 0) {
                enter = j;
                break;
            }
        if (enter == ncols) break;
        std::size_t leave = rows;
        BigRat best;
        for (std::size_t i = 0; i < rows; ++i) {
            if (T[i][enter] <= 0) continue;
            BigRat ratio = T[i][rhs] / T[i][enter];
            if (leave == rows || ratio < best || (ratio == best && basis[i] < basis[leave])) {
                best = ratio;
                leave = i;
            }
        }
        require(leave != rows, "Internal", "phase-1 objective unbounded");
        BigRat piv = T[leave][enter];
        for (auto& v : T[leave]) v /= piv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == leave || T[i][enter] == 0) continue;
            BigRat f = T[i][enter];
            for (std::size_t j = 0; j <= ncols; ++j) T[i][j] -= f * T[leave][j];
        }
        if (obj[enter] != 0) {
            BigRat f = obj[enter];
            for (std::size_t j = 0; j <= ncols; ++j) obj[j] -= f * T[leave][j];
        }
        basis[leave] = static_cast<long>(enter);
    }

    LPFeasibility out;
    out.feasible = obj[rhs] == 0;  // obj[rhs] = -w
    if (out.feasible) {
        out.witness.assign(nvars, 0);
        for (std::size_t i = 0; i < rows; ++i)
            if (basis[i] >= 0 && basis[i] < static_cast<long>(nvars)) out.witness[basis[i]] = T[i][rhs];
    }
    return out;
}

}  // namespace qecc
