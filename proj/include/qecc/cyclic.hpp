#pragma once

#include <algorithm>
#include <set>
#include <vector>

#include "qecc/linear_code.hpp"
#include "qecc/poly.hpp"

namespace qecc {

/// Orbit of x under multiplication by Q modulo n, sorted.
inline std::vector<std::uint64_t> coset_of(std::uint64_t x, std::uint64_t n, std::uint64_t Q) {
    std::vector<std::uint64_t> orbit;
    std::uint64_t cur = x % n;
    do {
        orbit.push_back(cur);
        cur = cur * (Q % n) % n;
    } while (cur != x % n);
    std::sort(orbit.begin(), orbit.end());
    return orbit;
}

struct CyclotomicCoset {
    std::uint64_t representative;  // minimum element
    std::vector<std::uint64_t> elements;
};

/// The partition of Z_n into Q-cyclotomic cosets, ordered by representative.
inline std::vector<CyclotomicCoset> cosets(std::uint64_t n, std::uint64_t Q) {
    require(n >= 1, "BadParameters", "n must be positive");
    require(std::gcd(n, Q) == 1, "NotCoprime", "multiplier must be coprime to n");
    std::vector<bool> seen(n, false);
    std::vector<CyclotomicCoset> out;
    for (std::uint64_t x = 0; x < n; ++x) {
        if (seen[x]) continue;
        auto orbit = coset_of(x, n, Q);
        for (auto e : orbit) seen[e] = true;
        out.push_back({orbit.front(), std::move(orbit)});
    }
    return out;
}

inline bool coset_closed(const std::set<std::uint64_t>& Z, std::uint64_t n, std::uint64_t Q) {
    for (auto z : Z)
        if (!Z.count(z * (Q % n) % n)) return false;
    return true;
}

/// Coset test for C^perp_h <= C over F_{q^2}: Z and
/// Z^{-q} = {-qz mod n} are disjoint.
inline bool hermitian_self_orthogonal(const std::set<std::uint64_t>& Z, std::uint64_t n, std::uint64_t q) {
    for (auto z : Z) {
        std::uint64_t w = (n - (z * (q % n)) % n) % n;
        if (Z.count(w)) return false;
    }
    return true;
}

/// Coset test for C^perp <= C over F_q: Z and -Z are disjoint.
inline bool euclidean_self_orthogonal(const std::set<std::uint64_t>& Z, std::uint64_t n) {
    for (auto z : Z)
        if (Z.count((n - z % n) % n)) return false;
    return true;
}

/// Cyclic code of length n over its alphabet, pinned down by the defining
/// set Z: g(x) is the monic product of (x - beta^z) over z in Z, with beta
/// the deterministic primitive n-th root of unity of the alphabet.
struct CyclicCode {
    std::uint64_t n = 0;
    FieldPtr alphabet;
    std::vector<std::uint64_t> defining_set;  // sorted
    Poly generator;                           // over the alphabet
    FieldPtr root_field;
    Elem beta = 0;

    unsigned k() const noexcept { return static_cast<unsigned>(n - defining_set.size()); }
};

inline CyclicCode build_cyclic(std::uint64_t n, const FieldPtr& alphabet, const std::set<std::uint64_t>& Z) {
    require(std::gcd(n, std::uint64_t(alphabet->p())) == 1, "NotCoprime", "length shares a factor with the characteristic");
    for (auto z : Z) require(z < n, "BadParameters", "defining set entry out of range");
    require(coset_closed(Z, n, alphabet->q()), "NotCosetClosed",
            "defining set is not a union of cyclotomic cosets");
    auto ru = nth_root_of_unity(alphabet, n);
    Vec roots;
    roots.reserve(Z.size());
    for (auto z : Z) roots.push_back(ru.ext->pow(ru.beta, z));
    Poly g_ext = poly_from_roots(ru.ext, roots);
    // coset closure makes every coefficient Galois-fixed, i.e. in the alphabet
    Vec coeffs(g_ext.c.size());
    for (std::size_t i = 0; i < g_ext.c.size(); ++i) coeffs[i] = pullback(alphabet, ru.ext, g_ext.c[i]);
    CyclicCode C;
    C.n = n;
    C.alphabet = alphabet;
    C.defining_set.assign(Z.begin(), Z.end());
    C.generator = Poly(alphabet, std::move(coeffs));
    C.root_field = ru.ext;
    C.beta = ru.beta;
    return C;
}

/// Generator matrix: the k cyclic shifts x^i g(x), i < k.
inline LinearCode to_linear_code(const CyclicCode& C) {
    const unsigned k = C.k();
    std::vector<Vec> rows;
    rows.reserve(k);
    for (unsigned i = 0; i < k; ++i) {
        Vec row(C.n, 0);
        for (std::size_t j = 0; j < C.generator.c.size(); ++j) row[i + j] = C.generator.c[j];
        rows.push_back(std::move(row));
    }
    return LinearCode(C.alphabet, static_cast<unsigned>(C.n), std::move(rows));
}

/// Union of the Q-cosets of x, b <= x <= b + count - 1 (BCH defining sets).
inline std::set<std::uint64_t> union_of_cosets(std::uint64_t n, std::uint64_t Q, std::uint64_t first,
                                               std::uint64_t count) {
    std::set<std::uint64_t> Z;
    for (std::uint64_t x = first; x < first + count; ++x)
        for (auto e : coset_of(x, n, Q)) Z.insert(e);
    return Z;
}

}  // namespace qecc
