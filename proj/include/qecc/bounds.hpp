#pragma once

#include <map>
#include <string>

#include "qecc/additive_code.hpp"
#include "qecc/lp.hpp"

namespace qecc {

/// Krawtchouk polynomial of the Hamming scheme H(n, q^2):
/// K_j(x) = sum_s (-1)^s (q^2-1)^{j-s} C(x,s) C(n-x, j-s).
inline BigInt krawtchouk(unsigned n, std::uint64_t q, unsigned j, unsigned x) {
    require(j <= n && x <= n, "OutOfRange", "krawtchouk arguments must lie in [0, n]");
    const BigInt w = BigInt(q) * q - 1;
    BigInt acc = 0;
    for (unsigned s = 0; s <= j; ++s) {
        BigInt term = ipow(w, j - s) * binomial(x, s) * binomial(n - x, j - s);
        if (s % 2)
            acc -= term;
        else
            acc += term;
    }
    return acc;
}

/// Symplectic MacWilliams transform: B_j = (1/|C|) sum_x K_j(x) A_x.
/// Exact; rejects inputs whose transform is not a nonnegative integer vector.
inline WeightEnumerator macwilliams(const WeightEnumerator& A, unsigned n, std::uint64_t q, const BigInt& sizeC) {
    require(A.coeffs.size() == n + 1, "InconsistentSize", "enumerator must have n+1 coefficients");
    require(A.total() == sizeC, "InconsistentSize", "enumerator total disagrees with |C|");
    WeightEnumerator B;
    B.coeffs.assign(n + 1, 0);
    for (unsigned j = 0; j <= n; ++j) {
        BigInt num = 0;
        for (unsigned x = 0; x <= n; ++x) num += krawtchouk(n, q, j, x) * A.coeffs[x];
        require(num % sizeC == 0, "NonIntegerResult", "transform coefficient is not an integer");
        BigInt b = num / sizeC;
        require(b >= 0, "NonIntegerResult", "transform coefficient is negative");
        B.coeffs[j] = b;
    }
    return B;
}

/// Verdict of one bound check; slack is exact and nonnegative iff satisfied.
struct BoundVerdict {
    std::string bound;
    bool satisfied = false;
    BigRat slack = 0;
    std::map<std::string, std::string> inputs;
    bool is_mds = false;  // only meaningful for the Singleton check
};

namespace detail {

inline BigRat q_power(std::uint64_t q, long long e) {
    if (e >= 0) return BigRat(ipow(BigInt(q), static_cast<unsigned long long>(e)));
    return BigRat(1) / BigRat(ipow(BigInt(q), static_cast<unsigned long long>(-e)));
}

}  // namespace detail

/// Quantum Singleton bound K <= q^{n-2d+2}; equality marks an MDS code.
/// K is given as p-exponent; K = 1 codes pass vacuously.
inline BoundVerdict singleton_check(unsigned n, unsigned k_exponent, unsigned d, std::uint64_t q, std::uint32_t p,
                                    std::uint32_t m) {
    BoundVerdict v;
    v.bound = "singleton";
    BigRat K = BigRat(ipow(BigInt(p), k_exponent));
    BigRat rhs = detail::q_power(q, (long long)n - 2 * (long long)d + 2);
    v.slack = rhs - K;
    v.satisfied = k_exponent == 0 || K <= rhs;
    v.is_mds = K == rhs;
    v.inputs = {{"n", std::to_string(n)}, {"k_exponent", std::to_string(k_exponent)}, {"d", std::to_string(d)},
                {"q", std::to_string(q)}};
    (void)m;
    return v;
}

/// Quantum Hamming bound for d = 3, K > 1: K <= q^n / (n(q^2-1)+1).
inline BoundVerdict hamming_check_d3(unsigned n, unsigned k_exponent, std::uint64_t q, std::uint32_t p) {
    BoundVerdict v;
    v.bound = "hamming-d3";
    BigRat K = BigRat(ipow(BigInt(p), k_exponent));
    BigRat rhs = BigRat(ipow(BigInt(q), n)) / BigRat(BigInt(n) * (BigInt(q) * q - 1) + 1);
    v.slack = rhs - K;
    v.satisfied = K <= rhs;
    v.inputs = {{"n", std::to_string(n)}, {"k_exponent", std::to_string(k_exponent)}, {"q", std::to_string(q)}};
    return v;
}

/// Sphere-packing form for pure codes:
/// sum_{i<=floor((d-1)/2)} C(n,i)(q^2-1)^i <= q^n/K.
inline BoundVerdict hamming_check_pure(unsigned n, unsigned k_exponent, unsigned d, std::uint64_t q, std::uint32_t p) {
    BoundVerdict v;
    v.bound = "hamming-pure";
    BigInt lhs = 0;
    for (unsigned i = 0; i <= (d - 1) / 2; ++i) lhs += binomial(n, i) * ipow(BigInt(q) * q - 1, i);
    BigRat rhs = BigRat(ipow(BigInt(q), n)) / BigRat(ipow(BigInt(p), k_exponent));
    v.slack = rhs - BigRat(lhs);
    v.satisfied = BigRat(lhs) <= rhs;
    v.inputs = {{"n", std::to_string(n)}, {"k_exponent", std::to_string(k_exponent)}, {"d", std::to_string(d)},
                {"q", std::to_string(q)}};
    return v;
}

/// Gilbert-Varshamov: an ((n,K,>=d))_q stabilizer code with K>1 exists when
/// (q^n K - q^n/K) sum_{j<d} C(n,j)(q^2-1)^j < (q^{2n}-1)(p-1).
inline bool gv_exists(unsigned n, unsigned k_exponent, unsigned d, std::uint64_t q, std::uint32_t p) {
    require(k_exponent >= 1, "BadParameters", "GV needs K > 1");
    BigInt S = 0;
    for (unsigned j = 1; j + 1 <= d; ++j) S += binomial(n, j) * ipow(BigInt(q) * q - 1, j);
    BigRat K = BigRat(ipow(BigInt(p), k_exponent));
    BigRat qn = BigRat(ipow(BigInt(q), n));
    BigRat lhs = (qn * K - qn / K) * BigRat(S);
    BigRat rhs = BigRat(ipow(BigInt(q), 2 * n) - 1) * (p - 1);
    return lhs < rhs;
}

/// Linear GV: an F_{q^2}-linear [[n,k,d]]_q exists when k >= 1,
/// n = k mod 2 and (q^{n+k} - q^{n-k}) sum_{j<d} C(n,j)(q^2-1)^{j-1} < q^{2n}-1.
inline bool gv_linear_exists(unsigned n, unsigned k, unsigned d, std::uint64_t q) {
    require(k >= 1, "BadParameters", "linear GV needs k >= 1");
    require((n - k) % 2 == 0, "BadParameters", "linear GV needs n = k mod 2");
    BigInt S = 0;
    for (unsigned j = 1; j + 1 <= d; ++j) S += binomial(n, j) * ipow(BigInt(q) * q - 1, j - 1);
    BigInt lhs = (ipow(BigInt(q), n + k) - ipow(BigInt(q), n - k)) * S;
    BigInt rhs = ipow(BigInt(q), 2 * n) - 1;
    return lhs < rhs;
}

/// Short-MDS existence test: a linear [[n, n-2d+2, d]]_q exists when
/// 2 <= d <= ceil(n/2) and q^2 - 1 >= C(n,d).
inline bool mds_gv_exists(unsigned n, unsigned d, std::uint64_t q) {
    require(d >= 2 && d <= (n + 1) / 2, "BadParameters", "need 2 <= d <= ceil(n/2)");
    return BigInt(q) * q - 1 >= binomial(n, d);
}

/// Exact-rational feasibility of the linear program an ((n,K,d))_q
/// stabilizer code's symplectic weight distribution must satisfy.
/// Infeasible proves non-existence; Feasible proves nothing (the p-1
/// divisibility condition is only applied as a post-hoc filter).
struct LPVerdict {
    bool feasible = false;
    std::vector<BigRat> witness;  // A_0..A_n when feasible
    bool witness_integral = false;
    bool divisibility_filter_ok = false;  // meaningful only when integral
};

inline LPVerdict lp_feasible(unsigned n, unsigned k_exponent, unsigned d, std::uint64_t q, std::uint32_t p) {
    require(n <= 40, "TooLarge", "exact-rational LP guard is n <= 40");
    require(k_exponent >= 1, "BadParameters", "the LP models K > 1");
    require(d >= 1 && d <= n + 1, "BadParameters", "distance out of range");
    const BigRat K = BigRat(ipow(BigInt(p), k_exponent));
    const BigRat qn = BigRat(ipow(BigInt(q), n));
    const BigRat scale = K / qn;  // B_j = scale * sum_r K_j(r) A_r

    // variables A_1..A_n
    std::vector<std::vector<BigRat>> eq_rows, le_rows;
    std::vector<BigRat> eq_rhs, le_rhs;
    {
        std::vector<BigRat> sum_row(n, 1);
        eq_rows.push_back(sum_row);
        eq_rhs.push_back(qn / K - 1);
    }
    for (unsigned j = 1; j <= n; ++j) {
        // A_j - B_j (= or <=) scale*K_j(0), expanded over A_1..A_n
        std::vector<BigRat> row(n, 0);
        for (unsigned r = 1; r <= n; ++r) row[r - 1] = -scale * BigRat(krawtchouk(n, q, j, r));
        row[j - 1] += 1;
        BigRat rhs = scale * BigRat(krawtchouk(n, q, j, 0));
        if (j < d) {
            eq_rows.push_back(std::move(row));
            eq_rhs.push_back(std::move(rhs));
        } else {
            le_rows.push_back(std::move(row));
            le_rhs.push_back(std::move(rhs));
        }
    }
    auto sol = lp_phase1(std::move(eq_rows), std::move(eq_rhs), std::move(le_rows), std::move(le_rhs), n);
    LPVerdict v;
    v.feasible = sol.feasible;
    if (sol.feasible) {
        v.witness.push_back(1);
        for (auto& x : sol.witness) v.witness.push_back(x);
        v.witness_integral = true;
        for (const auto& x : v.witness)
            if (boost::multiprecision::denominator(x) != 1) v.witness_integral = false;
        if (v.witness_integral) {
            v.divisibility_filter_ok = true;
            for (std::size_t j = 1; j < v.witness.size(); ++j)
                if (boost::multiprecision::numerator(v.witness[j]) % (p - 1) != 0) v.divisibility_filter_ok = false;
        }
    }
    return v;
}

/// Generalized Carlitz-Uchiyama lower bound on the euclidean dual distance
/// of a narrow-sense primitive BCH code over F_p, design distance
/// delta = 2t+1. Clamped at zero with a triviality flag.
struct CarlitzBound {
    BigRat value;       // the exact right-hand side, possibly <= 0
    BigInt clamped;     // max(floor(value), 0)
    bool trivial;       // value <= 0
};

inline CarlitzBound carlitz_uchiyama(std::uint32_t p, unsigned m, std::uint64_t delta) {
    require(detail::is_prime_u64(p), "BadParameters", "p must be prime");
    require(delta >= 3 && delta % 2 == 1, "BadParameters", "design distance must be odd and >= 3");
    BigInt pm = ipow(BigInt(p), m);
    BigInt floor2sqrt = isqrt_floor(4 * pm);  // floor(2 p^{m/2})
    int bracket = ((delta - 1) % p == 0) ? 1 : 0;
    BigRat factor = BigRat(BigInt(delta) - 2 - bracket, 2);
    BigRat value = (BigRat(1) - BigRat(1, p)) * (BigRat(pm) - factor * BigRat(floor2sqrt));
    CarlitzBound out{value, 0, value <= 0};
    if (!out.trivial) out.clamped = rat_floor(value);
    return out;
}

/// Length/distance gate for nontrivial (d >= 3) MDS stabilizer codes:
/// 4 <= n <= q^2+d-2 <= 2q^2-2 and max{3, n-q^2+2} <= d <= min{n-1, q^2};
/// under the classical MDS conjecture, n <= q^2+1 except q even with
/// d in {4, q^2}, which allows n <= q^2+2.
inline BoundVerdict mds_constraints(unsigned n, unsigned d, std::uint64_t q, bool assume_mds_conjecture) {
    BoundVerdict v;
    v.bound = "mds-length";
    v.inputs = {{"n", std::to_string(n)}, {"d", std::to_string(d)}, {"q", std::to_string(q)},
                {"conjecture", assume_mds_conjecture ? "on" : "off"}};
    if (d < 3) {  // trivial MDS codes have unbounded length
        v.satisfied = true;
        v.slack = 0;
        return v;
    }
    const std::uint64_t q2 = q * q;
    std::uint64_t max_n = q2 + d - 2;
    if (max_n > 2 * q2 - 2) max_n = 2 * q2 - 2;
    bool ok = n >= 4 && n <= max_n;
    std::uint64_t dmin = n > q2 + 2 ? n - q2 + 2 : 3;
    if (dmin < 3) dmin = 3;
    std::uint64_t dmax = std::min<std::uint64_t>(n - 1, q2);
    ok = ok && d >= dmin && d <= dmax;
    if (assume_mds_conjecture && ok) {
        bool exceptional = (q % 2 == 0) && (d == 4 || d == q2);
        std::uint64_t cap = exceptional ? q2 + 2 : q2 + 1;
        if (cap < max_n) max_n = cap;
        ok = n <= max_n;
    }
    v.satisfied = ok;
    v.slack = BigRat(BigInt(max_n)) - BigRat(BigInt(n));
    if (!ok && v.slack >= 0) v.slack = -1;  // rejected by the distance window, not the length cap
    return v;
}

}  // namespace qecc
