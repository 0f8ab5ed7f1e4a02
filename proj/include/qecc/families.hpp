#pragma once

#include <bit>
#include <cmath>
#include <set>

#include "qecc/cyclic.hpp"
#include "qecc/stabilizer.hpp"

namespace qecc {

/// Factor a prime power q = p^e; BadParameters otherwise.
inline std::pair<std::uint32_t, std::uint32_t> prime_power(std::uint64_t q) {
    require(q >= 2, "BadParameters", "q must be a prime power >= 2");
    std::uint64_t p = q;
    for (std::uint64_t d = 2; d * d <= q; ++d)
        if (q % d == 0) {
            p = d;
            break;
        }
    std::uint32_t e = 0;
    std::uint64_t v = q;
    while (v % p == 0) {
        v /= p;
        ++e;
    }
    require(v == 1, "BadParameters", "q must be a prime power");
    return {static_cast<std::uint32_t>(p), e};
}

namespace detail {

inline std::uint64_t powmod(std::uint64_t b, std::uint64_t e, std::uint64_t mod) {
    __uint128_t r = 1, x = b % mod;
    while (e) {
        if (e & 1) r = r * x % mod;
        x = x * x % mod;
        e >>= 1;
    }
    return static_cast<std::uint64_t>(r);
}

/// ceil((delta-1)(1-1/q)) in exact integers.
inline std::uint64_t bch_coset_weight(std::uint64_t delta, std::uint64_t q) {
    return ((delta - 1) * (q - 1) + q - 1) / q;
}

inline StabilizerCode hermitian_route(const LinearCode& B, DistanceMode mode, Provenance prov, unsigned d_claim,
                                      DistanceStatus claim_status, unsigned purity_claim) {
    // carrier D = B^perp_h, self-orthogonal under the trace-alternating form
    auto D = B.dual_hermitian();
    require(D.subcode_of(B), "NotSelfOrthogonal", "hermitian dual is not nested in the code");
    auto Dadd = D.to_additive();
    AdditiveCode carrier(Dadd.field(), Flavor::Plain, Dadd.n(), Dadd.generators(), normal_pair(Dadd.field()));
    auto X = from_alternating(carrier, mode, std::move(prov));
    if (mode == DistanceMode::Exact) {
        require(X.d_claimed >= d_claim, "Internal", "exact distance fell below the family guarantee");
        if (claim_status == DistanceStatus::Exact)
            require(X.d_claimed == d_claim, "Internal", "exact distance disagrees with the family formula");
    } else {
        X.d_claimed = d_claim;
        X.d_status = claim_status;
        if (qecc::detail::combos_within_guard(X.F->p(), X.carrier.rank())) {
            auto raw = min_weight_nonzero(X.carrier);
            X.pure_to = std::min(raw.value_or(d_claim), d_claim);
        } else {
            X.pure_to = purity_claim;
        }
    }
    return X;
}

}  // namespace detail

/// Pure [[n, n-2m, 3]]_q from the Hamming code over F_{q^2},
/// n = (q^{2m}-1)/(q^2-1); needs gcd(m, q^2-1) = 1.
inline StabilizerCode quantum_hamming_hermitian(std::uint64_t q, unsigned m, DistanceMode mode) {
    auto [p, e] = prime_power(q);
    require(m >= 2, "BadParameters", "m must be at least 2");
    require(std::gcd(std::uint64_t(m), q * q - 1) == 1, "BadParameters", "gcd(m, q^2-1) must be 1");
    const std::uint64_t n = (powu64(q, 2 * m) - 1) / (q * q - 1);
    FieldPtr Fq2 = FieldCtx::get(p, 2 * e);
    auto Z = union_of_cosets(n, Fq2->q(), 1, 1);
    require(Z.size() == m, "Internal", "Hamming defining set has unexpected size");
    require(hermitian_self_orthogonal(Z, n, q), "Internal", "Hamming code lost hermitian self-orthogonality");
    auto H = to_linear_code(build_cyclic(n, Fq2, Z));
    Provenance prov{"hamming-h", {{"q", (long long)q}, {"m", m}}};
    return detail::hermitian_route(H, mode, std::move(prov), 3, DistanceStatus::Exact, 3);
}

/// Pure [[n, n-2m, 3]]_q from the euclidean-contained Hamming code over F_q,
/// n = (q^m-1)/(q-1); needs gcd(m, q-1) = 1 and n >= 2m.
inline StabilizerCode quantum_hamming_euclidean(std::uint64_t q, unsigned m, DistanceMode mode) {
    auto [p, e] = prime_power(q);
    require(m >= 2, "BadParameters", "m must be at least 2");
    require(std::gcd(std::uint64_t(m), q - 1) == 1, "BadParameters", "gcd(m, q-1) must be 1");
    const std::uint64_t n = (powu64(q, m) - 1) / (q - 1);
    require(n >= 2 * std::uint64_t(m), "BadParameters", "length too short for n-2m >= 0");
    FieldPtr F = FieldCtx::get(p, e);
    auto Z = union_of_cosets(n, q, 1, 1);
    require(Z.size() == m, "Internal", "Hamming defining set has unexpected size");
    require(euclidean_self_orthogonal(Z, n), "BadParameters",
            "Hamming generator is self-reciprocal at these parameters; no dual containment");
    auto H = to_linear_code(build_cyclic(n, F, Z));
    Provenance prov{"hamming-e", {{"q", (long long)q}, {"m", m}}};
    auto X = css(H, H, mode, std::move(prov));
    if (mode == DistanceMode::Exact) {
        require(X.d_claimed == 3, "Internal", "Hamming quantum code must have distance 3");
    } else {
        X.d_claimed = 3;
        X.d_status = DistanceStatus::Exact;
        X.pure_to = std::min(X.pure_to.value_or(3), 3u);
    }
    return X;
}

/// Quadratic-residue stabilizer codes [[n,1,d]]_q for prime n with q a
/// residue mod n: d^2-d+1 >= n when n = 3 mod 4, d >= sqrt(n) when n = 1 mod 4.
inline StabilizerCode quantum_qr(std::uint64_t q, std::uint64_t n, DistanceMode mode) {
    auto [p, e] = prime_power(q);
    require(qecc::detail::is_prime_u64(n), "NotPrime", "n must be prime");
    require(n % 2 == 1 && q % n != 0, "BadParameters", "n must be an odd prime not dividing q");
    require(detail::powmod(q, (n - 1) / 2, n) == 1, "NotResidue", "q must be a quadratic residue mod n");
    FieldPtr F = FieldCtx::get(p, e);
    std::set<std::uint64_t> R;
    for (std::uint64_t r = 1; r <= (n - 1) / 2; ++r) R.insert(r * r % n);
    std::set<std::uint64_t> N;
    for (std::uint64_t x = 1; x < n; ++x)
        if (!R.count(x)) N.insert(x);

    Provenance prov{"qr", {{"q", (long long)q}, {"n", (long long)n}}};
    StabilizerCode X = [&] {
        auto CR = to_linear_code(build_cyclic(n, F, R));
        if (n % 4 == 3) return css(CR, CR, mode, prov);
        auto CN = to_linear_code(build_cyclic(n, F, N));
        return css(CN, CR, mode, prov);
    }();
    unsigned bound;
    if (n % 4 == 3) {
        bound = 2;
        while (std::uint64_t(bound) * bound - bound + 1 < n) ++bound;
    } else {
        bound = static_cast<unsigned>(std::ceil(std::sqrt(double(n)) - 1e-9));
    }
    if (mode == DistanceMode::Exact) {
        require(X.d_claimed >= bound, "Internal", "exact QR distance fell below the guaranteed bound");
    } else {
        X.d_claimed = bound;
        X.d_status = DistanceStatus::LowerBound;
        X.pure_to = std::min(X.pure_to.value_or(bound), bound);
    }
    return X;
}

/// Quantum Melas codes [[q^{2m}-1, n-4m, >=3]]_q for even q, pure to 3.
inline StabilizerCode quantum_melas(std::uint64_t q, unsigned m, DistanceMode mode) {
    auto [p, e] = prime_power(q);
    require(p == 2, "BadParameters", "the Melas distance bound needs even q");
    const std::uint64_t n = powu64(q, 2 * m) - 1;
    require(n > 4 * std::uint64_t(m), "BadParameters", "n - 4m must be positive");
    FieldPtr Fq2 = FieldCtx::get(p, 2 * e);
    std::set<std::uint64_t> Z = union_of_cosets(n, Fq2->q(), 1, 1);
    for (auto z : coset_of(n - 1, n, Fq2->q())) Z.insert(z);
    require(Z.size() == 2 * std::uint64_t(m), "Internal", "Melas defining set has unexpected size");
    require(hermitian_self_orthogonal(Z, n, q), "Internal", "Melas coset disjointness failed");
    auto M = to_linear_code(build_cyclic(n, Fq2, Z));
    Provenance prov{"melas", {{"q", (long long)q}, {"m", m}}};
    return detail::hermitian_route(M, mode, std::move(prov), 3, DistanceStatus::LowerBound, 3);
}

/// Euclidean-route narrow-sense primitive BCH:
/// [[q^m-1, q^m-1-2m*ceil((delta-1)(1-1/q)), >=delta]]_q, pure to delta.
inline StabilizerCode quantum_bch_euclidean(std::uint64_t q, unsigned m, std::uint64_t delta, DistanceMode mode) {
    auto [p, e] = prime_power(q);
    require(m >= 2, "BadParameters", "m must be at least 2");
    std::uint64_t dmax = powu64(q, (m + 1) / 2) - 1 - (m % 2 ? q - 2 : 0);
    require(delta >= 2 && delta <= dmax, "DeltaOutOfRange", "design distance outside the dual-containment range");
    const std::uint64_t n = powu64(q, m) - 1;
    FieldPtr F = FieldCtx::get(p, e);
    auto Z = union_of_cosets(n, q, 1, delta - 1);
    require(euclidean_self_orthogonal(Z, n), "Internal", "euclidean dual containment lost");
    require(Z.size() == std::uint64_t(m) * detail::bch_coset_weight(delta, q), "Internal",
            "BCH defining-set size disagrees with the dimension formula");
    auto B = to_linear_code(build_cyclic(n, F, Z));
    Provenance prov{"bch-e", {{"q", (long long)q}, {"m", m}, {"delta", (long long)delta}}};
    auto X = css(B, B, mode, std::move(prov));
    if (mode == DistanceMode::Exact) {
        require(X.d_claimed >= delta, "Internal", "exact BCH distance fell below the design distance");
    } else {
        X.d_claimed = static_cast<unsigned>(delta);
        X.d_status = DistanceStatus::LowerBound;
        X.pure_to = std::min<unsigned>(X.pure_to.value_or(delta), delta);
    }
    return X;
}

/// Hermitian-route narrow-sense primitive BCH over F_{q^2}:
/// [[q^{2m}-1, n-2m*ceil((delta-1)(1-1/q^2)), >=delta]]_q, pure to delta.
inline StabilizerCode quantum_bch_hermitian(std::uint64_t q, unsigned m, std::uint64_t delta, DistanceMode mode) {
    auto [p, e] = prime_power(q);
    require(m >= 1, "BadParameters", "m must be positive");
    require(delta >= 2 && delta <= powu64(q, m) - 1, "DeltaOutOfRange", "design distance must be in [2, q^m-1]");
    const std::uint64_t n = powu64(q, 2 * m) - 1;
    FieldPtr Fq2 = FieldCtx::get(p, 2 * e);
    auto Z = union_of_cosets(n, Fq2->q(), 1, delta - 1);
    require(hermitian_self_orthogonal(Z, n, q), "Internal", "hermitian dual containment lost");
    require(Z.size() == std::uint64_t(m) * detail::bch_coset_weight(delta, q * q), "Internal",
            "BCH defining-set size disagrees with the dimension formula");
    auto B = to_linear_code(build_cyclic(n, Fq2, Z));
    Provenance prov{"bch-h", {{"q", (long long)q}, {"m", m}, {"delta", (long long)delta}}};
    return detail::hermitian_route(B, mode, std::move(prov), static_cast<unsigned>(delta),
                                   DistanceStatus::LowerBound, static_cast<unsigned>(delta));
}

/// Extend a hermitian-BCH stabilizer code by one coordinate:
/// [[n+1, 2k-n-1, >=delta+1]]_q, pure to delta+1. The classical carrier is
/// rebuilt from provenance; needs n = -1 mod p.
inline StabilizerCode extend_bch(const StabilizerCode& code, DistanceMode mode) {
    require(code.provenance.family == "bch-h", "NotExtendable", "only hermitian BCH codes extend this way");
    const std::uint64_t q = code.provenance.params.at("q");
    const unsigned m = static_cast<unsigned>(code.provenance.params.at("m"));
    const std::uint64_t delta = code.provenance.params.at("delta");
    auto [p, e] = prime_power(q);
    const std::uint64_t n = powu64(q, 2 * m) - 1;
    require((n + 1) % p == 0, "NotExtendable", "length is not -1 mod p");
    FieldPtr Fq2 = FieldCtx::get(p, 2 * e);
    auto Z = union_of_cosets(n, Fq2->q(), 1, delta - 1);
    auto B = to_linear_code(build_cyclic(n, Fq2, Z));
    // append the parity symbol -sum(v) to every generator
    std::vector<Vec> rows;
    for (const auto& g : B.basis()) {
        Vec row = g;
        Elem s = 0;
        for (Elem x : g) s = Fq2->add(s, x);
        row.push_back(Fq2->neg(s));
        rows.push_back(std::move(row));
    }
    LinearCode Be(Fq2, B.n() + 1, std::move(rows));
    require(Be.k() == B.k(), "Internal", "extension changed the dimension");
    Provenance prov{"bch-ext", {{"q", (long long)q}, {"m", m}, {"delta", (long long)delta}}};
    return detail::hermitian_route(Be, mode, std::move(prov), static_cast<unsigned>(delta) + 1,
                                   DistanceStatus::LowerBound, static_cast<unsigned>(delta) + 1);
}

/// Group character code C_q(r, m) over Z_2^m: [2^m, sum_{j<=r} C(m,j), 2^{m-r}]_q
/// for odd q. Rows are (-1)^{x.y} indexed by x of weight <= r.
inline LinearCode character_code(std::uint64_t q, unsigned r, unsigned m) {
    auto [p, e] = prime_power(q);
    require(p != 2, "BadParameters", "character codes over Z_2^m need odd q");
    require(r <= m, "BadParameters", "order out of range");
    FieldPtr F = FieldCtx::get(p, e);
    const unsigned n = 1u << m;
    Elem minus_one = F->neg(1);
    std::vector<Vec> rows;
    for (unsigned x = 0; x < n; ++x) {
        if (static_cast<unsigned>(std::popcount(x)) > r) continue;
        Vec row(n);
        for (unsigned y = 0; y < n; ++y) row[y] = (std::popcount(x & y) % 2) ? minus_one : 1;
        rows.push_back(std::move(row));
    }
    LinearCode C(F, n, std::move(rows));
    BigInt expect = 0;
    for (unsigned j = 0; j <= r; ++j) expect += binomial(m, j);
    require(BigInt(C.k()) == expect, "Internal", "character code dimension mismatch");
    return C;
}

/// CSS pair of character codes:
/// [[2^m, k(r2)-k(r1), min{2^{m-r2}, 2^{r1+1}}]]_q for 0 <= r1 < r2 <= m.
inline StabilizerCode quantum_character(std::uint64_t q, unsigned m, unsigned r1, unsigned r2, DistanceMode mode) {
    require(r1 < r2 && r2 <= m, "BadParameters", "need 0 <= r1 < r2 <= m");
    auto C1 = character_code(q, r2, m);
    auto C2 = character_code(q, r1, m).dual();
    Provenance prov{"character", {{"q", (long long)q}, {"m", m}, {"r1", r1}, {"r2", r2}}};
    auto X = css(C1, C2, mode, std::move(prov));
    unsigned d = std::min(1u << (m - r2), 1u << (r1 + 1));
    if (mode == DistanceMode::Exact) {
        require(X.d_claimed == d, "Internal", "character code distance disagrees with the family formula");
    } else {
        X.d_claimed = d;
        X.d_status = DistanceStatus::Exact;
        X.pure_to = std::min(X.pure_to.value_or(d), d);
    }
    return X;
}

/// Dimension and distance of the cyclic generalized Reed-Muller code
/// R*_q(nu, m): k* by the alternating binomial sum, d* = (R+1)q^Q - 1
/// where m(q-1) - nu = (q-1)Q + R.
inline std::pair<std::uint64_t, std::uint64_t> grm_params(std::uint64_t q, unsigned nu, unsigned m) {
    require(nu <= m * (q - 1) - 1, "OrderOutOfRange", "nu must be at most m(q-1)-1");
    BigInt k = 0;
    for (unsigned j = 0; j <= m; ++j) {
        long long top = (long long)m + nu - (long long)j * q;
        long long bot = (long long)nu - (long long)j * q;
        BigInt term = binomial(m, j) * binomial(top, bot);
        if (j % 2)
            k -= term;
        else
            k += term;
    }
    std::uint64_t rem = m * (q - 1) - nu;
    std::uint64_t Q = rem / (q - 1), R = rem % (q - 1);
    std::uint64_t d = (R + 1) * powu64(q, static_cast<unsigned>(Q)) - 1;
    return {k.convert_to<std::uint64_t>(), d};
}

struct GRMCode {
    std::uint64_t q;
    unsigned nu, m;
    std::uint64_t k_star, d_star;
    LinearCode code;
};

/// The q^m - 1 nonzero points of F_q^m in the cyclic order P_i = beta^i,
/// coordinatized over F_q by the power basis of the splitting field. This
/// order makes evaluation codes cyclic and coordinate-compatible with the
/// BCH codes built from the same pinned beta.
inline std::vector<Vec> grm_points(std::uint64_t q, unsigned m, std::uint64_t point_guard = 1u << 20) {
    auto [p, e] = prime_power(q);
    require(powu64(q, m) <= point_guard, "OrderOutOfRange", "point set too large to materialize");
    FieldPtr F = FieldCtx::get(p, e);
    const std::uint64_t npts = powu64(q, m) - 1;
    auto ru = nth_root_of_unity(F, npts);  // ext = F_{q^m}, beta primitive
    const FieldPtr& E = ru.ext;
    const auto& emb = embedding(F, E);
    Elem xi = E->m() == 1 ? 1 : static_cast<Elem>(E->p());
    std::vector<Vec> tuple_of(E->q());
    std::vector<bool> seen(E->q(), false);
    for (std::uint64_t t = 0; t < npts + 1; ++t) {
        Vec tup(m);
        std::uint64_t v = t;
        Elem y = 0, power = 1;
        for (unsigned i = 0; i < m; ++i) {
            tup[i] = static_cast<Elem>(v % q);
            v /= q;
            if (tup[i]) y = E->add(y, E->mul(emb[tup[i]], power));
            power = E->mul(power, xi);
        }
        require(!seen[y], "Internal", "power basis failed to coordinatize the extension");
        seen[y] = true;
        tuple_of[y] = std::move(tup);
    }
    std::vector<Vec> points(npts);
    Elem cur = 1;
    for (std::uint64_t i = 0; i < npts; ++i) {
        points[i] = tuple_of[cur];
        cur = E->mul(cur, ru.beta);
    }
    return points;
}

/// Evaluation-code construction over the grm_points order.
inline GRMCode grm_code(std::uint64_t q, unsigned nu, unsigned m, std::uint64_t point_guard = 1u << 20) {
    auto [p, e] = prime_power(q);
    auto [kstar, dstar] = grm_params(q, nu, m);
    FieldPtr F = FieldCtx::get(p, e);
    const std::uint64_t npts = powu64(q, m) - 1;
    auto points = grm_points(q, m, point_guard);

    std::vector<Vec> rows;
    const std::uint64_t mono_total = powu64(q, m);
    for (std::uint64_t mono = 0; mono < mono_total; ++mono) {
        std::uint64_t v = mono;
        unsigned total = 0;
        std::vector<unsigned> exps(m);
        for (unsigned i = 0; i < m; ++i) {
            exps[i] = static_cast<unsigned>(v % q);
            total += exps[i];
            v /= q;
        }
        if (total > nu) continue;
        Vec row(npts);
        for (std::uint64_t pt = 0; pt < npts; ++pt) {
            Elem val = 1;
            for (unsigned i = 0; i < m; ++i)
                if (exps[i]) val = F->mul(val, F->pow(points[pt][i], exps[i]));
            row[pt] = val;
        }
        rows.push_back(std::move(row));
    }
    LinearCode C(F, static_cast<unsigned>(npts), std::move(rows));
    require(C.k() == kstar, "Internal", "GRM rank disagrees with the dimension formula");
    return GRMCode{q, nu, m, kstar, dstar, std::move(C)};
}

/// Largest order nu with R*_q(nu, m) inside the narrow-sense primitive BCH
/// code of design distance delta.
inline unsigned grm_largest_in_bch(std::uint64_t q, unsigned m, std::uint64_t delta) {
    require(delta >= 2, "BadParameters", "delta must be at least 2");
    unsigned Q = 0;
    while (powu64(q, Q + 1) <= delta + 1) ++Q;
    std::uint64_t R = (delta + 1 + powu64(q, Q) - 1) / powu64(q, Q) - 1;
    return static_cast<unsigned>((m - Q) * (q - 1) - R);
}

}  // namespace qecc
