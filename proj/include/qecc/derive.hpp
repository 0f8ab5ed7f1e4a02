#pragma once

#include <optional>

#include "qecc/stabilizer.hpp"

namespace qecc {

namespace detail {

inline AdditiveCode carrier_over_q2(const StabilizerCode& X) { return phi_image(X.carrier); }

inline void claim(StabilizerCode& X, unsigned d, DistanceStatus status, std::optional<unsigned> pure_claim,
                  DistanceMode mode) {
    if (mode == DistanceMode::Exact) {
        // exact values already computed; the claim only sanity-checks them
        require(X.d_claimed >= (status == DistanceStatus::Exact ? d : 1u), "Internal",
                "derived distance fell below the rule's guarantee");
        return;
    }
    X.d_claimed = d;
    X.d_status = status;
    if (combos_within_guard(X.F->p(), X.carrier.rank())) {
        auto raw = min_weight_nonzero(X.carrier);
        X.pure_to = std::min(raw.value_or(d), d);
    } else {
        X.pure_to = pure_claim;
    }
}

}  // namespace detail

/// [[n,k,d]] -> impure [[n+1,k,d]]: append a free a-coordinate to the
/// carrier (C' = {(a alpha | b 0)}).
inline StabilizerCode lengthen(const StabilizerCode& X, DistanceMode mode) {
    require(X.k_exponent > 0, "ZeroDimensional", "lengthening needs k > 0");
    const FieldPtr& F = X.F;
    const unsigned n = X.n;
    std::vector<Vec> gens;
    for (const auto& g : X.carrier.basis()) {
        Vec row(2 * std::size_t(n) + 2, 0);
        std::copy(g.begin(), g.begin() + n, row.begin());
        std::copy(g.begin() + n, g.end(), row.begin() + n + 1);
        gens.push_back(std::move(row));
    }
    for (std::uint32_t t = 0; t < F->m(); ++t) {
        Vec row(2 * std::size_t(n) + 2, 0);
        Elem mono = 1;
        for (std::uint32_t i = 0; i < t; ++i) mono = static_cast<Elem>(mono * F->p());
        row[n] = mono;
        gens.push_back(std::move(row));
    }
    AdditiveCode carrier(F, Flavor::Symplectic, n + 1, std::move(gens));
    Provenance prov{"lengthen", {{"base_n", n}}};
    auto Y = from_symplectic(carrier, mode, std::move(prov));
    require(Y.k_exponent == X.k_exponent, "Internal", "lengthening changed k");
    detail::claim(Y, X.d_claimed, X.d_status, 1u, mode);
    return Y;
}

/// pure [[n,k,d]] -> pure [[n-1,k+1,d-1]] (n >= 2, d >= 2): shorten the
/// phi-image on its first coordinate.
inline StabilizerCode shorten_pure(const StabilizerCode& X, DistanceMode mode) {
    require(X.is_pure(), "NotPure", "shortening needs a verified pure code");
    require(X.n >= 2 && X.d_claimed >= 2, "TooShort", "need n >= 2 and d >= 2");
    auto D = detail::carrier_over_q2(X);
    const FieldPtr& Fq2 = D.field();
    // rows whose echelon pivot lies beyond the first symbol have a zero
    // first symbol; dropping that coordinate shortens the code
    std::vector<Vec> gens;
    for (const auto& g : D.basis())
        if (g[0] == 0) gens.push_back(Vec(g.begin() + 1, g.end()));
    AdditiveCode D0(Fq2, Flavor::Plain, X.n - 1, std::move(gens), D.beta());
    Provenance prov{"shorten", {{"base_n", X.n}}};
    auto Y = from_alternating(D0, mode, std::move(prov));
    require(Y.k_exponent == X.k_exponent + X.F->m(), "Internal", "shortening did not gain one q-unit of k");
    detail::claim(Y, X.d_claimed - 1, DistanceStatus::LowerBound, X.d_claimed - 1, mode);
    return Y;
}

/// [[n,k,d]] -> [[n, k - 1/m, d* >= d]] (one p-step): grow the carrier by
/// the first alternating-dual basis vector outside it.
inline StabilizerCode reduce_dim(const StabilizerCode& X, DistanceMode mode) {
    const unsigned m = X.F->m();
    bool pure = X.is_pure();
    require(pure ? X.k_exponent >= 1 : X.k_exponent >= m + 1, "NoRoom", "k too small to reduce");
    auto D = detail::carrier_over_q2(X);
    auto Da = D.dual(DualForm::Alternating);
    std::vector<Vec> gens = D.generators();
    bool grown = false;
    for (const auto& g : Da.basis())
        if (!D.contains(g)) {
            gens.push_back(g);
            grown = true;
            break;
        }
    require(grown, "NoRoom", "dual adds no new vector");
    AdditiveCode Db(D.field(), Flavor::Plain, X.n, std::move(gens), D.beta());
    Provenance prov{"reduce", {{"base_n", X.n}}};
    auto Y = from_alternating(Db, mode, std::move(prov));
    require(Y.k_exponent + 1 == X.k_exponent, "Internal", "reduction did not drop one p-unit of k");
    detail::claim(Y, X.d_claimed, DistanceStatus::LowerBound, pure ? std::optional<unsigned>(X.d_claimed) : std::nullopt,
                  mode);
    return Y;
}

/// ((n,K,d)) + ((n',K',d')) -> ((n+n', KK', min(d,d'))): coordinate-wise
/// concatenation of the carriers.
inline StabilizerCode direct_sum(const StabilizerCode& X1, const StabilizerCode& X2, DistanceMode mode) {
    require(same_field(X1.F, X2.F), "MixedFields", "direct sum needs a common alphabet");
    const FieldPtr& F = X1.F;
    const unsigned n1 = X1.n, n2 = X2.n, n = n1 + n2;
    std::vector<Vec> gens;
    for (const auto& g : X1.carrier.basis()) {
        Vec row(2 * std::size_t(n), 0);
        std::copy(g.begin(), g.begin() + n1, row.begin());
        std::copy(g.begin() + n1, g.end(), row.begin() + n);
        gens.push_back(std::move(row));
    }
    for (const auto& g : X2.carrier.basis()) {
        Vec row(2 * std::size_t(n), 0);
        std::copy(g.begin(), g.begin() + n2, row.begin() + n1);
        std::copy(g.begin() + n2, g.end(), row.begin() + n + n1);
        gens.push_back(std::move(row));
    }
    AdditiveCode carrier(F, Flavor::Symplectic, n, std::move(gens));
    Provenance prov{"direct-sum", {{"n1", n1}, {"n2", n2}}};
    auto Y = from_symplectic(carrier, mode, std::move(prov));
    require(Y.k_exponent == X1.k_exponent + X2.k_exponent, "Internal", "direct sum changed K");
    unsigned d = std::min(X1.d_claimed, X2.d_claimed);
    bool exact = X1.d_status == DistanceStatus::Exact && X2.d_status == DistanceStatus::Exact;
    detail::claim(Y, d, exact ? DistanceStatus::Exact : DistanceStatus::LowerBound,
                  std::min(X1.pure_to.value_or(d), X2.pure_to.value_or(d)), mode);
    return Y;
}

/// pure Q2 <= Q1 of equal length -> pure [[2n, k1+k2, >= min{2d2, d1}]]:
/// carrier {(u, u+v) : u in D1, v in D2} over F_{q^2}.
inline StabilizerCode nested_combine(const StabilizerCode& Q1, const StabilizerCode& Q2, DistanceMode mode) {
    require(same_field(Q1.F, Q2.F) && Q1.n == Q2.n, "NotNested", "codes must share field and length");
    require(Q1.is_pure() && Q2.is_pure(), "NotPure", "both codes must be verified pure");
    auto D1 = detail::carrier_over_q2(Q1);
    auto D2 = detail::carrier_over_q2(Q2);
    require(D1.subcode_of(D2), "NotNested", "carrier of Q1 must sit inside carrier of Q2");
    const unsigned n = Q1.n;
    std::vector<Vec> gens;
    for (const auto& g : D1.basis()) {
        Vec row(2 * std::size_t(n));
        std::copy(g.begin(), g.end(), row.begin());
        std::copy(g.begin(), g.end(), row.begin() + n);
        gens.push_back(std::move(row));
    }
    for (const auto& g : D2.basis()) {
        Vec row(2 * std::size_t(n), 0);
        std::copy(g.begin(), g.end(), row.begin() + n);
        gens.push_back(std::move(row));
    }
    AdditiveCode D(D1.field(), Flavor::Plain, 2 * n, std::move(gens), D1.beta());
    Provenance prov{"nested-combine", {{"n", n}}};
    auto Y = from_alternating(D, mode, std::move(prov));
    require(Y.k_exponent == Q1.k_exponent + Q2.k_exponent, "Internal", "nested combine changed k1+k2");
    unsigned d = std::min(2 * Q2.d_claimed, Q1.d_claimed);
    detail::claim(Y, d, DistanceStatus::LowerBound, d, mode);
    return Y;
}

/// even q, pure Q2 <= Q1 with k1 > k2 -> pure [[2n, k1-k2, >= min{2d1, d2}]]:
/// carrier {(u, u+v) : u in D2^perp_a, v in D1}.
inline StabilizerCode difference_combine(const StabilizerCode& Q1, const StabilizerCode& Q2, DistanceMode mode) {
    require(Q1.F->p() == 2, "OddCharacteristic", "the difference construction needs even q");
    require(same_field(Q1.F, Q2.F) && Q1.n == Q2.n, "NotNested", "codes must share field and length");
    require(Q1.k_exponent > Q2.k_exponent, "BadParameters", "need k1 > k2");
    require(Q1.is_pure() && Q2.is_pure(), "NotPure", "both codes must be verified pure");
    auto D1 = detail::carrier_over_q2(Q1);
    auto D2 = detail::carrier_over_q2(Q2);
    require(D1.subcode_of(D2), "NotNested", "carrier of Q1 must sit inside carrier of Q2");
    auto D2perp = D2.dual(DualForm::Alternating);
    const unsigned n = Q1.n;
    std::vector<Vec> gens;
    for (const auto& g : D2perp.basis()) {
        Vec row(2 * std::size_t(n));
        std::copy(g.begin(), g.end(), row.begin());
        std::copy(g.begin(), g.end(), row.begin() + n);
        gens.push_back(std::move(row));
    }
    for (const auto& g : D1.basis()) {
        Vec row(2 * std::size_t(n), 0);
        std::copy(g.begin(), g.end(), row.begin() + n);
        gens.push_back(std::move(row));
    }
    AdditiveCode D(D1.field(), Flavor::Plain, 2 * n, std::move(gens), D1.beta());
    Provenance prov{"difference-combine", {{"n", n}}};
    auto Y = from_alternating(D, mode, std::move(prov));
    require(Y.k_exponent == Q1.k_exponent - Q2.k_exponent, "Internal", "difference combine changed k1-k2");
    unsigned d = std::min(2 * Q1.d_claimed, Q2.d_claimed);
    detail::claim(Y, d, DistanceStatus::LowerBound, d, mode);
    return Y;
}

namespace detail {

/// Coordinates of ext elements w.r.t. an F_q-basis of F_Q/F_q, by table.
struct SubfieldBasis {
    FieldPtr Fq, FQ;
    std::vector<Elem> basis;            // elements of FQ
    std::vector<Vec> coords;            // FQ element -> tuple over Fq
    std::vector<std::vector<Elem>> gram;  // tr_{Q/q}(b_i b_j) as Fq elements
};

inline SubfieldBasis make_subfield_basis(const FieldPtr& Fq, const FieldPtr& FQ, std::vector<Elem> basis) {
    const unsigned mm = FQ->m() / Fq->m();
    require(basis.size() == mm, "NotABasis", "basis size must equal the extension degree");
    const auto& emb = embedding(Fq, FQ);
    SubfieldBasis B{Fq, FQ, std::move(basis), std::vector<Vec>(FQ->q()), {}};
    std::vector<bool> seen(FQ->q(), false);
    std::uint64_t total = powu64(Fq->q(), mm);
    for (std::uint64_t t = 0; t < total; ++t) {
        Vec tup(mm);
        std::uint64_t v = t;
        Elem y = 0;
        for (unsigned i = 0; i < mm; ++i) {
            tup[i] = static_cast<Elem>(v % Fq->q());
            v /= Fq->q();
            if (tup[i]) y = FQ->add(y, FQ->mul(emb[tup[i]], B.basis[i]));
        }
        require(!seen[y], "NotABasis", "the given elements are F_q-dependent");
        seen[y] = true;
        B.coords[y] = std::move(tup);
    }
    B.gram.assign(mm, std::vector<Elem>(mm));
    for (unsigned i = 0; i < mm; ++i)
        for (unsigned j = 0; j < mm; ++j)
            B.gram[i][j] = pullback(Fq, FQ, FQ->trace_to(FQ->mul(B.basis[i], B.basis[j]), Fq->m()));
    return B;
}

/// Deterministic basis choice: a self-dual basis by exhaustive subset scan
/// when one can exist (q even, or q and mm both odd) and the scan is small;
/// otherwise the power basis of the canonical generator.
inline SubfieldBasis default_subfield_basis(const FieldPtr& Fq, const FieldPtr& FQ) {
    const unsigned mm = FQ->m() / Fq->m();
    bool want_self_dual = (Fq->p() == 2) || (Fq->q() % 2 == 1 && mm % 2 == 1);
    if (want_self_dual && mm >= 1) {
        // candidates: elements whose self-pairing is 1
        std::vector<Elem> diag;
        for (Elem x = 1; x < FQ->q(); ++x)
            if (pullback(Fq, FQ, FQ->trace_to(FQ->mul(x, x), Fq->m())) == 1) diag.push_back(x);
        double combos = 1;
        for (unsigned i = 0; i < mm; ++i) combos *= double(diag.size() - i) / (i + 1);
        if (!diag.empty() && combos <= 2e5) {
            std::vector<unsigned> idx(mm);
            for (unsigned i = 0; i < mm; ++i) idx[i] = i;
            auto pair_ok = [&](Elem a, Elem b) {
                return pullback(Fq, FQ, FQ->trace_to(FQ->mul(a, b), Fq->m())) == 0;
            };
            for (;;) {
                bool ok = idx.back() < diag.size();
                for (unsigned i = 0; ok && i < mm; ++i)
                    for (unsigned j = i + 1; ok && j < mm; ++j) ok = pair_ok(diag[idx[i]], diag[idx[j]]);
                if (ok) {
                    std::vector<Elem> basis(mm);
                    for (unsigned i = 0; i < mm; ++i) basis[i] = diag[idx[i]];
                    // orthonormal + independence is checked by the table builder
                    try {
                        return make_subfield_basis(Fq, FQ, basis);
                    } catch (const Error&) {
                    }
                }
                // next combination
                int i = static_cast<int>(mm) - 1;
                while (i >= 0 && idx[i] == diag.size() - mm + i) --i;
                if (i < 0) break;
                ++idx[i];
                for (unsigned j = i + 1; j < mm; ++j) idx[j] = idx[j - 1] + 1;
            }
        }
    }
    std::vector<Elem> power(mm);
    Elem xi = FQ->m() == 1 ? 1 : static_cast<Elem>(FQ->p());
    Elem cur = 1;
    for (unsigned i = 0; i < mm; ++i) {
        power[i] = cur;
        cur = FQ->mul(cur, xi);
    }
    return make_subfield_basis(Fq, FQ, power);
}

}  // namespace detail

/// ((n,K,d))_{q^mm} -> ((n*mm, K, >=d))_q: expand each symbol over an
/// F_q-basis B, twisting the b-halves by the Gram matrix of B.
inline StabilizerCode expand_field(const StabilizerCode& X, std::uint32_t target_degree, DistanceMode mode,
                                   std::optional<std::vector<Elem>> basis = std::nullopt) {
    const FieldPtr& FQ = X.F;
    require(target_degree >= 1 && FQ->m() % target_degree == 0, "NotASubfield",
            "target degree must divide the source degree");
    FieldPtr Fq = FieldCtx::get(FQ->p(), target_degree);
    const unsigned mm = FQ->m() / target_degree;
    auto B = basis ? detail::make_subfield_basis(Fq, FQ, *basis) : detail::default_subfield_basis(Fq, FQ);
    const unsigned n = X.n;
    std::vector<Vec> gens;
    for (const auto& g : X.carrier.basis()) {
        Vec row(2 * std::size_t(n) * mm);
        for (unsigned k = 0; k < n; ++k) {
            const Vec& ea = B.coords[g[k]];
            const Vec& eb = B.coords[g[n + k]];
            for (unsigned i = 0; i < mm; ++i) {
                row[k * mm + i] = ea[i];
                Elem acc = 0;
                for (unsigned j = 0; j < mm; ++j) acc = Fq->add(acc, Fq->mul(B.gram[i][j], eb[j]));
                row[std::size_t(n) * mm + k * mm + i] = acc;
            }
        }
        gens.push_back(std::move(row));
    }
    AdditiveCode carrier(Fq, Flavor::Symplectic, n * mm, std::move(gens));
    Provenance prov{"expand-field", {{"base_n", n}, {"target_degree", target_degree}}};
    auto Y = from_symplectic(carrier, mode, std::move(prov));
    require(Y.k_exponent == X.k_exponent, "Internal", "field expansion changed K");
    detail::claim(Y, X.d_claimed, DistanceStatus::LowerBound, X.pure_to, mode);
    return Y;
}

/// Partial converse: ((n*mm, K, d))_q -> ((n, K, >= floor(d/mm)))_{q^mm},
/// by blocking coordinates through the same basis map.
inline StabilizerCode contract_field(const StabilizerCode& X, unsigned block, DistanceMode mode) {
    const FieldPtr& Fq = X.F;
    require(block >= 1 && X.n % block == 0, "BadParameters", "block size must divide the length");
    FieldPtr FQ = FieldCtx::get(Fq->p(), Fq->m() * block);
    auto B = detail::default_subfield_basis(Fq, FQ);
    const auto& emb = embedding(Fq, FQ);
    const unsigned n = X.n / block;
    // invert the Gram twist on b-blocks
    std::vector<Vec> gram_inv_rows(block, Vec(block, 0));
    {
        // invert B.gram over Fq by Gaussian elimination on [M | I]
        std::vector<Vec> aug(block, Vec(2 * block, 0));
        for (unsigned i = 0; i < block; ++i) {
            for (unsigned j = 0; j < block; ++j) aug[i][j] = B.gram[i][j];
            aug[i][block + i] = 1;
        }
        auto piv = rref_field(Fq, aug);
        require(piv.size() == block, "Internal", "Gram matrix not invertible");
        for (unsigned i = 0; i < block; ++i)
            for (unsigned j = 0; j < block; ++j) gram_inv_rows[i][j] = aug[i][block + j];
    }
    std::vector<Vec> gens;
    for (const auto& g : X.carrier.basis()) {
        Vec row(2 * std::size_t(n));
        for (unsigned k = 0; k < n; ++k) {
            Elem a = 0, b = 0;
            Vec eb(block);
            for (unsigned i = 0; i < block; ++i) {
                a = FQ->add(a, FQ->mul(emb[g[k * block + i]], B.basis[i]));
                eb[i] = g[std::size_t(X.n) + k * block + i];
            }
            for (unsigned i = 0; i < block; ++i) {
                Elem c = 0;
                for (unsigned j = 0; j < block; ++j) c = Fq->add(c, Fq->mul(gram_inv_rows[i][j], eb[j]));
                if (c) b = FQ->add(b, FQ->mul(emb[c], B.basis[i]));
            }
            row[k] = a;
            row[n + k] = b;
        }
        gens.push_back(std::move(row));
    }
    AdditiveCode carrier(FQ, Flavor::Symplectic, n, std::move(gens));
    Provenance prov{"contract-field", {{"base_n", X.n}, {"block", block}}};
    auto Y = from_symplectic(carrier, mode, std::move(prov));
    require(Y.k_exponent == X.k_exponent, "Internal", "field contraction changed K");
    if (mode == DistanceMode::Skip) {
        // the block argument only gives a floor; the rule never claims exactness
        unsigned d = X.d_claimed / block;
        Y.d_claimed = std::max(1u, d);
        Y.d_status = d >= 1 ? DistanceStatus::LowerBound : DistanceStatus::Unverified;
    }
    return Y;
}

}  // namespace qecc
