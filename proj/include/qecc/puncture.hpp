#pragma once

#include <array>
#include <optional>

#include "qecc/families.hpp"

namespace qecc {

/// The puncture code of a base code: the trace-euclidean dual of the span
/// of coordinate-wise cross products (P_s) or plain products (pc_e). For
/// F_q-linear spans the trace-euclidean and euclidean duals coincide, and
/// the linear view is kept alongside the additive one.
struct PunctureCode {
    enum class Kind { Symplectic, Euclidean };
    Kind kind;
    AdditiveCode code;                                   // Plain flavor over F_q^n
    std::optional<LinearCode> linear;                    // set on the euclidean route
    std::optional<std::array<std::uint64_t, 3>> bch_tag;  // (q, m, delta) enables the GRM fallback
};

/// P_s(C) = {(b_k a'_k - b'_k a_k)_k : (a|b), (a'|b') in C}^perp.
/// The cross product is bi-additive, so basis pairs span the product set.
inline PunctureCode puncture_code_symplectic(const AdditiveCode& C) {
    require(C.flavor() == Flavor::Symplectic, "MixedAmbient", "P_s needs a symplectic base code");
    const FieldPtr& F = C.field();
    const unsigned n = C.n();
    std::vector<Vec> products;
    const auto& rows = C.basis();
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = i + 1; j < rows.size(); ++j) {
            Vec w(n);
            for (unsigned k = 0; k < n; ++k)
                w[k] = F->sub(F->mul(rows[i][n + k], rows[j][k]), F->mul(rows[j][n + k], rows[i][k]));
            products.push_back(std::move(w));
        }
    AdditiveCode span(F, Flavor::Plain, n, std::move(products));
    return {PunctureCode::Kind::Symplectic, span.dual(DualForm::TraceEuclidean), std::nullopt, std::nullopt};
}

/// pc_e(C) = pc_s(C x C) = {ab : a, b in C}^perp for a classical code.
inline PunctureCode puncture_code_euclidean(const LinearCode& B) {
    const FieldPtr& F = B.field();
    const unsigned n = B.n();
    std::vector<Vec> products;
    const auto& rows = B.basis();
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = i; j < rows.size(); ++j) {
            Vec w(n);
            for (unsigned k = 0; k < n; ++k) w[k] = F->mul(rows[i][k], rows[j][k]);
            products.push_back(std::move(w));
        }
    LinearCode span(F, n, std::move(products));
    LinearCode dual = span.dual();
    return {PunctureCode::Kind::Euclidean, dual.to_additive(), dual, std::nullopt};
}

/// pc_e(B^perp) for the narrow-sense primitive BCH code of design distance
/// delta, tagged so the GRM word construction can serve as a search fallback.
inline PunctureCode bch_puncture_code(std::uint64_t q, unsigned m, std::uint64_t delta) {
    auto [p, e] = prime_power(q);
    const std::uint64_t n = powu64(q, m) - 1;
    auto B = to_linear_code(build_cyclic(n, FieldCtx::get(p, e), union_of_cosets(n, q, 1, delta - 1)));
    auto P = puncture_code_euclidean(B.dual());
    P.bch_tag = std::array<std::uint64_t, 3>{q, m, delta};
    return P;
}

/// A minimum-weight word of R*_q(mu, m): the evaluation of a product of
/// linear-form factors, validated by direct weight count against d*(mu).
/// Uses the same cyclic evaluation-point order as grm_code.
inline Vec grm_min_weight_word(std::uint64_t q, unsigned mu, unsigned m) {
    auto [p, e] = prime_power(q);
    auto [kstar, dstar] = grm_params(q, mu, m);
    (void)kstar;
    FieldPtr F = FieldCtx::get(p, e);
    const std::uint64_t rem = m * (q - 1) - mu;
    const std::uint64_t sigma = rem / (q - 1), rho = rem % (q - 1);
    const unsigned a = static_cast<unsigned>(rho > 0 ? m - sigma - 1 : m - sigma);
    const unsigned b = static_cast<unsigned>(rho > 0 ? q - 1 - rho : 0);

    auto ru = nth_root_of_unity(F, powu64(q, m) - 1);
    const FieldPtr& E = ru.ext;
    const auto& emb = embedding(F, E);
    Elem xi = E->m() == 1 ? 1 : static_cast<Elem>(E->p());
    // coordinates over F_q w.r.t. the power basis, as in grm_code
    std::vector<Vec> tuple_of(E->q());
    {
        std::uint64_t total = powu64(q, m);
        for (std::uint64_t t = 0; t < total; ++t) {
            Vec tup(m);
            std::uint64_t v = t;
            Elem y = 0, power = 1;
            for (unsigned i = 0; i < m; ++i) {
                tup[i] = static_cast<Elem>(v % q);
                v /= q;
                if (tup[i]) y = E->add(y, E->mul(emb[tup[i]], power));
                power = E->mul(power, xi);
            }
            tuple_of[y] = std::move(tup);
        }
    }
    const std::uint64_t npts = powu64(q, m) - 1;
    Vec word(npts);
    Elem cur = 1;
    for (std::uint64_t i = 0; i < npts; ++i) {
        const Vec& x = tuple_of[cur];
        Elem val = 1;
        for (unsigned v = 0; v < a && val; ++v) val = F->mul(val, F->sub(1, F->pow(x[v], q - 1)));
        for (unsigned j = 1; j <= b && val; ++j) val = F->mul(val, F->sub(x[a], static_cast<Elem>(j)));
        word[i] = val;
        cur = E->mul(cur, ru.beta);
    }
    require(hamming_wt(word) == dstar, "Internal", "constructed GRM word has the wrong weight");
    return word;
}

/// Weight-r word of the puncture code: exhaustive (lexicographically
/// smallest) within the 2^24 guard, else via the certified GRM subcode for
/// tagged BCH puncture codes.
inline std::optional<Vec> find_weight_word(const PunctureCode& P, unsigned r) {
    if (detail::combos_within_guard(P.code.field()->p(), P.code.rank())) return find_word_of_weight(P.code, r);
    if (P.bch_tag) {
        auto [q, m64, delta] = *P.bch_tag;
        unsigned m = static_cast<unsigned>(m64);
        std::uint64_t Q = 0;
        while (powu64(q, static_cast<unsigned>(Q + 1)) <= delta + 1) ++Q;
        std::uint64_t R = (delta + 1 + powu64(q, static_cast<unsigned>(Q)) - 1) / powu64(q, static_cast<unsigned>(Q)) - 1;
        long long mu_max = (long long)m * (long long)(q - 1) - 2 * ((long long)R + (long long)(q - 1) * (long long)Q) + 1;
        for (long long mu = 0; mu <= mu_max; ++mu) {
            auto [ks, ds] = grm_params(q, static_cast<unsigned>(mu), m);
            (void)ks;
            if (ds != r) continue;
            Vec w = grm_min_weight_word(q, static_cast<unsigned>(mu), m);
            require(P.code.contains(w), "Internal", "certified GRM word fell outside the puncture code");
            return w;
        }
        return std::nullopt;
    }
    fail("SearchSpaceTooLarge", "puncture code too large to enumerate and no certified subcode available");
}

/// C_x = {(a|bx)} restricted to supp(x) is
/// self-orthogonal of length r = wt(x), K* >= K/q^{n-r}, d* >= d.
inline StabilizerCode puncture_to(const AdditiveCode& C, const Vec& x, DistanceMode mode, unsigned base_d_bound = 1) {
    require(C.flavor() == Flavor::Symplectic, "MixedAmbient", "puncturing acts on symplectic carriers");
    require(x.size() == C.n(), "MixedAmbient", "word length must match the base length");
    const unsigned r = hamming_wt(x);
    require(r >= 1, "ZeroWeightWord", "cannot puncture on the zero word");
    auto P = puncture_code_symplectic(C);
    require(P.code.contains(x), "NotInPunctureCode", "word is not in the puncture code of the base");
    const FieldPtr& F = C.field();
    const unsigned n = C.n();
    std::vector<unsigned> support;
    for (unsigned k = 0; k < n; ++k)
        if (x[k]) support.push_back(k);
    std::vector<Vec> gens;
    for (const auto& g : C.basis()) {
        Vec row(2 * std::size_t(r));
        for (unsigned i = 0; i < r; ++i) {
            unsigned k = support[i];
            row[i] = g[k];
            row[r + i] = F->mul(g[n + k], x[k]);
        }
        gens.push_back(std::move(row));
    }
    AdditiveCode restricted(F, Flavor::Symplectic, r, std::move(gens));
    Provenance prov{"punctured", {{"base_n", n}, {"r", r}}};
    auto X = from_symplectic(restricted, mode, std::move(prov));
    if (mode == DistanceMode::Exact) {
        // the transported bound d* >= d applies only when K* > 1
    } else if (X.k_exponent > 0) {
        X.d_claimed = base_d_bound;
        X.d_status = DistanceStatus::LowerBound;
    }
    return X;
}

struct BchPunctureEntry {
    unsigned mu;
    std::uint64_t length;      // d*(mu)
    long long k_guarantee;     // d*(mu) - 2m ceil((delta-1)(1-1/q)); may be negative
    std::uint64_t delta;
};

/// The certified lengths a [[q^m-1, ..., >=delta]]_q BCH
/// code can be punctured to, each giving
/// [[d*(mu), >= d*(mu)-2m ceil((delta-1)(1-1/q)), >= delta]]_q.
inline std::vector<BchPunctureEntry> bch_puncture_menu(std::uint64_t q, unsigned m, std::uint64_t delta) {
    require(delta >= 2, "DeltaOutOfRange", "menu needs delta >= 2");
    std::uint64_t Q = 0;
    while (powu64(q, static_cast<unsigned>(Q + 1)) <= delta + 1) ++Q;
    std::uint64_t R = (delta + 1 + powu64(q, static_cast<unsigned>(Q)) - 1) / powu64(q, static_cast<unsigned>(Q)) - 1;
    long long mu_max = (long long)m * (long long)(q - 1) - 2 * ((long long)R + (long long)(q - 1) * (long long)Q) + 1;
    // the construction applies exactly when the certified-mu range is nonempty
    require(mu_max >= 0, "DeltaOutOfRange", "design distance too large: no certified GRM subcode");
    const long long kdrop = 2LL * m * detail::bch_coset_weight(delta, q);
    std::vector<BchPunctureEntry> menu;
    for (long long mu = 0; mu <= mu_max; ++mu) {
        auto [ks, ds] = grm_params(q, static_cast<unsigned>(mu), m);
        (void)ks;
        menu.push_back({static_cast<unsigned>(mu), ds, (long long)ds - kdrop, delta});
    }
    return menu;
}

}  // namespace qecc
