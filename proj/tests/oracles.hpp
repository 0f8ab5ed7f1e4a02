#pragma once

// Independent reference implementations used as test oracles. These stay
// deliberately naive (plain loops, no Gray-code walks, no tables beyond the
// field ops themselves) so they exercise a different computation path than
// the library.

#include <map>
#include <random>
#include <vector>

#include "qecc/additive_code.hpp"
#include "qecc/gf.hpp"

namespace oracle {

using namespace qecc;

inline Elem naive_pow(const FieldCtx& F, Elem a, std::uint64_t e) {
    Elem r = 1;
    for (std::uint64_t i = 0; i < e; ++i) r = F.mul(r, a);
    return r;
}

/// tr_{p^M/p^e}(x) by the definition, with naive powering.
inline Elem naive_trace(const FieldCtx& F, Elem x, std::uint32_t e) {
    std::uint64_t qe = 1;
    for (std::uint32_t i = 0; i < e; ++i) qe *= F.p();
    Elem acc = 0;
    Elem term = x;
    for (std::uint32_t k = 0; k < F.m() / e; ++k) {
        acc = F.add(acc, term);
        term = naive_pow(F, term, qe);
    }
    return acc;
}

/// All words of the F_p-span of the given rows, by direct digit expansion.
inline std::vector<Vec> naive_span(const FieldCtx& F, const std::vector<Vec>& rows, std::size_t len) {
    std::vector<Vec> words;
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < rows.size(); ++i) total *= F.p();
    for (std::uint64_t t = 0; t < total; ++t) {
        Vec w(len, 0);
        std::uint64_t v = t;
        for (const auto& r : rows) {
            std::uint32_t digit = static_cast<std::uint32_t>(v % F.p());
            v /= F.p();
            if (digit)
                for (std::size_t i = 0; i < len; ++i) w[i] = F.add(w[i], F.mul(r[i], digit));
        }
        words.push_back(std::move(w));
    }
    std::sort(words.begin(), words.end());
    words.erase(std::unique(words.begin(), words.end()), words.end());
    return words;
}

inline std::vector<std::uint64_t> naive_enumerator(const AdditiveCode& C) {
    std::vector<std::uint64_t> hist(C.n() + 1, 0);
    for (const auto& w : naive_span(*C.field(), C.basis(), C.vec_len()))
        ++hist[C.flavor() == Flavor::Symplectic ? swt(w) : hamming_wt(w)];
    return hist;
}

inline Vec random_vec(std::mt19937& rng, const FieldCtx& F, std::size_t len) {
    std::uniform_int_distribution<std::uint32_t> dist(0, F.q() - 1);
    Vec v(len);
    for (auto& x : v) x = dist(rng);
    return v;
}

inline AdditiveCode random_additive(std::mt19937& rng, const FieldPtr& F, Flavor flavor, unsigned n,
                                    unsigned gen_count) {
    std::vector<Vec> gens;
    std::size_t len = flavor == Flavor::Symplectic ? 2 * std::size_t(n) : n;
    for (unsigned i = 0; i < gen_count; ++i) gens.push_back(random_vec(rng, *F, len));
    return AdditiveCode(F, flavor, n, std::move(gens));
}

}  // namespace oracle
