#pragma once

#include <functional>
#include <optional>
#include <thread>
#include <vector>

#include "qecc/bigint.hpp"
#include "qecc/linalg.hpp"

namespace qecc {

/// Ambient of an additive code. Symplectic vectors (a|b) live in F_q^{2n}
/// and carry the symplectic weight; Plain vectors live in F_Q^n and carry
/// the Hamming weight ("qsquare" on the wire — the F_{q^2} side of phi).
enum class Flavor { Symplectic, Plain };

enum class DualForm { Symplectic, Alternating, TraceEuclidean, Euclidean, Hermitian };

/// swt((a|b)) = number of positions k with (a_k, b_k) != (0, 0).
/// The vector is stored as the length-2n concatenation a | b.
inline unsigned swt(const Vec& ab) {
    const std::size_t n = ab.size() / 2;
    unsigned w = 0;
    for (std::size_t k = 0; k < n; ++k) w += (ab[k] || ab[n + k]) ? 1 : 0;
    return w;
}

inline unsigned hamming_wt(const Vec& v) {
    unsigned w = 0;
    for (Elem x : v) w += x ? 1 : 0;
    return w;
}

/// tr_{q/p}(b . a' - b' . a) for u = (a|b), v = (a'|b').
inline std::uint32_t form_symplectic(const FieldCtx& F, const Vec& u, const Vec& v) {
    const std::size_t n = u.size() / 2;
    Elem acc = 0;
    for (std::size_t k = 0; k < n; ++k) {
        acc = F.add(acc, F.mul(u[n + k], v[k]));
        acc = F.sub(acc, F.mul(v[n + k], u[k]));
    }
    return F.trace_prime(acc);
}

/// tr_{q/p}(u . v) on a single alphabet; the dual w.r.t. this form is the
/// euclidean dual whenever the code is F_q-linear.
inline std::uint32_t form_trace_euclidean(const FieldCtx& F, const Vec& u, const Vec& v) {
    Elem acc = 0;
    for (std::size_t k = 0; k < u.size(); ++k) acc = F.add(acc, F.mul(u[k], v[k]));
    return F.trace_prime(acc);
}

/// tr_{q/p}((u.v^q - u^q.v) / (beta^{2q} - beta^2)) over F_{q^2}; beta from
/// normal_pair. The trace argument is Galois-invariant, so it is pulled back
/// to F_q before tracing down to F_p.
inline std::uint32_t form_alternating(const FieldPtr& Fq2, Elem beta, const Vec& u, const Vec& v) {
    const std::uint32_t e = Fq2->m() / 2;
    std::uint64_t q = 1;
    for (std::uint32_t i = 0; i < e; ++i) q *= Fq2->p();
    Elem num = 0;
    for (std::size_t k = 0; k < u.size(); ++k) {
        num = Fq2->add(num, Fq2->mul(u[k], Fq2->pow(v[k], q)));
        num = Fq2->sub(num, Fq2->mul(Fq2->pow(u[k], q), v[k]));
    }
    Elem den = Fq2->sub(Fq2->pow(beta, 2 * q), Fq2->mul(beta, beta));
    Elem arg = Fq2->div(num, den);
    FieldPtr Fq = FieldCtx::get(Fq2->p(), e);
    return Fq->trace_prime(pullback(Fq, Fq2, arg));
}

inline FieldPtr quadratic_ext(const FieldPtr& F) { return FieldCtx::get(F->p(), 2 * F->m()); }

/// phi((a|b)) = beta*a + beta^q*b, symbolwise into F_{q^2}^n.
inline Vec phi_vec(const FieldPtr& Fq, const FieldPtr& Fq2, Elem beta, const Vec& ab) {
    const auto& emb = embedding(Fq, Fq2);
    const std::size_t n = ab.size() / 2;
    Elem betaq = Fq2->pow(beta, Fq->q());
    Vec out(n);
    for (std::size_t k = 0; k < n; ++k)
        out[k] = Fq2->add(Fq2->mul(beta, emb[ab[k]]), Fq2->mul(betaq, emb[ab[n + k]]));
    return out;
}

inline Vec phi_inv_vec(const FieldPtr& Fq, const FieldPtr& Fq2, Elem beta, const Vec& v) {
    const auto& emb = embedding(Fq, Fq2);
    Elem betaq = Fq2->pow(beta, Fq->q());
    std::vector<std::pair<Elem, Elem>> inv(Fq2->q(), {0, 0});
    std::vector<bool> seen(Fq2->q(), false);
    for (Elem a = 0; a < Fq->q(); ++a)
        for (Elem b = 0; b < Fq->q(); ++b) {
            Elem y = Fq2->add(Fq2->mul(beta, emb[a]), Fq2->mul(betaq, emb[b]));
            inv[y] = {a, b};
            seen[y] = true;
        }
    const std::size_t n = v.size();
    Vec out(2 * n);
    for (std::size_t k = 0; k < n; ++k) {
        require(seen[v[k]], "Internal", "phi_inv: value outside image");
        out[k] = inv[v[k]].first;
        out[n + k] = inv[v[k]].second;
    }
    return out;
}

/// An F_p-linear subspace of F_q^{2n} (Symplectic) or F_Q^n (Plain), stored
/// with its reduced F_p-coordinate basis. Immutable value type.
class AdditiveCode {
   public:
    AdditiveCode(FieldPtr F, Flavor flavor, unsigned n, std::vector<Vec> gens, std::optional<Elem> beta = std::nullopt)
        : F_(std::move(F)), flavor_(flavor), n_(n), beta_(beta), gens_(std::move(gens)) {
        const std::size_t len = vec_len();
        for (const auto& g : gens_)
            require(g.size() == len, "MixedAmbient", "generator length does not match the ambient");
        std::vector<std::vector<std::uint32_t>> rows;
        rows.reserve(gens_.size());
        for (const auto& g : gens_) rows.push_back(to_pcoords(g));
        pivots_ = rref_fp(rows, F_->p());
        pbasis_ = std::move(rows);
        basis_rows_.reserve(pbasis_.size());
        for (const auto& r : pbasis_) basis_rows_.push_back(from_pcoords(r));
    }

    const FieldPtr& field() const noexcept { return F_; }
    Flavor flavor() const noexcept { return flavor_; }
    unsigned n() const noexcept { return n_; }
    std::optional<Elem> beta() const noexcept { return beta_; }
    const std::vector<Vec>& generators() const noexcept { return gens_; }
    /// Independent generators (symbol form of the reduced F_p basis).
    const std::vector<Vec>& basis() const noexcept { return basis_rows_; }

    std::size_t vec_len() const noexcept { return flavor_ == Flavor::Symplectic ? 2 * std::size_t(n_) : n_; }
    std::size_t ambient_pdim() const noexcept { return vec_len() * F_->m(); }
    unsigned rank() const noexcept { return static_cast<unsigned>(pbasis_.size()); }
    /// log_p |C|
    unsigned size_log_p() const noexcept { return rank(); }
    BigInt size() const { return ipow(BigInt(F_->p()), rank()); }

    std::vector<std::uint32_t> to_pcoords(const Vec& v) const {
        const std::uint32_t m = F_->m();
        std::vector<std::uint32_t> out(v.size() * m);
        for (std::size_t s = 0; s < v.size(); ++s)
            for (std::uint32_t t = 0; t < m; ++t) out[s * m + t] = F_->coeff(v[s], t);
        return out;
    }
    Vec from_pcoords(const std::vector<std::uint32_t>& c) const {
        const std::uint32_t m = F_->m();
        Vec v(c.size() / m, 0);
        for (std::size_t s = 0; s < v.size(); ++s) {
            Elem idx = 0;
            for (std::uint32_t t = m; t-- > 0;) idx = static_cast<Elem>(idx * F_->p() + c[s * m + t]);
            v[s] = idx;
        }
        return v;
    }

    bool contains(const Vec& v) const {
        require(v.size() == vec_len(), "MixedAmbient", "vector length does not match the ambient");
        return is_zero_vec(reduce_against_fp(to_pcoords(v), pbasis_, pivots_, F_->p()));
    }
    bool subcode_of(const AdditiveCode& other) const {
        if (!same_field(F_, other.F_) || flavor_ != other.flavor_ || n_ != other.n_) return false;
        for (const auto& r : basis_rows_)
            if (!other.contains(r)) return false;
        return true;
    }
    bool same_code_as(const AdditiveCode& other) const {
        return rank() == other.rank() && subcode_of(other);
    }

    unsigned weight_of(const Vec& v) const { return flavor_ == Flavor::Symplectic ? swt(v) : hamming_wt(v); }

    /// True when multiplying every basis row by the field generator stays
    /// inside the code, i.e. the F_p-space is actually F_q-linear.
    bool is_field_linear() const {
        if (F_->m() == 1) return true;
        Elem g = F_->primitive_element();
        for (const auto& r : basis_rows_) {
            Vec s(r.size());
            for (std::size_t i = 0; i < r.size(); ++i) s[i] = F_->mul(r[i], g);
            if (!contains(s)) return false;
        }
        return true;
    }

    AdditiveCode dual(DualForm form) const;

   private:
    FieldPtr F_;
    Flavor flavor_;
    unsigned n_;
    std::optional<Elem> beta_;
    std::vector<Vec> gens_;
    std::vector<std::vector<std::uint32_t>> pbasis_;
    std::vector<std::size_t> pivots_;
    std::vector<Vec> basis_rows_;
};

namespace detail {

inline bool combos_within_guard(std::uint32_t p, unsigned k, std::uint64_t limit = FieldCtx::kMaxElements) {
    std::uint64_t total = 1;
    for (unsigned i = 0; i < k; ++i) {
        total *= p;
        if (total > limit) return false;
    }
    return true;
}

inline std::uint64_t combos(std::uint32_t p, unsigned k) {
    std::uint64_t total = 1;
    for (unsigned i = 0; i < k; ++i) total *= p;
    return total;
}

inline Vec scaled_row(const FieldCtx& F, const Vec& row, std::uint32_t scalar) {
    Vec out(row.size());
    for (std::size_t i = 0; i < row.size(); ++i) out[i] = F.mul(row[i], scalar);
    return out;
}

inline void add_row_inplace(const FieldCtx& F, Vec& word, const Vec& row) {
    for (std::size_t i = 0; i < row.size(); ++i)
        if (row[i]) word[i] = F.add(word[i], row[i]);
}

/// Positions whose weight contribution can change when `row` is added.
inline std::vector<unsigned> touched_positions(Flavor flavor, unsigned n, const Vec& row) {
    std::vector<unsigned> pos;
    if (flavor == Flavor::Symplectic) {
        for (unsigned k = 0; k < n; ++k)
            if (row[k] || row[n + k]) pos.push_back(k);
    } else {
        for (unsigned k = 0; k < n; ++k)
            if (row[k]) pos.push_back(k);
    }
    return pos;
}

/// Walk offset + span(rows) with a p-ary modular Gray code: step t adds
/// rows[j] where j is the p-adic valuation of t, so every step is one row
/// addition and an O(|supp row|) weight update. visit(word, wt) fires for
/// every word, the offset itself first.
template <class Visit>
void gray_walk(const FieldCtx& F, Flavor flavor, unsigned n, const std::vector<Vec>& rows, Vec word, Visit&& visit) {
    const std::uint32_t p = F.p();
    std::vector<std::vector<unsigned>> touched;
    touched.reserve(rows.size());
    for (const auto& r : rows) touched.push_back(touched_positions(flavor, n, r));
    unsigned wt = flavor == Flavor::Symplectic ? swt(word) : hamming_wt(word);
    visit(word, wt);
    const std::uint64_t total = combos(p, static_cast<unsigned>(rows.size()));
    for (std::uint64_t t = 1; t < total; ++t) {
        std::uint64_t v = t;
        unsigned j = 0;
        while (v % p == 0) {
            v /= p;
            ++j;
        }
        const Vec& row = rows[j];
        if (flavor == Flavor::Symplectic) {
            for (unsigned k : touched[j]) {
                unsigned was = (word[k] || word[n + k]) ? 1 : 0;
                if (row[k]) word[k] = F.add(word[k], row[k]);
                if (row[n + k]) word[n + k] = F.add(word[n + k], row[n + k]);
                wt += ((word[k] || word[n + k]) ? 1u : 0u) - was;
            }
        } else {
            for (unsigned k : touched[j]) {
                unsigned was = word[k] ? 1 : 0;
                word[k] = F.add(word[k], row[k]);
                wt += (word[k] ? 1u : 0u) - was;
            }
        }
        visit(word, wt);
    }
}

/// Parallel enumeration of offset + span(rows): strata over the trailing
/// rows are distributed across workers, each running gray_walk on the rest.
/// make_visitor(worker) returns a visitor; reduce(visitors) afterwards.
template <class Visitor>
void stratified_walk(const FieldCtx& F, Flavor flavor, unsigned n, const std::vector<Vec>& rows, const Vec& offset,
                     std::vector<Visitor>& visitors) {
    const unsigned workers = static_cast<unsigned>(visitors.size());
    const std::uint32_t p = F.p();
    if (workers <= 1 || rows.size() <= 1) {
        gray_walk(F, flavor, n, rows, offset, [&](const Vec& w, unsigned wt) { visitors[0](w, wt); });
        return;
    }
    unsigned split = 0;
    std::uint64_t strata = 1;
    while (split < rows.size() && strata < std::uint64_t(4) * workers) {
        strata *= p;
        ++split;
    }
    std::vector<Vec> inner(rows.begin(), rows.end() - split);
    std::vector<Vec> outer(rows.end() - split, rows.end());
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
            for (std::uint64_t s = w; s < strata; s += workers) {
                Vec word = offset;
                std::uint64_t v = s;
                for (const auto& row : outer) {
                    std::uint32_t digit = static_cast<std::uint32_t>(v % p);
                    v /= p;
                    if (digit) add_row_inplace(F, word, scaled_row(F, row, digit));
                }
                gray_walk(F, flavor, n, inner, std::move(word), [&](const Vec& ww, unsigned wt) { visitors[w](ww, wt); });
            }
        });
    }
    for (auto& t : pool) t.join();
}

}  // namespace detail

/// Coefficient list A_0..A_n of a weight enumerator.
struct WeightEnumerator {
    std::vector<BigInt> coeffs;

    BigInt total() const {
        BigInt s = 0;
        for (const auto& c : coeffs) s += c;
        return s;
    }
    bool operator==(const WeightEnumerator& o) const { return coeffs == o.coeffs; }
};

/// Exhaustive symplectic/Hamming weight histogram of C. |C| <= 2^24 guard.
inline WeightEnumerator weight_enumerator(const AdditiveCode& C) {
    require(detail::combos_within_guard(C.field()->p(), C.rank()), "CodeTooLarge", "exhaustive enumeration guard");
    const unsigned nw = std::max(1u, worker_count());
    struct Hist {
        std::vector<std::uint64_t> h;
        void operator()(const Vec&, unsigned wt) { ++h[wt]; }
    };
    std::vector<Hist> vs(nw, Hist{std::vector<std::uint64_t>(C.n() + 1, 0)});
    Vec zero(C.vec_len(), 0);
    detail::stratified_walk(*C.field(), C.flavor(), C.n(), C.basis(), zero, vs);
    WeightEnumerator A;
    A.coeffs.assign(C.n() + 1, 0);
    for (const auto& v : vs)
        for (unsigned i = 0; i <= C.n(); ++i) A.coeffs[i] += v.h[i];
    return A;
}

/// Minimum weight over C \ {0}; nullopt when C = {0}.
inline std::optional<unsigned> min_weight_nonzero(const AdditiveCode& C) {
    if (C.rank() == 0) return std::nullopt;
    require(detail::combos_within_guard(C.field()->p(), C.rank()), "CodeTooLarge", "exhaustive enumeration guard");
    const unsigned nw = std::max(1u, worker_count());
    struct MinV {
        unsigned best = ~0u;
        void operator()(const Vec&, unsigned wt) {
            if (wt != 0 && wt < best) best = wt;
        }
    };
    std::vector<MinV> vs(nw);
    Vec zero(C.vec_len(), 0);
    detail::stratified_walk(*C.field(), C.flavor(), C.n(), C.basis(), zero, vs);
    unsigned best = ~0u;
    for (const auto& v : vs) best = std::min(best, v.best);
    return best;  // rank >= 1 guarantees some nonzero word
}

/// Minimum weight over A \ B for B a subcode of A; nullopt when A = B
/// (the infinity sentinel is the absent value, never a large integer).
inline std::optional<unsigned> min_weight_difference(const AdditiveCode& A, const AdditiveCode& B) {
    require(B.subcode_of(A), "NotASubcode", "B must be a subcode of A");
    require(detail::combos_within_guard(A.field()->p(), A.rank()), "CodeTooLarge", "exhaustive enumeration guard");
    if (A.rank() == B.rank()) return std::nullopt;
    const FieldCtx& F = *A.field();
    const std::uint32_t p = F.p();

    // Transversal of B inside A: basis rows of A that stay independent
    // after reduction against B's basis.
    std::vector<std::vector<std::uint32_t>> combined;
    for (const auto& r : B.basis()) combined.push_back(A.to_pcoords(r));
    auto pivots = rref_fp(combined, p);
    std::vector<Vec> transversal;
    for (const auto& r : A.basis()) {
        auto res = reduce_against_fp(A.to_pcoords(r), combined, pivots, p);
        if (!is_zero_vec(res)) {
            transversal.push_back(A.from_pcoords(res));
            combined.push_back(std::move(res));
            pivots = rref_fp(combined, p);
        }
    }

    if (B.rank() == 0) {
        // A \ {0}: one full walk, skipping the zero word.
        return min_weight_nonzero(A);
    }

    const std::uint64_t cosets = detail::combos(p, static_cast<unsigned>(transversal.size()));
    const unsigned nw = std::max(1u, worker_count());
    std::vector<unsigned> bests(nw, ~0u);
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < nw; ++w) {
        pool.emplace_back([&, w] {
            unsigned best = ~0u;
            for (std::uint64_t t = 1 + w; t < cosets; t += nw) {
                Vec offset(A.vec_len(), 0);
                std::uint64_t v = t;
                for (const auto& row : transversal) {
                    std::uint32_t digit = static_cast<std::uint32_t>(v % p);
                    v /= p;
                    if (digit) detail::add_row_inplace(F, offset, detail::scaled_row(F, row, digit));
                }
                detail::gray_walk(F, A.flavor(), A.n(), B.basis(), std::move(offset),
                                  [&](const Vec&, unsigned wt) {
                                      if (wt < best) best = wt;
                                  });
            }
            bests[w] = best;
        });
    }
    for (auto& t : pool) t.join();
    unsigned best = ~0u;
    for (unsigned b : bests) best = std::min(best, b);
    return best;
}

/// Lexicographically smallest word of C with weight exactly r, if any.
inline std::optional<Vec> find_word_of_weight(const AdditiveCode& C, unsigned r) {
    require(detail::combos_within_guard(C.field()->p(), C.rank()), "SearchSpaceTooLarge",
            "exhaustive weight-word search guard");
    struct Best {
        unsigned r;
        std::optional<Vec> word;
        void operator()(const Vec& w, unsigned wt) {
            if (wt == r && (!word || w < *word)) word = w;
        }
    };
    const unsigned nw = std::max(1u, worker_count());
    std::vector<Best> vs(nw, Best{r, std::nullopt});
    Vec zero(C.vec_len(), 0);
    detail::stratified_walk(*C.field(), C.flavor(), C.n(), C.basis(), zero, vs);
    std::optional<Vec> best;
    for (auto& v : vs)
        if (v.word && (!best || *v.word < *best)) best = std::move(v.word);
    return best;
}

inline AdditiveCode AdditiveCode::dual(DualForm form) const {
    const std::uint32_t p = F_->p();
    const std::uint32_t m = F_->m();
    const std::size_t D = ambient_pdim();

    if (form == DualForm::Euclidean || form == DualForm::Hermitian) {
        require(flavor_ == Flavor::Plain, "MixedAmbient", "euclidean/hermitian duals act on single-alphabet codes");
        require(is_field_linear(), "NotLinear", "code is not linear over its alphabet");
        if (form == DualForm::Hermitian) require(m % 2 == 0, "NotASubfield", "hermitian form needs a quadratic extension");
        std::vector<Vec> rows = basis_rows_;
        rref_field(F_, rows);
        if (form == DualForm::Hermitian) {
            std::uint64_t qe = 1;
            for (std::uint32_t i = 0; i < m / 2; ++i) qe *= p;
            for (auto& r : rows)
                for (auto& x : r) x = F_->pow(x, qe);
        }
        auto null_rows = nullspace_field(F_, std::move(rows), vec_len());
        std::vector<Vec> gens;
        for (const auto& g : null_rows)
            for (std::uint32_t t = 0; t < m; ++t) {
                Elem mono = 1;
                for (std::uint32_t i = 0; i < t; ++i) mono = static_cast<Elem>(mono * p);
                gens.push_back(detail::scaled_row(*F_, g, mono));
            }
        return AdditiveCode(F_, flavor_, n_, std::move(gens), beta_);
    }

    // Trace-form duals: one F_p-linear functional per basis row, stacked
    // into a matrix whose nullspace is the dual.
    std::function<std::uint32_t(const Vec&, std::size_t)> against_unit;
    if (form == DualForm::Symplectic) {
        require(flavor_ == Flavor::Symplectic, "MixedAmbient", "symplectic dual needs a symplectic ambient");
        against_unit = [&](const Vec& r, std::size_t j) {
            std::size_t sym = j / m;
            std::uint32_t t = static_cast<std::uint32_t>(j % m);
            Elem e = 1;
            for (std::uint32_t i = 0; i < t; ++i) e = static_cast<Elem>(e * p);
            if (sym < n_) return F_->trace_prime(F_->mul(r[n_ + sym], e));           // unit in the a-half
            return F_->trace_prime(F_->neg(F_->mul(r[sym - n_], e)));                // unit in the b-half
        };
    } else if (form == DualForm::Alternating) {
        require(flavor_ == Flavor::Plain && beta_, "MixedAmbient", "alternating dual needs a q^2 ambient with beta");
        std::uint32_t e_deg = m / 2;
        require(m % 2 == 0, "NotASubfield", "alternating form needs a quadratic extension");
        std::uint64_t q = 1;
        for (std::uint32_t i = 0; i < e_deg; ++i) q *= p;
        FieldPtr Fq = FieldCtx::get(p, e_deg);
        Elem den = F_->sub(F_->pow(*beta_, 2 * q), F_->mul(*beta_, *beta_));
        Elem den_inv = F_->inv(den);
        against_unit = [this, q, Fq, den_inv, m, p](const Vec& r, std::size_t j) {
            std::size_t sym = j / m;
            std::uint32_t t = static_cast<std::uint32_t>(j % m);
            Elem e = 1;
            for (std::uint32_t i = 0; i < t; ++i) e = static_cast<Elem>(e * p);
            Elem num = F_->sub(F_->mul(r[sym], F_->pow(e, q)), F_->mul(F_->pow(r[sym], q), e));
            Elem arg = F_->mul(num, den_inv);
            return Fq->trace_prime(pullback(Fq, F_, arg));
        };
    } else {  // TraceEuclidean
        require(flavor_ == Flavor::Plain, "MixedAmbient", "trace-euclidean dual acts on single-alphabet codes");
        against_unit = [&](const Vec& r, std::size_t j) {
            std::size_t sym = j / m;
            std::uint32_t t = static_cast<std::uint32_t>(j % m);
            Elem e = 1;
            for (std::uint32_t i = 0; i < t; ++i) e = static_cast<Elem>(e * p);
            return F_->trace_prime(F_->mul(r[sym], e));
        };
    }

    std::vector<std::vector<std::uint32_t>> gram(basis_rows_.size(), std::vector<std::uint32_t>(D));
    for (std::size_t i = 0; i < basis_rows_.size(); ++i)
        for (std::size_t j = 0; j < D; ++j) gram[i][j] = against_unit(basis_rows_[i], j);
    auto null_rows = nullspace_fp(std::move(gram), D, p);
    std::vector<Vec> gens;
    gens.reserve(null_rows.size());
    for (const auto& r : null_rows) gens.push_back(from_pcoords(r));
    return AdditiveCode(F_, flavor_, n_, std::move(gens), beta_);
}

/// phi image of a symplectic code: a Plain code over F_{q^2} carrying beta.
inline AdditiveCode phi_image(const AdditiveCode& C) {
    require(C.flavor() == Flavor::Symplectic, "MixedAmbient", "phi acts on symplectic codes");
    FieldPtr Fq2 = quadratic_ext(C.field());
    Elem beta = normal_pair(Fq2);
    std::vector<Vec> gens;
    gens.reserve(C.basis().size());
    for (const auto& g : C.basis()) gens.push_back(phi_vec(C.field(), Fq2, beta, g));
    return AdditiveCode(Fq2, Flavor::Plain, C.n(), std::move(gens), beta);
}

/// phi^{-1} of a Plain code over F_{q^2} back to the symplectic picture.
inline AdditiveCode phi_preimage(const AdditiveCode& D) {
    require(D.flavor() == Flavor::Plain && D.field()->m() % 2 == 0, "MixedAmbient",
            "phi^{-1} needs a q^2 ambient");
    FieldPtr Fq = FieldCtx::get(D.field()->p(), D.field()->m() / 2);
    Elem beta = D.beta() ? *D.beta() : normal_pair(D.field());
    std::vector<Vec> gens;
    gens.reserve(D.basis().size());
    for (const auto& g : D.basis()) gens.push_back(phi_inv_vec(Fq, D.field(), beta, g));
    return AdditiveCode(Fq, Flavor::Symplectic, D.n(), std::move(gens));
}

}  // namespace qecc
