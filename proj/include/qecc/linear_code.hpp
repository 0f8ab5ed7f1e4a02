#pragma once

#include <optional>
#include <vector>

#include "qecc/additive_code.hpp"

namespace qecc {

/// Classical F_q-linear [n,k] code, stored as the RREF of its generator
/// matrix so equal codes compare equal rowwise.
class LinearCode {
   public:
    LinearCode(FieldPtr F, unsigned n, std::vector<Vec> rows) : F_(std::move(F)), n_(n), rows_(std::move(rows)) {
        for (const auto& r : rows_) require(r.size() == n_, "MixedAmbient", "generator row length mismatch");
        rref_field(F_, rows_);
    }

    static LinearCode zero(FieldPtr F, unsigned n) { return LinearCode(std::move(F), n, {}); }
    static LinearCode full_space(FieldPtr F, unsigned n) {
        std::vector<Vec> rows(n, Vec(n, 0));
        for (unsigned i = 0; i < n; ++i) rows[i][i] = 1;
        return LinearCode(std::move(F), n, std::move(rows));
    }

    const FieldPtr& field() const noexcept { return F_; }
    unsigned n() const noexcept { return n_; }
    unsigned k() const noexcept { return static_cast<unsigned>(rows_.size()); }
    const std::vector<Vec>& basis() const noexcept { return rows_; }

    bool contains(const Vec& v) const {
        require(v.size() == n_, "MixedAmbient", "vector length mismatch");
        Vec w = v;
        for (const auto& r : rows_) {
            std::size_t pivot = 0;
            while (pivot < n_ && r[pivot] == 0) ++pivot;
            if (w[pivot] == 0) continue;
            Elem f = w[pivot];
            for (std::size_t j = pivot; j < n_; ++j) w[j] = F_->sub(w[j], F_->mul(f, r[j]));
        }
        for (Elem x : w)
            if (x) return false;
        return true;
    }
    bool subcode_of(const LinearCode& other) const {
        if (!same_field(F_, other.F_) || n_ != other.n_) return false;
        for (const auto& r : rows_)
            if (!other.contains(r)) return false;
        return true;
    }
    bool same_code_as(const LinearCode& other) const { return k() == other.k() && subcode_of(other); }

    /// Euclidean dual {y : x.y = 0 for all x in C}.
    LinearCode dual() const { return LinearCode(F_, n_, nullspace_field(F_, rows_, n_)); }

    /// Hermitian dual {y : x^q.y = 0}; the alphabet must be F_{q^2}.
    LinearCode dual_hermitian() const {
        require(F_->m() % 2 == 0, "NotASubfield", "hermitian dual needs a quadratic extension alphabet");
        std::uint64_t qe = 1;
        for (std::uint32_t i = 0; i < F_->m() / 2; ++i) qe *= F_->p();
        std::vector<Vec> conj = rows_;
        for (auto& r : conj)
            for (auto& x : r) x = F_->pow(x, qe);
        return LinearCode(F_, n_, nullspace_field(F_, std::move(conj), n_));
    }

    /// The same set as an F_p-linear code (rows times each basis monomial).
    AdditiveCode to_additive() const {
        std::vector<Vec> gens;
        gens.reserve(rows_.size() * F_->m());
        for (const auto& r : rows_)
            for (std::uint32_t t = 0; t < F_->m(); ++t) {
                Elem mono = 1;
                for (std::uint32_t i = 0; i < t; ++i) mono = static_cast<Elem>(mono * F_->p());
                gens.push_back(detail::scaled_row(*F_, r, mono));
            }
        return AdditiveCode(F_, Flavor::Plain, n_, std::move(gens));
    }

    std::optional<unsigned> min_weight() const { return min_weight_nonzero(to_additive()); }
    WeightEnumerator enumerate_weights() const { return weight_enumerator(to_additive()); }
    /// Minimum Hamming weight over this \ sub (infinity sentinel when equal).
    std::optional<unsigned> min_weight_difference_with(const LinearCode& sub) const {
        return ::qecc::min_weight_difference(to_additive(), sub.to_additive());
    }

   private:
    FieldPtr F_;
    unsigned n_;
    std::vector<Vec> rows_;
};

}  // namespace qecc
