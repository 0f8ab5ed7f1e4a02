#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <vector>

#include "qecc/error.hpp"

namespace qecc {

/// A field element is its index in the canonical enumeration of F_{p^m}:
/// the element with polynomial-basis coefficients (c_0,...,c_{m-1}) has
/// index sum c_i * p^i. For p = 2 the index is the coefficient bitmask.
using Elem = std::uint32_t;
using Vec = std::vector<Elem>;

class FieldCtx;
using FieldPtr = std::shared_ptr<const FieldCtx>;

inline std::uint64_t powu64(std::uint64_t b, unsigned e) {
    std::uint64_t r = 1;
    while (e--) r *= b;
    return r;
}

namespace detail {

inline bool is_prime_u64(std::uint64_t v) {
    if (v < 2) return false;
    for (std::uint64_t d = 2; d * d <= v; ++d)
        if (v % d == 0) return false;
    return true;
}

inline std::vector<std::uint64_t> prime_factors(std::uint64_t v) {
    std::vector<std::uint64_t> fs;
    for (std::uint64_t d = 2; d * d <= v; ++d) {
        if (v % d == 0) {
            fs.push_back(d);
            while (v % d == 0) v /= d;
        }
    }
    if (v > 1) fs.push_back(v);
    return fs;
}

}  // namespace detail

/// Exact arithmetic in F_{p^m}. Instances are immutable, built once per
/// (p, m) through FieldCtx::get, and shared; pointer equality is field
/// equality. The defining polynomial is the monic irreducible of degree m
/// over F_p whose coefficient word (c_0,...,c_{m-1}) has the smallest
/// integer value sum c_i p^i, so serialized codes reproduce across runs.
/// (This differs from the Conway-polynomial convention on purpose.)
class FieldCtx {
   public:
    static constexpr std::uint64_t kMaxElements = 1u << 24;
    static constexpr std::uint32_t kTableLimit = 1u << 20;

    /// Registry access point. Throws NonPrime / FieldTooLarge.
    static FieldPtr get(std::uint32_t p, std::uint32_t m);

    std::uint32_t p() const noexcept { return p_; }
    std::uint32_t m() const noexcept { return m_; }
    std::uint32_t q() const noexcept { return q_; }
    /// Monic modulus, coefficients c_0..c_m low-to-high (c_m = 1).
    const std::vector<std::uint32_t>& modulus() const noexcept { return irr_; }

    std::uint32_t coeff(Elem a, std::uint32_t i) const {
        for (std::uint32_t k = 0; k < i; ++k) a /= p_;
        return a % p_;
    }
    Elem from_coeffs(const std::vector<std::uint32_t>& c) const {
        Elem v = 0;
        for (std::size_t i = c.size(); i-- > 0;) v = static_cast<Elem>(v * p_ + c[i] % p_);
        return v;
    }

    Elem add(Elem a, Elem b) const {
        if (p_ == 2) return a ^ b;
        if (!add_tab_.empty()) return add_tab_[static_cast<std::size_t>(a) * q_ + b];
        return add_digits(a, b);
    }
    Elem neg(Elem a) const {
        if (p_ == 2) return a;
        Elem r = 0, mul = 1;
        for (std::uint32_t i = 0; i < m_; ++i) {
            std::uint32_t c = a % p_;
            a /= p_;
            r += static_cast<Elem>((c ? p_ - c : 0) * mul);
            mul *= p_;
        }
        return r;
    }
    Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }

    Elem mul(Elem a, Elem b) const {
        if (a == 0 || b == 0) return 0;
        if (!log_.empty()) return exp_[log_[a] + log_[b]];
        return mul_mod(a, b);
    }
    Elem inv(Elem a) const {
        require(a != 0, "DivisionByZero", "inverse of zero");
        if (!log_.empty()) return exp_[q_ - 1 - log_[a]];
        return pow(a, q_ - 2);
    }
    Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }

    Elem pow(Elem a, std::uint64_t e) const {
        if (a == 0) return e == 0 ? 1 : 0;
        if (!log_.empty()) return exp_[static_cast<std::size_t>(std::uint64_t(log_[a]) * (e % (q_ - 1)) % (q_ - 1))];
        Elem r = 1;
        while (e) {
            if (e & 1) r = mul_mod(r, a);
            a = mul_mod(a, a);
            e >>= 1;
        }
        return r;
    }
    /// Frobenius x -> x^p.
    Elem frob(Elem a) const { return pow(a, p_); }

    /// Smallest element of multiplicative order q-1.
    Elem primitive_element() const noexcept { return primitive_; }

    std::uint64_t order_of(Elem a) const {
        require(a != 0, "DivisionByZero", "order of zero");
        std::uint64_t ord = q_ - 1;
        for (std::uint64_t f : detail::prime_factors(q_ - 1))
            while (ord % f == 0 && pow(a, ord / f) == 1) ord /= f;
        return ord;
    }

    /// Relative trace onto the degree-e subfield: sum of x^{(p^e)^k}.
    /// The result lies in the subfield image inside this field.
    Elem trace_to(Elem a, std::uint32_t e) const {
        require(e >= 1 && m_ % e == 0, "NotASubfield", "subfield degree must divide extension degree");
        std::uint64_t qe = 1;
        for (std::uint32_t i = 0; i < e; ++i) qe *= p_;
        Elem acc = a, cur = a;
        for (std::uint32_t k = 1; k < m_ / e; ++k) {
            cur = pow(cur, qe);
            acc = add(acc, cur);
        }
        return acc;
    }
    /// Absolute trace tr_{q/p}, as an integer in [0, p).
    std::uint32_t trace_prime(Elem a) const {
        Elem t = trace_to(a, 1);
        return t;  // prime-subfield elements are the constant indices
    }

    bool in_subfield(Elem a, std::uint32_t e) const {
        std::uint64_t qe = 1;
        for (std::uint32_t i = 0; i < e; ++i) qe *= p_;
        return pow(a, qe) == a;
    }

   private:
    FieldCtx(std::uint32_t p, std::uint32_t m);

    Elem add_digits(Elem a, Elem b) const {
        Elem r = 0, mul = 1;
        for (std::uint32_t i = 0; i < m_; ++i) {
            std::uint32_t s = a % p_ + b % p_;
            if (s >= p_) s -= p_;
            a /= p_;
            b /= p_;
            r += static_cast<Elem>(s * mul);
            mul *= p_;
        }
        return r;
    }

    Elem mul_mod(Elem a, Elem b) const {
        if (p_ == 2) {
            std::uint64_t x = a, y = b, acc = 0;
            while (y) {
                if (y & 1) acc ^= x;
                x <<= 1;
                y >>= 1;
            }
            for (std::uint32_t i = 2 * m_ - 2; i >= m_ && i < 64; --i)
                if (acc >> i & 1) acc ^= irr_mask_ << (i - m_);
            return static_cast<Elem>(acc);
        }
        std::uint64_t buf[64] = {0};
        std::uint32_t da[32], db[32];
        Elem t = a;
        for (std::uint32_t i = 0; i < m_; ++i) {
            da[i] = t % p_;
            t /= p_;
        }
        t = b;
        for (std::uint32_t i = 0; i < m_; ++i) {
            db[i] = t % p_;
            t /= p_;
        }
        for (std::uint32_t i = 0; i < m_; ++i)
            if (da[i])
                for (std::uint32_t j = 0; j < m_; ++j) buf[i + j] += std::uint64_t(da[i]) * db[j];
        for (std::uint32_t i = 0; i < 2 * m_ - 1; ++i) buf[i] %= p_;
        for (std::uint32_t i = 2 * m_ - 2; i >= m_ && i < 64; --i) {
            std::uint64_t c = buf[i];
            if (!c) continue;
            buf[i] = 0;
            for (std::uint32_t j = 0; j < m_; ++j) buf[i - m_ + j] = (buf[i - m_ + j] + c * (p_ - irr_[j])) % p_;
        }
        Elem r = 0;
        for (std::uint32_t i = m_; i-- > 0;) r = static_cast<Elem>(r * p_ + buf[i]);
        return r;
    }

    bool divides(const std::vector<std::uint32_t>& d, const std::vector<std::uint32_t>& f) const;
    static std::vector<std::uint32_t> smallest_irreducible(std::uint32_t p, std::uint32_t m);

    std::uint32_t p_, m_, q_;
    std::vector<std::uint32_t> irr_;  // c_0..c_m
    std::uint64_t irr_mask_ = 0;      // p = 2 packed modulus
    Elem primitive_ = 0;
    std::vector<Elem> exp_;  // exp_[i] = g^i for 0 <= i <= 2(q-2)
    std::vector<std::uint32_t> log_;
    std::vector<Elem> add_tab_;
};

namespace detail {

// Polynomial helpers over F_p on raw coefficient words (low-to-high,
// not normalized). Used only for the construction-time irreducibility scan.
inline std::vector<std::uint32_t> polymod(std::vector<std::uint32_t> r, const std::vector<std::uint32_t>& d,
                                          std::uint32_t p) {
    auto deg = [](const std::vector<std::uint32_t>& v) {
        for (std::size_t i = v.size(); i-- > 0;)
            if (v[i]) return static_cast<long>(i);
        return -1L;
    };
    long dd = deg(d);
    long dr = deg(r);
    while (dr >= dd && dd >= 0) {
        // d is monic in our usage
        std::uint32_t c = r[dr];
        for (long j = 0; j <= dd; ++j) {
            std::uint64_t sub = std::uint64_t(c) * d[j] % p;
            r[dr - dd + j] = static_cast<std::uint32_t>((r[dr - dd + j] + p - sub) % p);
        }
        dr = deg(r);
    }
    return r;
}

}  // namespace detail

inline bool FieldCtx::divides(const std::vector<std::uint32_t>& d, const std::vector<std::uint32_t>& f) const {
    auto r = detail::polymod(f, d, p_);
    return std::all_of(r.begin(), r.end(), [](std::uint32_t c) { return c == 0; });
}

inline std::vector<std::uint32_t> FieldCtx::smallest_irreducible(std::uint32_t p, std::uint32_t m) {
    if (m == 1) return {0, 1};  // x
    // Candidate scan in canonical word order; trial division by every monic
    // polynomial of degree <= m/2 (their count is tiny under the q <= 2^24 cap).
    std::uint64_t total = 1;
    for (std::uint32_t i = 0; i < m; ++i) total *= p;
    for (std::uint64_t t = 0; t < total; ++t) {
        std::vector<std::uint32_t> f(m + 1, 0);
        std::uint64_t v = t;
        for (std::uint32_t i = 0; i < m; ++i) {
            f[i] = v % p;
            v /= p;
        }
        f[m] = 1;
        if (f[0] == 0) continue;  // divisible by x
        bool irreducible = true;
        for (std::uint32_t dd = 1; irreducible && dd <= m / 2; ++dd) {
            std::uint64_t cnt = 1;
            for (std::uint32_t i = 0; i < dd; ++i) cnt *= p;
            for (std::uint64_t s = 0; s < cnt; ++s) {
                std::vector<std::uint32_t> d(dd + 1, 0);
                std::uint64_t w = s;
                for (std::uint32_t i = 0; i < dd; ++i) {
                    d[i] = w % p;
                    w /= p;
                }
                d[dd] = 1;
                auto r = detail::polymod(f, d, p);
                if (std::all_of(r.begin(), r.end(), [](std::uint32_t c) { return c == 0; })) {
                    irreducible = false;
                    break;
                }
            }
        }
        if (irreducible) return f;
    }
    fail("Internal", "no irreducible polynomial found");  // unreachable
}

inline FieldCtx::FieldCtx(std::uint32_t p, std::uint32_t m) : p_(p), m_(m) {
    std::uint64_t q = 1;
    for (std::uint32_t i = 0; i < m; ++i) {
        q *= p;
        require(q <= kMaxElements, "FieldTooLarge", "p^m exceeds 2^24");
    }
    q_ = static_cast<std::uint32_t>(q);
    irr_ = smallest_irreducible(p, m);
    if (p == 2) {
        for (std::uint32_t i = 0; i <= m; ++i)
            if (irr_[i]) irr_mask_ |= std::uint64_t(1) << i;
    }
    if (q_ > 2) {
        for (Elem g = 1; g < q_; ++g) {
            bool prim = true;
            for (std::uint64_t f : detail::prime_factors(q_ - 1)) {
                Elem t = 1, b = g;
                std::uint64_t e = (q_ - 1) / f;
                while (e) {
                    if (e & 1) t = mul_mod(t, b);
                    b = mul_mod(b, b);
                    e >>= 1;
                }
                if (t == 1) {
                    prim = false;
                    break;
                }
            }
            if (prim) {
                primitive_ = g;
                break;
            }
        }
    } else {
        primitive_ = 1;
    }
    if (q_ <= kTableLimit && q_ > 2) {
        exp_.resize(2 * (q_ - 1));
        log_.assign(q_, 0);
        Elem cur = 1;
        for (std::uint32_t i = 0; i < q_ - 1; ++i) {
            exp_[i] = cur;
            exp_[i + q_ - 1] = cur;
            log_[cur] = i;
            cur = mul_mod(cur, primitive_);
        }
    }
    if (p_ != 2 && q_ <= 1024) {
        add_tab_.resize(static_cast<std::size_t>(q_) * q_);
        for (Elem a = 0; a < q_; ++a)
            for (Elem b = 0; b < q_; ++b) add_tab_[static_cast<std::size_t>(a) * q_ + b] = add_digits(a, b);
    }
}

inline FieldPtr FieldCtx::get(std::uint32_t p, std::uint32_t m) {
    require(m >= 1, "BadParameters", "extension degree must be positive");
    require(detail::is_prime_u64(p), "NonPrime", "characteristic must be prime");
    static std::mutex mu;
    static std::map<std::pair<std::uint32_t, std::uint32_t>, FieldPtr> registry;
    std::lock_guard<std::mutex> lock(mu);
    auto& slot = registry[{p, m}];
    if (!slot) slot = FieldPtr(new FieldCtx(p, m));
    return slot;
}

inline bool same_field(const FieldPtr& a, const FieldPtr& b) { return a.get() == b.get(); }

/// Image of F_{p^e} inside F_{p^M} (e | M): element-indexed table, built by
/// sending the base generator to the smallest root of the base modulus in
/// the extension. Cached per (base, ext) pair.
inline const std::vector<Elem>& embedding(const FieldPtr& base, const FieldPtr& ext) {
    require(base->p() == ext->p() && ext->m() % base->m() == 0, "NotASubfield", "no subfield embedding");
    static std::mutex mu;
    static std::map<std::tuple<std::uint32_t, std::uint32_t, std::uint32_t>, std::vector<Elem>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto key = std::make_tuple(base->p(), base->m(), ext->m());
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;

    std::vector<Elem> tab(base->q());
    if (base->m() == 1 || base.get() == ext.get()) {
        for (Elem c = 0; c < base->q(); ++c) tab[c] = c;
    } else {
        const auto& f = base->modulus();
        Elem root = 0;
        bool found = false;
        for (Elem x = 0; x < ext->q(); ++x) {
            Elem acc = 0;
            for (std::size_t i = f.size(); i-- > 0;) acc = ext->add(ext->mul(acc, x), f[i] % ext->p());
            if (acc == 0) {
                root = x;
                found = true;
                break;
            }
        }
        require(found, "Internal", "modulus has no root in extension");
        for (Elem c = 0; c < base->q(); ++c) {
            Elem acc = 0, power = 1;
            Elem v = c;
            for (std::uint32_t i = 0; i < base->m(); ++i) {
                std::uint32_t digit = v % base->p();
                v /= base->p();
                if (digit) acc = ext->add(acc, ext->mul(digit, power));  // digit < p embeds as constant
                power = ext->mul(power, root);
            }
            tab[c] = acc;
        }
    }
    return cache.emplace(key, std::move(tab)).first->second;
}

/// Inverse of embedding() on its image; fails if y is outside the subfield.
inline Elem pullback(const FieldPtr& base, const FieldPtr& ext, Elem y) {
    const auto& tab = embedding(base, ext);
    static std::mutex mu;
    static std::map<std::tuple<std::uint32_t, std::uint32_t, std::uint32_t>, std::map<Elem, Elem>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto key = std::make_tuple(base->p(), base->m(), ext->m());
    auto& rev = cache[key];
    if (rev.empty())
        for (Elem c = 0; c < base->q(); ++c) rev[tab[c]] = c;
    auto it = rev.find(y);
    require(it != rev.end(), "NotASubfield", "element not in subfield image");
    return it->second;
}

struct RootOfUnity {
    FieldPtr ext;
    Elem beta;
};

/// Splitting field F_{q^t} of x^n - 1 over F_q together with a primitive
/// n-th root of unity, pinned as gamma^{(q^t-1)/n} for the smallest
/// primitive element gamma.
inline RootOfUnity nth_root_of_unity(const FieldPtr& F, std::uint64_t n) {
    require(n >= 1, "BadParameters", "n must be positive");
    require(std::gcd(n, std::uint64_t(F->p())) == 1, "NotCoprime", "n must be coprime to the characteristic");
    std::uint32_t t = 1;
    if (n > 1) {
        std::uint64_t r = F->q() % n;
        while (r != 1) {
            r = r * (F->q() % n) % n;
            ++t;
            require(t <= 64, "FieldTooLarge", "splitting field too large");
        }
    }
    FieldPtr ext = FieldCtx::get(F->p(), F->m() * t);
    std::uint64_t order = std::uint64_t(ext->q()) - 1;
    Elem beta = ext->pow(ext->primitive_element(), order / n);
    return {ext, beta};
}

/// Smallest beta such that (beta, beta^q) is a normal basis of F_{q^2}/F_q.
inline Elem normal_pair(const FieldPtr& Fq2) {
    require(Fq2->m() % 2 == 0, "NotASubfield", "field is not a quadratic extension");
    std::uint32_t e = Fq2->m() / 2;
    std::uint64_t q = 1;
    for (std::uint32_t i = 0; i < e; ++i) q *= Fq2->p();
    for (Elem b = 1; b < Fq2->q(); ++b) {
        Elem r = Fq2->pow(b, q - 1);
        if (!Fq2->in_subfield(r, e)) return b;  // beta^q not an F_q multiple of beta
    }
    fail("Internal", "no normal element found");
}

}  // namespace qecc
