#pragma once

#include <vector>

#include "qecc/gf.hpp"

namespace qecc {

/// Polynomial over a FieldCtx, coefficients low-to-high, canonical form
/// (no trailing zeros; the zero polynomial has an empty coefficient list).
struct Poly {
    FieldPtr F;
    Vec c;

    Poly() = default;
    Poly(FieldPtr field, Vec coeffs) : F(std::move(field)), c(std::move(coeffs)) { normalize(); }

    static Poly zero(FieldPtr F) { return Poly(std::move(F), {}); }
    static Poly one(FieldPtr F) { return Poly(std::move(F), {1}); }
    static Poly x(FieldPtr F) { return Poly(std::move(F), {0, 1}); }

    bool is_zero() const { return c.empty(); }
    long degree() const { return static_cast<long>(c.size()) - 1; }
    Elem leading() const { return c.empty() ? 0 : c.back(); }

    void normalize() {
        while (!c.empty() && c.back() == 0) c.pop_back();
    }
};

inline void check_same_field(const Poly& a, const Poly& b) {
    require(same_field(a.F, b.F), "MixedFields", "polynomial operands over different fields");
}

inline Poly poly_add(const Poly& a, const Poly& b) {
    check_same_field(a, b);
    Vec r(std::max(a.c.size(), b.c.size()), 0);
    for (std::size_t i = 0; i < r.size(); ++i) {
        Elem x = i < a.c.size() ? a.c[i] : 0;
        Elem y = i < b.c.size() ? b.c[i] : 0;
        r[i] = a.F->add(x, y);
    }
    return Poly(a.F, std::move(r));
}

inline Poly poly_sub(const Poly& a, const Poly& b) {
    check_same_field(a, b);
    Vec r(std::max(a.c.size(), b.c.size()), 0);
    for (std::size_t i = 0; i < r.size(); ++i) {
        Elem x = i < a.c.size() ? a.c[i] : 0;
        Elem y = i < b.c.size() ? b.c[i] : 0;
        r[i] = a.F->sub(x, y);
    }
    return Poly(a.F, std::move(r));
}

inline Poly poly_mul(const Poly& a, const Poly& b) {
    check_same_field(a, b);
    if (a.is_zero() || b.is_zero()) return Poly::zero(a.F);
    Vec r(a.c.size() + b.c.size() - 1, 0);
    for (std::size_t i = 0; i < a.c.size(); ++i) {
        if (a.c[i] == 0) continue;
        for (std::size_t j = 0; j < b.c.size(); ++j) r[i + j] = a.F->add(r[i + j], a.F->mul(a.c[i], b.c[j]));
    }
    return Poly(a.F, std::move(r));
}

inline Poly poly_scale(const Poly& a, Elem s) {
    Vec r(a.c.size());
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = a.F->mul(a.c[i], s);
    return Poly(a.F, std::move(r));
}

inline std::pair<Poly, Poly> poly_divmod(const Poly& a, const Poly& d) {
    check_same_field(a, d);
    require(!d.is_zero(), "DivisionByZeroPoly", "division by the zero polynomial");
    Vec rem = a.c;
    long dd = d.degree();
    if (a.degree() < dd) return {Poly::zero(a.F), a};
    Vec quo(a.degree() - dd + 1, 0);
    Elem lead_inv = a.F->inv(d.leading());
    for (long i = a.degree(); i >= dd; --i) {
        Elem coef = rem[static_cast<std::size_t>(i)];
        if (coef == 0) continue;
        Elem f = a.F->mul(coef, lead_inv);
        quo[static_cast<std::size_t>(i - dd)] = f;
        for (long j = 0; j <= dd; ++j)
            rem[static_cast<std::size_t>(i - dd + j)] =
                a.F->sub(rem[static_cast<std::size_t>(i - dd + j)], a.F->mul(f, d.c[static_cast<std::size_t>(j)]));
    }
    return {Poly(a.F, std::move(quo)), Poly(a.F, std::move(rem))};
}

/// Monic gcd (gcd of zero polynomials is zero).
inline Poly poly_gcd(Poly a, Poly b) {
    check_same_field(a, b);
    while (!b.is_zero()) {
        Poly r = poly_divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.is_zero() && a.leading() != 1) a = poly_scale(a, a.F->inv(a.leading()));
    return a;
}

inline Elem poly_eval(const Poly& a, Elem x) {
    Elem acc = 0;
    for (std::size_t i = a.c.size(); i-- > 0;) acc = a.F->add(a.F->mul(acc, x), a.c[i]);
    return acc;
}

/// Monic product of (x - r) over the given roots; empty list gives 1.
inline Poly poly_from_roots(const FieldPtr& F, const Vec& roots) {
    Poly acc = Poly::one(F);
    for (Elem r : roots) acc = poly_mul(acc, Poly(F, {F->neg(r), 1}));
    return acc;
}

/// x^n - 1 over F.
inline Poly poly_xn_minus_1(const FieldPtr& F, std::size_t n) {
    Vec c(n + 1, 0);
    c[0] = F->neg(1);
    c[n] = 1;
    return Poly(F, std::move(c));
}

inline bool operator==(const Poly& a, const Poly& b) { return same_field(a.F, b.F) && a.c == b.c; }

}  // namespace qecc
