#pragma once

#include <json.hpp>

#include "qecc/bounds.hpp"
#include "qecc/cyclic.hpp"
#include "qecc/stabilizer.hpp"

namespace qecc {

using Json = nlohmann::json;

// Field spec: {"p": int, "m": int, "irreducible": [c_0, ..., c_m]} with
// coefficients low-to-high. Elements serialize as coefficient arrays of
// length m. Loading re-derives the context and cross-checks the modulus,
// since this library pins one deterministic irreducible per (p, m).

inline Json field_to_json(const FieldPtr& F) {
    return Json{{"p", F->p()}, {"m", F->m()}, {"irreducible", F->modulus()}};
}

inline FieldPtr field_from_json(const Json& j) {
    FieldPtr F = FieldCtx::get(j.at("p").get<std::uint32_t>(), j.at("m").get<std::uint32_t>());
    if (j.contains("irreducible")) {
        auto irr = j.at("irreducible").get<std::vector<std::uint32_t>>();
        require(irr == F->modulus(), "BadParameters",
                "field spec uses a different modulus than this library's deterministic choice");
    }
    return F;
}

inline Json elem_to_json(const FieldPtr& F, Elem x) {
    Json a = Json::array();
    for (std::uint32_t i = 0; i < F->m(); ++i) a.push_back(F->coeff(x, i));
    return a;
}

inline Elem elem_from_json(const FieldPtr& F, const Json& j) {
    auto c = j.get<std::vector<std::uint32_t>>();
    require(c.size() == F->m(), "BadParameters", "element coefficient array has the wrong length");
    return F->from_coeffs(c);
}

inline Json vec_to_json(const FieldPtr& F, const Vec& v) {
    Json a = Json::array();
    for (Elem x : v) a.push_back(elem_to_json(F, x));
    return a;
}

inline Vec vec_from_json(const FieldPtr& F, const Json& j) {
    Vec v;
    v.reserve(j.size());
    for (const auto& e : j) v.push_back(elem_from_json(F, e));
    return v;
}

// Code: {"field": ..., "flavor": "symplectic"|"qsquare", "n": int,
//        "beta": elem (qsquare only), "generators": [[elem]]}.
// Symplectic generators have length 2n (a-half then b-half).

inline Json additive_to_json(const AdditiveCode& C) {
    Json j{{"field", field_to_json(C.field())},
           {"flavor", C.flavor() == Flavor::Symplectic ? "symplectic" : "qsquare"},
           {"n", C.n()}};
    if (C.beta()) j["beta"] = elem_to_json(C.field(), *C.beta());
    Json gens = Json::array();
    for (const auto& g : C.generators()) gens.push_back(vec_to_json(C.field(), g));
    j["generators"] = gens;
    return j;
}

inline AdditiveCode additive_from_json(const Json& j) {
    FieldPtr F = field_from_json(j.at("field"));
    std::string fl = j.at("flavor").get<std::string>();
    require(fl == "symplectic" || fl == "qsquare", "BadParameters", "unknown flavor");
    Flavor flavor = fl == "symplectic" ? Flavor::Symplectic : Flavor::Plain;
    unsigned n = j.at("n").get<unsigned>();
    std::optional<Elem> beta;
    if (j.contains("beta")) beta = elem_from_json(F, j.at("beta"));
    std::vector<Vec> gens;
    for (const auto& g : j.at("generators")) gens.push_back(vec_from_json(F, g));
    return AdditiveCode(F, flavor, n, std::move(gens), beta);
}

inline Json provenance_to_json(const Provenance& p) {
    return Json{{"family", p.family}, {"params", p.params}};
}

inline Provenance provenance_from_json(const Json& j) {
    Provenance p;
    p.family = j.value("family", "");
    if (j.contains("params"))
        for (auto it = j.at("params").begin(); it != j.at("params").end(); ++it)
            p.params[it.key()] = it.value().get<long long>();
    return p;
}

inline const char* distance_status_name(DistanceStatus s) {
    switch (s) {
        case DistanceStatus::Exact: return "exact";
        case DistanceStatus::LowerBound: return "lower-bound";
        default: return "unverified";
    }
}

inline DistanceStatus distance_status_from(const std::string& s) {
    if (s == "exact") return DistanceStatus::Exact;
    if (s == "lower-bound") return DistanceStatus::LowerBound;
    if (s == "unverified") return DistanceStatus::Unverified;
    fail("BadParameters", "unknown distance status: " + s);
}

inline Json stabilizer_to_json(const StabilizerCode& X) {
    Json j{{"p", X.F->p()},
           {"m", X.F->m()},
           {"n", X.n},
           {"k_exponent", X.k_exponent},
           {"d_claimed", X.d_claimed},
           {"d_verified", distance_status_name(X.d_status)},
           {"params", X.params_string()},
           {"carrier", additive_to_json(X.carrier)},
           {"provenance", provenance_to_json(X.provenance)}};
    if (X.pure_to)
        j["pure_to"] = *X.pure_to;
    else
        j["pure_to"] = nullptr;
    return j;
}

inline StabilizerCode stabilizer_from_json(const Json& j) {
    FieldPtr F = FieldCtx::get(j.at("p").get<std::uint32_t>(), j.at("m").get<std::uint32_t>());
    AdditiveCode carrier = additive_from_json(j.at("carrier"));
    require(same_field(carrier.field(), F) && carrier.flavor() == Flavor::Symplectic, "BadParameters",
            "carrier must be a symplectic code over the declared field");
    StabilizerCode X{F,
                     j.at("n").get<unsigned>(),
                     j.at("k_exponent").get<unsigned>(),
                     j.at("d_claimed").get<unsigned>(),
                     distance_status_from(j.at("d_verified").get<std::string>()),
                     std::nullopt,
                     std::move(carrier),
                     j.contains("provenance") ? provenance_from_json(j.at("provenance")) : Provenance{}};
    if (j.contains("pure_to") && !j.at("pure_to").is_null()) X.pure_to = j.at("pure_to").get<unsigned>();
    require(X.carrier.n() == X.n, "BadParameters", "carrier length disagrees with n");
    require(X.carrier.rank() + X.k_exponent == X.n * F->m(), "BadParameters",
            "carrier rank disagrees with the k exponent");
    return X;
}

// Cyclic code: {"n": int, "field": ..., "defining_set": [int]};
// the generator polynomial is emitted low-to-high for inspection.
inline Json cyclic_to_json(const CyclicCode& C) {
    return Json{{"n", C.n},
                {"field", field_to_json(C.alphabet)},
                {"defining_set", C.defining_set},
                {"generator", vec_to_json(C.alphabet, C.generator.c)}};
}

inline CyclicCode cyclic_from_json(const Json& j) {
    FieldPtr F = field_from_json(j.at("field"));
    auto zs = j.at("defining_set").get<std::vector<std::uint64_t>>();
    return build_cyclic(j.at("n").get<std::uint64_t>(), F, std::set<std::uint64_t>(zs.begin(), zs.end()));
}

inline std::string rat_to_string(const BigRat& r) {
    std::string s = boost::multiprecision::numerator(r).str();
    if (boost::multiprecision::denominator(r) != 1) s += "/" + boost::multiprecision::denominator(r).str();
    return s;
}

inline Json verdict_to_json(const BoundVerdict& v) {
    Json j{{"bound", v.bound}, {"satisfied", v.satisfied}, {"slack", rat_to_string(v.slack)}, {"inputs", v.inputs}};
    if (v.bound == "singleton") j["is_mds"] = v.is_mds;
    return j;
}

inline Json report_to_json(const VerificationReport& r) {
    Json j{{"self_orthogonal", r.self_orthogonal},
           {"size_ok", r.size_ok},
           {"distance_exact", r.distance_exact},
           {"distance_matches_claim", r.distance_matches_claim},
           {"singleton_ok", r.singleton_ok},
           {"elapsed_seconds", r.elapsed_seconds},
           {"ok", r.ok()}};
    j["distance"] = r.distance ? Json(*r.distance) : Json(nullptr);
    j["pure_to"] = r.pure_to ? Json(*r.pure_to) : Json(nullptr);
    return j;
}

}  // namespace qecc
