#include <catch2/catch_amalgamated.hpp>

#include "oracles.hpp"
#include "qecc/stabilizer.hpp"

using namespace qecc;

namespace {

std::vector<Vec> five_qubit_gens() {
    return {
        {1, 0, 0, 1, 0, 0, 1, 1, 0, 0},
        {0, 1, 0, 0, 1, 0, 0, 1, 1, 0},
        {1, 0, 1, 0, 0, 0, 0, 0, 1, 1},
        {0, 1, 0, 1, 0, 1, 0, 0, 0, 1},
    };
}

AdditiveCode hexacode_additive() {
    auto F4 = FieldCtx::get(2, 2);
    std::vector<Vec> rows = {{1, 0, 0, 1, 2, 2}, {0, 1, 0, 2, 1, 2}, {0, 0, 1, 2, 2, 1}};
    std::vector<Vec> gens;
    for (const auto& r : rows) {
        gens.push_back(r);
        gens.push_back(detail::scaled_row(*F4, r, 2));
    }
    return AdditiveCode(F4, Flavor::Plain, 6, gens, normal_pair(F4));
}

std::vector<Vec> hamming74() {
    return {
        {1, 0, 0, 0, 1, 1, 0},
        {0, 1, 0, 0, 1, 0, 1},
        {0, 0, 1, 0, 0, 1, 1},
        {0, 0, 0, 1, 1, 1, 1},
    };
}

}  // namespace

TEST_CASE("from_symplectic: trivial and five-qubit carriers") {
    auto F2 = FieldCtx::get(2, 1);

    AdditiveCode zero(F2, Flavor::Symplectic, 1, {});
    auto triv = from_symplectic(zero, DistanceMode::Exact);
    CHECK(triv.n == 1);
    CHECK(triv.k_exponent == 1);
    CHECK(triv.d_claimed == 1);
    CHECK(triv.params_string() == "[[1,1,1]]_2");

    AdditiveCode fq(F2, Flavor::Symplectic, 5, five_qubit_gens());
    auto code = from_symplectic(fq, DistanceMode::Exact);
    CHECK(code.params_string() == "[[5,1,3]]_2");
    CHECK(code.pure_to == 3u);
    CHECK(code.is_pure());

    // round trip: rebuilding from the carrier reproduces the parameters
    auto again = from_symplectic(code.carrier, DistanceMode::Exact);
    CHECK(again.n == code.n);
    CHECK(again.k_exponent == code.k_exponent);
    CHECK(again.d_claimed == code.d_claimed);
}

TEST_CASE("from_symplectic rejects non-self-orthogonal carriers with a witness") {
    auto F2 = FieldCtx::get(2, 1);
    AdditiveCode bad(F2, Flavor::Symplectic, 1, {{1, 0}, {0, 1}});
    try {
        from_symplectic(bad, DistanceMode::Exact);
        FAIL("expected NotSelfOrthogonal");
    } catch (const Error& e) {
        CHECK(e.code() == "NotSelfOrthogonal");
        CHECK(std::string(e.what()).find("witness") != std::string::npos);
    }
}

TEST_CASE("from_alternating: trivial and hexacode carriers") {
    auto F4 = FieldCtx::get(2, 2);
    AdditiveCode zero(F4, Flavor::Plain, 1, {}, normal_pair(F4));
    auto triv = from_alternating(zero, DistanceMode::Exact);
    CHECK(triv.params_string() == "[[1,1,1]]_2");

    auto hex = hexacode_additive();
    // hermitian self-dual, hence alternating self-orthogonal
    REQUIRE(hex.is_field_linear());
    REQUIRE(hex.subcode_of(hex.dual(DualForm::Hermitian)));
    auto code = from_alternating(hex, DistanceMode::Exact);
    CHECK(code.params_string() == "[[6,0,4]]_2");
    CHECK(code.k_exponent == 0);
    CHECK(code.pure_to == 4u);
}

TEST_CASE("css construction") {
    auto F2 = FieldCtx::get(2, 1);
    LinearCode ham(F2, 7, hamming74());
    auto steane = css(ham, ham, DistanceMode::Exact);
    CHECK(steane.params_string() == "[[7,1,3]]_2");
    CHECK(steane.pure_to == 3u);

    // full space: [[n,n,1]]_q
    for (auto [p, m] : {std::pair{2u, 1u}, {3u, 1u}}) {
        auto F = FieldCtx::get(p, m);
        auto full = LinearCode::full_space(F, 4);
        auto t = css(full, full, DistanceMode::Exact);
        CHECK(t.n == 4);
        CHECK(t.k_exponent == 4 * m);
        CHECK(t.d_claimed == 1);
    }

    // nesting violation carries a witness
    LinearCode rep(F2, 7, {{1, 1, 1, 1, 1, 1, 1}});
    try {
        css(rep, rep, DistanceMode::Exact);
        FAIL("expected NestingViolated");
    } catch (const Error& e) {
        CHECK(e.code() == "NestingViolated");
    }
}

TEST_CASE("verify recomputes everything") {
    auto F2 = FieldCtx::get(2, 1);
    AdditiveCode fq(F2, Flavor::Symplectic, 5, five_qubit_gens());
    auto code = from_symplectic(fq, DistanceMode::Exact);

    auto rep = verify(code, DistanceMode::Exact);
    CHECK(rep.self_orthogonal);
    CHECK(rep.size_ok);
    CHECK(rep.distance == 3u);
    CHECK(rep.distance_exact);
    CHECK(rep.distance_matches_claim);
    CHECK(rep.pure_to == 3u);
    CHECK(rep.singleton_ok);
    CHECK(rep.ok());

    // deliberately corrupted carrier
    StabilizerCode broken = code;
    broken.carrier = AdditiveCode(F2, Flavor::Symplectic, 5,
                                  {{1, 0, 0, 0, 0, 0, 0, 0, 0, 0}, {0, 0, 0, 0, 0, 1, 0, 0, 0, 0}});
    auto bad = verify(broken, DistanceMode::Exact);
    CHECK(!bad.self_orthogonal);
    CHECK(!bad.ok());

    // inflated distance claim is caught
    StabilizerCode liar = code;
    liar.d_claimed = 4;
    CHECK(!verify(liar, DistanceMode::Exact).distance_matches_claim);
}

TEST_CASE("css purity equals the minimum of the classical distances") {
    auto F2 = FieldCtx::get(2, 1);
    LinearCode ham(F2, 7, hamming74());
    auto steane = css(ham, ham, DistanceMode::Exact);
    CHECK(steane.pure_to == std::min(ham.min_weight().value(), ham.min_weight().value()));
}

TEST_CASE("fractional k in q-units") {
    auto F4 = FieldCtx::get(2, 2);
    // a single F_2-generator over F_4, n = 2: |C| = 2, so K = 4^2/2 = 2^3
    AdditiveCode C(F4, Flavor::Symplectic, 2, {{2, 0, 0, 0}});
    auto X = from_symplectic(C, DistanceMode::Exact);
    CHECK(X.k_exponent == 3);
    CHECK(!X.k_integral());
    CHECK(X.params_string() == "[[2,3/2,1]]_4");
}

TEST_CASE("singleton sanity holds for verified codes") {
    auto F2 = FieldCtx::get(2, 1);
    AdditiveCode fq(F2, Flavor::Symplectic, 5, five_qubit_gens());
    auto code = from_symplectic(fq, DistanceMode::Exact);
    CHECK(verify(code, DistanceMode::Exact).singleton_ok);
    auto hex = from_alternating(hexacode_additive(), DistanceMode::Exact);
    CHECK(verify(hex, DistanceMode::Exact).singleton_ok);
}
