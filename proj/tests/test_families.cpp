#include <catch2/catch_amalgamated.hpp>

#include "oracles.hpp"
#include "qecc/families.hpp"

using namespace qecc;

static bool throws_code(const std::function<void()>& f, const std::string& code) {
    try {
        f();
    } catch (const Error& e) {
        return e.code() == code;
    }
    return false;
}

TEST_CASE("quantum Hamming, hermitian route") {
    auto fq = quantum_hamming_hermitian(2, 2, DistanceMode::Exact);
    CHECK(fq.params_string() == "[[5,1,3]]_2");
    CHECK(fq.pure_to == 3u);
    CHECK(verify(fq, DistanceMode::Exact).ok());

    CHECK(throws_code([] { quantum_hamming_hermitian(2, 3, DistanceMode::Skip); }, "BadParameters"));
    CHECK(throws_code([] { quantum_hamming_hermitian(3, 2, DistanceMode::Skip); }, "BadParameters"));

    auto big = quantum_hamming_hermitian(3, 3, DistanceMode::Skip);
    CHECK(big.n == 91);
    CHECK(big.k_exponent == 85);  // q = 3 prime, so p-exponent = q-exponent
    CHECK(big.d_claimed == 3);
    CHECK(big.d_status == DistanceStatus::Exact);
    CHECK(big.pure_to == 3u);
    auto rep = verify(big, DistanceMode::Exact);  // distance enumeration impossible; structure checks only
    CHECK(rep.self_orthogonal);
    CHECK(rep.size_ok);
    CHECK(rep.singleton_ok);
}

TEST_CASE("quantum Hamming, euclidean route") {
    auto steane = quantum_hamming_euclidean(2, 3, DistanceMode::Exact);
    CHECK(steane.params_string() == "[[7,1,3]]_2");
    CHECK(steane.pure_to == 3u);

    auto h15 = quantum_hamming_euclidean(2, 4, DistanceMode::Exact);
    CHECK(h15.params_string() == "[[15,7,3]]_2");

    // gcd(m, q-1) != 1: the cyclic Hamming generator is self-reciprocal
    CHECK(throws_code([] { quantum_hamming_euclidean(3, 2, DistanceMode::Skip); }, "BadParameters"));
    // n - 2m < 0
    CHECK(throws_code([] { quantum_hamming_euclidean(2, 2, DistanceMode::Skip); }, "BadParameters"));
}

TEST_CASE("quadratic residue codes") {
    auto qr13 = quantum_qr(3, 13, DistanceMode::Exact);
    CHECK(qr13.n == 13);
    CHECK(qr13.k_exponent == 1);
    CHECK(qr13.d_status == DistanceStatus::Exact);
    CHECK(qr13.d_claimed >= 4);  // d >= sqrt(13)
    CHECK(verify(qr13, DistanceMode::Skip).self_orthogonal);

    auto qr7 = quantum_qr(2, 7, DistanceMode::Exact);
    CHECK(qr7.params_string() == "[[7,1,3]]_2");

    CHECK(throws_code([] { quantum_qr(3, 15, DistanceMode::Skip); }, "NotPrime"));
    CHECK(throws_code([] { quantum_qr(2, 5, DistanceMode::Skip); }, "NotResidue"));
}

TEST_CASE("quantum Melas codes") {
    auto m22 = quantum_melas(2, 2, DistanceMode::Skip);
    CHECK(m22.n == 15);
    CHECK(m22.k_exponent == 7);
    CHECK(m22.d_claimed == 3);
    CHECK(m22.d_status == DistanceStatus::LowerBound);
    CHECK(m22.pure_to == 3u);
    CHECK(verify(m22, DistanceMode::Skip).self_orthogonal);

    auto m41 = quantum_melas(4, 1, DistanceMode::Skip);
    CHECK(m41.n == 15);
    CHECK(m41.k_exponent == 11 * 2);  // q = 4 = 2^2: 11 q-units
    CHECK(m41.k_over_q() == 11);

    CHECK(throws_code([] { quantum_melas(3, 1, DistanceMode::Skip); }, "BadParameters"));

    // coset disjointness Z cap Z^{-q} for all even q <= 8, m <= 3
    for (std::uint64_t q : {2, 4, 8}) {
        for (unsigned m = 1; m <= 3; ++m) {
            std::uint64_t n = powu64(q, 2 * m) - 1;
            if (n <= 4 * m) continue;
            auto Z = union_of_cosets(n, q * q, 1, 1);
            for (auto z : coset_of(n - 1, n, q * q)) Z.insert(z);
            CHECK(hermitian_self_orthogonal(Z, n, q));
        }
    }
}

TEST_CASE("quantum BCH codes, both routes") {
    auto be = quantum_bch_euclidean(2, 4, 3, DistanceMode::Exact);
    CHECK(be.params_string() == "[[15,7,3]]_2");
    CHECK(be.pure_to == 3u);

    auto b32 = quantum_bch_euclidean(3, 2, 2, DistanceMode::Exact);
    CHECK(b32.n == 8);
    CHECK(b32.k_exponent == 4);
    CHECK(b32.d_claimed >= 2);

    CHECK(throws_code([] { quantum_bch_euclidean(2, 4, 4, DistanceMode::Skip); }, "DeltaOutOfRange"));

    auto bh = quantum_bch_hermitian(2, 2, 3, DistanceMode::Skip);
    CHECK(bh.n == 15);
    CHECK(bh.k_exponent == 7);
    CHECK(bh.d_claimed == 3);
    // both paths land on the same parameter triple (not necessarily equal codes)
    CHECK(bh.n == be.n);
    CHECK(bh.k_exponent == be.k_exponent);

    auto b63 = quantum_bch_hermitian(2, 3, 5, DistanceMode::Skip);
    CHECK(b63.n == 63);
    CHECK(b63.k_exponent == 45);
    CHECK(b63.d_claimed == 5);
    CHECK(b63.pure_to == 5u);

    CHECK(throws_code([] { quantum_bch_hermitian(2, 2, 4, DistanceMode::Skip); }, "DeltaOutOfRange"));
}

TEST_CASE("BCH extension") {
    auto bh = quantum_bch_hermitian(2, 2, 3, DistanceMode::Skip);
    auto ext = extend_bch(bh, DistanceMode::Skip);
    CHECK(ext.n == 16);
    CHECK(ext.k_exponent == 6);
    CHECK(ext.d_claimed == 4);
    CHECK(ext.pure_to == 4u);
    CHECK(verify(ext, DistanceMode::Skip).self_orthogonal);

    auto b63 = quantum_bch_hermitian(2, 3, 5, DistanceMode::Skip);
    auto e63 = extend_bch(b63, DistanceMode::Skip);
    CHECK(e63.n == 64);
    CHECK(e63.k_exponent == 44);
    CHECK(e63.d_claimed == 6);

    auto notbch = quantum_hamming_hermitian(2, 2, DistanceMode::Skip);
    CHECK(throws_code([&] { extend_bch(notbch, DistanceMode::Skip); }, "NotExtendable"));
}

TEST_CASE("character codes") {
    // classical parameters [2^m, k(r), 2^{m-r}]_q
    for (auto [q, m] : {std::pair{3u, 2u}, {3u, 3u}, {5u, 3u}}) {
        for (unsigned r = 0; r <= m; ++r) {
            auto C = character_code(q, r, m);
            BigInt k = 0;
            for (unsigned j = 0; j <= r; ++j) k += binomial(m, j);
            REQUIRE(BigInt(C.k()) == k);
            if (r < m) REQUIRE(C.min_weight() == (1u << (m - r)));
        }
    }

    auto c1 = quantum_character(3, 2, 0, 1, DistanceMode::Exact);
    CHECK(c1.params_string() == "[[4,2,2]]_3");
    auto c2 = quantum_character(5, 3, 0, 2, DistanceMode::Exact);
    CHECK(c2.params_string() == "[[8,6,2]]_5");
    auto c3 = quantum_character(3, 3, 1, 2, DistanceMode::Exact);
    CHECK(c3.params_string() == "[[8,3,2]]_3");

    CHECK(throws_code([] { quantum_character(2, 2, 0, 1, DistanceMode::Skip); }, "BadParameters"));
    CHECK(throws_code([] { quantum_character(3, 2, 1, 1, DistanceMode::Skip); }, "BadParameters"));

    // duality: dual(C_q(r,m)) is equivalent to C_q(m-r-1,m) - compared by
    // parameters and weight enumerators, not coordinate permutations
    for (auto [q, m] : {std::pair{3u, 2u}, {3u, 3u}, {5u, 2u}}) {
        for (unsigned r = 0; r + 1 <= m; ++r) {
            auto dual = character_code(q, r, m).dual();
            auto mirror = character_code(q, m - r - 1, m);
            REQUIRE(dual.k() == mirror.k());
            REQUIRE(dual.enumerate_weights() == mirror.enumerate_weights());
        }
    }
}

TEST_CASE("css family purity equals the minimum classical distance") {
    // character pair (3,2,0,1): C1 = C(1,2), C2 = C(0,2)^perp
    auto C1 = character_code(3, 1, 2);
    auto C2 = character_code(3, 0, 2).dual();
    auto X = quantum_character(3, 2, 0, 1, DistanceMode::Exact);
    CHECK(X.pure_to == std::min(C1.min_weight().value(), C2.min_weight().value()));

    // QR pair at n = 13
    auto qr = quantum_qr(3, 13, DistanceMode::Exact);
    auto F3 = FieldCtx::get(3, 1);
    std::set<std::uint64_t> R, N;
    for (std::uint64_t r = 1; r <= 6; ++r) R.insert(r * r % 13);
    for (std::uint64_t x = 1; x < 13; ++x)
        if (!R.count(x)) N.insert(x);
    auto CR = to_linear_code(build_cyclic(13, F3, R));
    auto CN = to_linear_code(build_cyclic(13, F3, N));
    CHECK(qr.pure_to == std::min(CN.min_weight().value(), CR.min_weight().value()));
}

TEST_CASE("round trip: rebuilding from the carrier reproduces parameters") {
    std::vector<StabilizerCode> codes;
    codes.push_back(quantum_hamming_hermitian(2, 2, DistanceMode::Exact));
    codes.push_back(quantum_hamming_euclidean(2, 3, DistanceMode::Exact));
    codes.push_back(quantum_qr(3, 13, DistanceMode::Exact));
    codes.push_back(quantum_character(3, 2, 0, 1, DistanceMode::Exact));
    codes.push_back(quantum_bch_euclidean(3, 2, 2, DistanceMode::Exact));
    for (const auto& X : codes) {
        auto again = from_symplectic(X.carrier, DistanceMode::Exact);
        REQUIRE(again.n == X.n);
        REQUIRE(again.k_exponent == X.k_exponent);
        REQUIRE(again.d_claimed == X.d_claimed);
    }
}

TEST_CASE("GRM parameters and codes") {
    CHECK(grm_params(2, 1, 3) == std::pair<std::uint64_t, std::uint64_t>{4, 3});
    CHECK(grm_params(3, 0, 2).second == 8);   // repetition-like: q^m - 1
    CHECK(grm_params(3, 3, 2).second == 1);   // nu = m(q-1)-1
    CHECK(grm_params(2, 1, 4) == std::pair<std::uint64_t, std::uint64_t>{5, 7});
    CHECK(throws_code([] { grm_params(2, 4, 3); }, "OrderOutOfRange"));

    auto rm13 = grm_code(2, 1, 3);
    CHECK(rm13.code.k() == 4);
    CHECK(rm13.code.min_weight() == 3u);  // punctured RM(1,3) = [7,4,3]

    auto rm14 = grm_code(2, 1, 4);
    CHECK(rm14.code.k() == 5);
    CHECK(rm14.code.min_weight() == 7u);

    auto g32 = grm_code(3, 2, 2);
    CHECK(g32.code.k() == 6);
    CHECK(g32.code.min_weight() == g32.d_star);
}

TEST_CASE("largest GRM subcode of a BCH code") {
    CHECK(grm_largest_in_bch(2, 4, 3) == 2);
    CHECK(grm_largest_in_bch(3, 2, 2) == 2);

    // containment oracle: R*(nu) inside B(delta), R*(nu+1) not
    struct Case {
        std::uint64_t q;
        unsigned m;
        std::uint64_t delta;
    };
    std::vector<Case> cases = {{2, 4, 3}, {3, 2, 2}};
    for (std::uint64_t delta = 2; delta + 2 <= 8; ++delta) cases.push_back({2, 6, delta});
    for (auto c : cases) {
        auto F = FieldCtx::get(static_cast<std::uint32_t>(c.q == 4 ? 2 : c.q), c.q == 4 ? 2u : 1u);
        std::uint64_t n = powu64(c.q, c.m) - 1;
        auto B = to_linear_code(build_cyclic(n, F, union_of_cosets(n, c.q, 1, c.delta - 1)));
        unsigned nu = grm_largest_in_bch(c.q, c.m, c.delta);
        auto R = grm_code(c.q, nu, c.m);
        REQUIRE(R.code.subcode_of(B));
        if (nu + 1 <= c.m * (c.q - 1) - 1) {
            auto R1 = grm_code(c.q, nu + 1, c.m);
            REQUIRE(!R1.code.subcode_of(B));
        }
    }
}
