#include <catch2/catch_amalgamated.hpp>
#include <random>

#include "oracles.hpp"
#include "qecc/bounds.hpp"
#include "qecc/families.hpp"

using namespace qecc;

TEST_CASE("krawtchouk values and identities") {
    for (unsigned x = 0; x <= 5; ++x) CHECK(krawtchouk(5, 2, 0, x) == 1);
    CHECK(krawtchouk(5, 2, 1, 0) == 15);  // (q^2-1) C(5,1)

    CHECK_THROWS_MATCHES(krawtchouk(5, 2, 6, 0), Error, Catch::Matchers::Predicate<Error>([](const Error& e) {
                             return e.code() == "OutOfRange";
                         }));

    // three-term recurrence in j, derived from the generating function
    // (1+(Q-1)z)^{n-x} (1-z)^x with Q = q^2
    for (std::uint64_t q : {2, 3}) {
        BigInt Q = BigInt(q) * q;
        for (unsigned n = 1; n <= 20; n += 3)
            for (unsigned x = 0; x <= n; ++x)
                for (unsigned j = 1; j < n; ++j) {
                    BigInt lhs = BigInt(j + 1) * krawtchouk(n, q, j + 1, x);
                    BigInt rhs = ((Q - 1) * (n - x) - x - (Q - 2) * j) * krawtchouk(n, q, j, x) -
                                 (Q - 1) * BigInt(n - j + 1) * krawtchouk(n, q, j - 1, x);
                    REQUIRE(lhs == rhs);
                }
    }

    // the identity behind the Singleton proof:
    // sum_x K_x(i) C(n-x, n-d+1) = C(n-i, d-1) q^{2(d-1)}
    for (std::uint64_t q : {2, 3}) {
        for (unsigned n = 2; n <= 8; ++n)
            for (unsigned d = 1; d <= n; ++d)
                for (unsigned i = 0; i <= n; ++i) {
                    BigInt lhs = 0;
                    for (unsigned x = 0; x <= n; ++x) lhs += krawtchouk(n, q, x, i) * binomial(n - x, n - d + 1);
                    BigInt rhs = binomial(n - i, d - 1) * ipow(BigInt(q) * q, d - 1);
                    REQUIRE(lhs == rhs);
                }
    }
}

TEST_CASE("macwilliams transform examples") {
    WeightEnumerator zero;
    zero.coeffs = {1, 0};
    auto full = macwilliams(zero, 1, 2, 1);
    CHECK(full.coeffs == std::vector<BigInt>{1, 3});

    WeightEnumerator fq;
    fq.coeffs = {1, 0, 0, 0, 15, 0};
    auto dual = macwilliams(fq, 5, 2, 16);
    CHECK(dual.coeffs == std::vector<BigInt>{1, 0, 0, 30, 15, 18});

    // round trip through the dual size
    auto back = macwilliams(dual, 5, 2, 64);
    CHECK(back.coeffs == fq.coeffs);

    WeightEnumerator bad;
    bad.coeffs = {1, 1, 0, 0, 0, 0};
    CHECK_THROWS_MATCHES(macwilliams(bad, 5, 2, 16), Error, Catch::Matchers::Predicate<Error>([](const Error& e) {
                             return e.code() == "InconsistentSize";
                         }));
    bad.coeffs = {1, 3, 0, 0, 0, 12};
    CHECK_THROWS_MATCHES(macwilliams(bad, 5, 2, 16), Error, Catch::Matchers::Predicate<Error>([](const Error& e) {
                             return e.code() == "NonIntegerResult";
                         }));
}

TEST_CASE("macwilliams equals exhaustive dual enumeration on random codes") {
    std::mt19937 rng(111);
    int done = 0;
    while (done < 100) {
        std::uint32_t pm[3][2] = {{2, 1}, {3, 1}, {2, 2}};
        auto [p, m] = pm[rng() % 3];
        auto F = FieldCtx::get(p, m);
        unsigned n = 2 + rng() % 5;  // n <= 6
        auto C = oracle::random_additive(rng, F, Flavor::Symplectic, n, 1 + rng() % (2 * n));
        auto A = weight_enumerator(C);
        auto Bref = weight_enumerator(C.dual(DualForm::Symplectic));
        auto B = macwilliams(A, n, F->q(), C.size());
        REQUIRE(B.coeffs == Bref.coeffs);
        ++done;
    }
}

TEST_CASE("singleton bound") {
    auto v1 = singleton_check(5, 1, 3, 2, 2, 1);
    CHECK(v1.satisfied);
    CHECK(v1.is_mds);
    CHECK(v1.slack == 0);

    auto v2 = singleton_check(7, 1, 5, 2, 2, 1);
    CHECK(!v2.satisfied);
    CHECK(v2.slack < 0);

    auto v3 = singleton_check(7, 1, 4, 2, 2, 1);
    CHECK(v3.satisfied);
    CHECK(v3.is_mds);  // bound passes with equality; existence is a separate question

    // [[6,0,4]]_2 counts as MDS through the K = 1 branch
    auto v4 = singleton_check(6, 0, 4, 2, 2, 1);
    CHECK(v4.satisfied);
    CHECK(v4.is_mds);
}

TEST_CASE("hamming bound, d = 3 form and pure form") {
    auto perfect = hamming_check_d3(5, 1, 2, 2);
    CHECK(perfect.satisfied);
    CHECK(perfect.slack == 0);  // 32/16 = 2 = K: perfect code

    CHECK(!hamming_check_d3(5, 2, 2, 2).satisfied);

    auto t = hamming_check_d3(10, 6, 3, 3);
    CHECK(t.satisfied);  // bound is K <= 3^10/81 = 729 = 3^6
    CHECK(t.slack == 0);

    CHECK(hamming_check_pure(5, 1, 3, 2, 2).satisfied);
    CHECK(!hamming_check_pure(5, 2, 3, 2, 2).satisfied);
}

TEST_CASE("gilbert-varshamov family") {
    CHECK(mds_gv_exists(7, 4, 7));
    CHECK(!mds_gv_exists(7, 4, 5));
    CHECK(mds_gv_exists(6, 3, 5));
    CHECK_THROWS_AS(mds_gv_exists(7, 1, 7), Error);

    // d = 1: empty sum, trivially satisfiable
    CHECK(gv_exists(5, 1, 1, 2, 2));
    CHECK(gv_linear_exists(5, 1, 2, 7));
    CHECK_THROWS_AS(gv_linear_exists(5, 2, 2, 7), Error);  // parity mismatch

    // the short-MDS test is a specialization of linear GV: whenever it
    // fires, the full inequality fires too
    for (unsigned n = 4; n <= 9; ++n)
        for (unsigned d = 2; d <= (n + 1) / 2; ++d)
            for (std::uint64_t q : {3, 5, 7, 9, 11})
                if (mds_gv_exists(n, d, q)) REQUIRE(gv_linear_exists(n, n - 2 * d + 2, d, q));
}

TEST_CASE("LP feasibility") {
    auto yes = lp_feasible(5, 1, 3, 2, 2);
    CHECK(yes.feasible);  // the five-qubit code is a witness

    auto no = lp_feasible(4, 1, 3, 2, 2);
    CHECK(!no.feasible);  // matches the Singleton impossibility of [[4,1,3]]_2

    CHECK(lp_feasible(6, 1, 1, 2, 2).feasible);  // d = 1 is trivial

    CHECK_THROWS_MATCHES(lp_feasible(41, 1, 3, 2, 2), Error, Catch::Matchers::Predicate<Error>([](const Error& e) {
                             return e.code() == "TooLarge";
                         }));

    // monotonicity: feasible at (n,K,d) implies feasible at (n,K,d-1)
    for (unsigned n = 4; n <= 6; ++n)
        for (unsigned ke = 1; ke <= 2; ++ke)
            for (unsigned d = 3; d <= 4; ++d)
                if (lp_feasible(n, ke, d, 2, 2).feasible) REQUIRE(lp_feasible(n, ke, d - 1, 2, 2).feasible);

    // the witness satisfies the constraints it claims to satisfy
    auto w = lp_feasible(5, 1, 3, 2, 2);
    REQUIRE(w.witness.size() == 6);
    BigRat total = 0;
    for (const auto& a : w.witness) {
        REQUIRE(a >= 0);
        total += a;
    }
    CHECK(total == BigRat(16));  // q^n/K = 32/2
}

TEST_CASE("carlitz-uchiyama bound") {
    auto b1 = carlitz_uchiyama(2, 4, 3);
    CHECK(!b1.trivial);
    CHECK(b1.value == BigRat(8));
    CHECK(b1.clamped == 8);

    auto b2 = carlitz_uchiyama(2, 4, 5);
    CHECK(b2.value == BigRat(4));

    auto b3 = carlitz_uchiyama(2, 4, 13);
    CHECK(b3.trivial);
    CHECK(b3.clamped == 0);

    CHECK_THROWS_AS(carlitz_uchiyama(2, 4, 4), Error);   // even design distance
    CHECK_THROWS_AS(carlitz_uchiyama(4, 2, 3), Error);   // p not prime

    // hand verification of one instance against the printed formula:
    // p=3, m=2, delta=3: bracket [delta-1 = 0 mod 3] = 0, factor = 1/2,
    // floor(2*3) = 6, value = (2/3)(9 - 3) = 4
    auto b4 = carlitz_uchiyama(3, 2, 3);
    CHECK(b4.value == BigRat(4));
}

TEST_CASE("MDS length constraints") {
    // q = 2: nontrivial MDS codes cannot exceed length 6
    CHECK(mds_constraints(5, 3, 2, false).satisfied);   // [[5,1,3]]
    CHECK(mds_constraints(6, 4, 2, false).satisfied);   // [[6,0,4]]
    CHECK(!mds_constraints(7, 4, 2, false).satisfied);
    CHECK(!mds_constraints(7, 3, 2, false).satisfied);

    // trivial d <= 2 passes at any length
    CHECK(mds_constraints(100, 2, 2, true).satisfied);

    // even-q exception under the conjecture: n = q^2+2 with d = 4 or q^2
    CHECK(mds_constraints(18, 4, 4, true).satisfied);
    CHECK(!mds_constraints(18, 5, 4, true).satisfied);
    CHECK(mds_constraints(11, 5, 3, false).satisfied);
    CHECK(!mds_constraints(11, 5, 3, true).satisfied);  // odd q: capped at q^2+1 = 10
    CHECK(mds_constraints(10, 5, 3, true).satisfied);
}

TEST_CASE("bounds never reject actual codes") {
    auto fq = quantum_hamming_hermitian(2, 2, DistanceMode::Exact);
    CHECK(singleton_check(fq.n, fq.k_exponent, fq.d_claimed, 2, 2, 1).satisfied);
    CHECK(hamming_check_d3(fq.n, fq.k_exponent, 2, 2).satisfied);
    CHECK(lp_feasible(fq.n, fq.k_exponent, fq.d_claimed, 2, 2).feasible);

    auto steane = quantum_hamming_euclidean(2, 3, DistanceMode::Exact);
    CHECK(singleton_check(steane.n, steane.k_exponent, steane.d_claimed, 2, 2, 1).satisfied);
    CHECK(lp_feasible(steane.n, steane.k_exponent, steane.d_claimed, 2, 2).feasible);
}
