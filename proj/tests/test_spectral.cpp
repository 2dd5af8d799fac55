#include "oracles.hpp"

#include "twomain/errors.hpp"
#include "twomain/spectral.hpp"

#include <doctest.h>

#include <random>
#include <stdexcept>

using namespace twomain;

TEST_CASE("walk rank matches rational elimination on random multigraphs") {
    std::mt19937_64 rng(1);
    for (int trial = 0; trial < 400; ++trial) {
        const Multigraph m = oracle::random_connected(rng, 1 + trial % 10);
        CHECK(walk_rank(m) == oracle::krylov_rank(m));
    }
}

TEST_CASE("walk rank on disconnected and signed inputs") {
    // K2 plus an isolated vertex: degrees 1,1,0 -> two main eigenvalues (1 and 0).
    const std::vector<Edge> es{{0, 1, 1}};
    CHECK(walk_rank(Multigraph(3, es)) == 2);
    const std::vector<Edge> sg{{0, 1, -1}, {1, 2, 1}};
    const SignedGraph s(3, sg);
    CHECK(walk_rank(s) == oracle::krylov_rank(s.adjacency()));
}

TEST_CASE("regular graphs have one main eigenvalue and no certificate") {
    const Multigraph c5 = oracle::cycle({1, 1, 1, 1, 1});
    CHECK(walk_rank(c5) == 1);
    const ABSolution ab = solve_ab(c5);
    CHECK(ab.status == CertificateStatus::j_eigenvector);
    CHECK_FALSE(ab.certificate.has_value());
}

TEST_CASE("certificate matches brute-force integer search") {
    std::mt19937_64 rng(2);
    int valid = 0;
    for (int trial = 0; trial < 400; ++trial) {
        const Multigraph m = oracle::random_connected(rng, 2 + trial % 7);
        const ABSolution ab = solve_ab(m);
        const auto found = oracle::search_ab(m);
        if (ab.status == CertificateStatus::j_eigenvector) continue;
        if (ab.valid()) {
            ++valid;
            REQUIRE(found.has_value());
            CHECK(ab.certificate->a == found->first);
            CHECK(ab.certificate->b == found->second);
            for (long long r : ab.certificate->residuals) CHECK(r == 0);
        } else {
            CHECK_FALSE(found.has_value());
        }
        // Two main eigenvalues iff a valid certificate exists.
        CHECK((walk_rank(m) == 2) == ab.valid());
    }
    CHECK(valid > 0);
}

TEST_CASE("certificate statuses on hand-built graphs") {
    // Triangle 2-1-1: U2 with t = 1 -> (2,2).
    const ABSolution u2 = solve_ab(oracle::cycle({2, 1, 1}));
    REQUIRE(u2.valid());
    CHECK(u2.certificate->a == 2);
    CHECK(u2.certificate->b == 2);
    // Star K1,3: centre d=3, leaves d=1, every s(v)=3 -> a=0, b=3.
    const std::vector<Edge> star{{0, 1, 1}, {0, 2, 1}, {0, 3, 1}};
    const ABSolution st = solve_ab(Multigraph(4, star));
    REQUIRE(st.valid());
    CHECK(st.certificate->a == 0);
    CHECK(st.certificate->b == 3);
    // Path on 5 vertices has three main eigenvalues: pair system inconsistent.
    const std::vector<Edge> p5{{0, 1, 1}, {1, 2, 1}, {2, 3, 1}, {3, 4, 1}};
    CHECK(walk_rank(Multigraph(5, p5)) == 3);
    CHECK(solve_ab(Multigraph(5, p5)).status == CertificateStatus::inconsistent);
    CHECK_THROWS_AS(solve_ab(Multigraph(1, {})), OrderTooSmall);
}

TEST_CASE("float cross-check agrees on small structured graphs") {
    const SpectralReport r = main_eigenvalues_float(oracle::cycle({2, 1, 1}));
    CHECK(r.main_count_float == 2);
    CHECK(r.main_count_exact == 2);
    CHECK_FALSE(r.disagree());
    CHECK(r.eigenvalues.size() == 3);
    CHECK(r.main_eigenvalues().size() == 2);
    const SpectralReport c = main_eigenvalues_float(oracle::cycle({1, 1, 1, 1, 1, 1}));
    CHECK(c.main_count_float == 1);
    CHECK(c.main_eigenvalues().front() == doctest::Approx(2.0));
    CHECK_THROWS_AS(main_eigenvalues_float(oracle::cycle({1, 1, 1}), 0.0), std::invalid_argument);
}

TEST_CASE("float count equals exact rank on cycle weightings") {
    for (int n = 3; n <= 9; ++n)
        for (int mask = 0; mask < (1 << n); ++mask) {
            std::vector<int> w(n);
            for (int i = 0; i < n; ++i) w[i] = (mask >> i & 1) ? 2 : 1;
            const SpectralReport r = main_eigenvalues_float(oracle::cycle(w));
            CHECK(r.main_count_float == r.main_count_exact);
        }
}

TEST_CASE("two_main_check is consistent") {
    const TwoMainEvidence e = two_main_check(oracle::cycle({2, 2, 1}));
    CHECK(e.two_main);
    CHECK(e.walk_rank == 2);
    CHECK_FALSE(e.disagree);
}
