#include <catch2/catch_amalgamated.hpp>

#include "ekr/constructions.hpp"
#include "ekr/set_family.hpp"

using namespace ekr;

TEST_CASE("binomial zero convention", "[constructions]") {
    CHECK(binomial(5, 2) == 10);
    CHECK(binomial(2, 3) == 0);
    CHECK(binomial(4, -1) == 0);
    CHECK(binomial(0, 0) == 1);
    CHECK(binomial(50, 25) == BigInt("126410606437752"));
}

TEST_CASE("binomial identities behind the level bounds", "[constructions]") {
    for (int k = 3; k <= 8; ++k) {
        for (int n = 2 * k + 1; n <= 2 * k + 6; ++n) {
            BigInt tail = 0;
            for (int j = 1; j <= k; ++j) tail += binomial(n - k - j, k - j);
            CHECK(tail == binomial(n - k, k - 1));

            BigInt split = binomial(n - k, k - 1);
            for (int j = 1; j <= k - 1; ++j) split += binomial(n - j - 1, k - 2);
            CHECK(split == binomial(n - 1, k - 1));
        }
    }
}

TEST_CASE("M_kj boundary identities", "[constructions]") {
    for (int k = 3; k <= 5; ++k) {
        for (int n : {2 * k + 1, 2 * k + 3}) {
            CHECK(make_M_kj(n, k, n - k) == make_M_i(n, k, k));
            CHECK(make_M_kj(n, k, 1) == make_M_i(n, k, k + 1));
        }
    }
}

TEST_CASE("closed-form sizes against explicit constructions", "[constructions]") {
    CHECK(m_i_size(7, 3, 3) == 13);
    CHECK(make_M_i(7, 3, 3).size() == 13);
    for (int k = 3; k <= 5; ++k) {
        const int n = 2 * k + 1;
        for (int i = 3; i <= k + 1; ++i) {
            const auto fam = make_M_i(n, k, i);
            CHECK(BigInt(static_cast<long long>(fam.size())) == m_i_size(n, k, i));
            const auto [elem, deg] = max_degree(fam);
            CHECK(elem == 1);
            CHECK(BigInt(deg) == m_i_maxdeg(n, k, i));
        }
    }
    CHECK(m_i_size(9, 4, 3) == m_i_size(9, 4, 4));
    CHECK(m_i_maxdeg(7, 3, 4) == 12);
    CHECK_THROWS_AS(m_i_size(7, 3, 2), std::domain_error);
    CHECK_THROWS_AS(make_M_i(7, 3, 5), std::domain_error);
    CHECK_THROWS_AS(make_M_kj(7, 3, 0), std::domain_error);
    CHECK_THROWS_AS(make_M_kj(7, 3, 5), std::domain_error);
}

TEST_CASE("constructed families are intersecting and uniform", "[constructions]") {
    for (int k = 3; k <= 5; ++k) {
        const int n = 2 * k + 1;
        for (int i = 3; i <= k + 1; ++i) {
            CHECK(is_intersecting(make_M_i(n, k, i)));
            CHECK(is_uniform(make_M_i(n, k, i), k));
        }
        for (int j = 1; j <= n - k; ++j) {
            CHECK(is_intersecting(make_M_kj(n, k, j)));
            CHECK(is_uniform(make_M_kj(n, k, j), k));
        }
        CHECK(is_intersecting(make_star(n, k, 1)));
        CHECK(is_intersecting(make_K2_default(n, k)));
        CHECK(is_uniform(make_K2_default(n, k), k));
    }
}

TEST_CASE("K2 structure", "[constructions]") {
    const int n = 9, k = 4;
    const ElementSet e1 = ElementSet::from_elements(n, {1, 2, 3, 4});
    const ElementSet e2 = ElementSet::from_elements(n, {1, 2, 5, 6});
    const int x0 = 7;
    const auto fam = make_K2(n, k, e1, e2, x0);
    CHECK(fam.contains_block(e1.bits));
    CHECK(fam.contains_block(e2.bits));
    for (Mask b : fam.blocks()) {
        if (b == e1.bits || b == e2.bits) continue;
        CHECK((b & element_bit(x0)) != 0);
        CHECK((b & e1.bits) != 0);
        CHECK((b & e2.bits) != 0);
    }
    CHECK_THROWS_AS(make_K2(n, k, e1, ElementSet::from_elements(n, {1, 5, 6, 8}), 7),
                    std::domain_error);  // |E1 & E2| != k-2
    CHECK_THROWS_AS(make_K2(n, k, e1, e2, 4), std::domain_error);  // x0 inside E1
}

TEST_CASE("theorem_bound values", "[constructions]") {
    CHECK(theorem_bound(0, 7, 3).value == 15);
    CHECK(theorem_bound(1, 7, 3).value == 13);
    CHECK(theorem_bound(1, 7, 3).value == m_i_size(7, 3, 4));
    CHECK(theorem_bound(2, 7, 3).value == 12);  // 2n-2 at (7,3)
    CHECK(theorem_bound(2, 9, 4).value == 51);
    CHECK(theorem_bound(3, 9, 4).value == 50);
    CHECK(theorem_bound(3, 9, 4).formula_id == "level3_tight");
    CHECK(theorem_bound(3, 10, 4).value == 68);
    CHECK(theorem_bound(3, 10, 4).formula_id == "level3_wide");
    CHECK(theorem_bound(1, 9, 4).value == 53);
    CHECK(theorem_bound(2, 11, 5).value == 203);

    // Level >= 4 requires the regime; n = 19 is the smallest for k = 6.
    CHECK(smallest_level_t_regime_n(6) == 19);
    CHECK_THROWS_AS(theorem_bound(4, 18, 6), std::domain_error);
    CHECK(theorem_bound(4, 19, 6).value ==
          binomial(18, 5) - binomial(12, 5) - binomial(11, 4) - binomial(10, 3) -
              binomial(9, 2) + 4);
    CHECK_THROWS_AS(theorem_bound(4, 19, 5), std::domain_error);  // k < t+2
}

TEST_CASE("level-1 and level-2 bounds match the equality families", "[constructions]") {
    for (auto [n, k] : {std::pair{7, 3}, std::pair{9, 4}, std::pair{11, 5}}) {
        CHECK(BigInt(static_cast<long long>(make_M_kj(n, k, 1).size())) ==
              theorem_bound(1, n, k).value);
        CHECK(BigInt(static_cast<long long>(make_M_kj(n, k, 2).size())) ==
              theorem_bound(2, n, k).value);
    }
}

TEST_CASE("g, f, h arithmetic", "[constructions]") {
    CHECK(g_func(1, 7, 3) == 3);
    CHECK(g_func(2, 7, 3) == 5);
    CHECK(g_func(3, 7, 3) == 6);
    CHECK(g_func(4, 7, 3) == 6);
    CHECK(h_func(2, 7, 3) == f_func(4, 7, 3));
    CHECK(h_func(2, 7, 3) == 2);
    CHECK(h_func(2, 11, 5) == f_func(2, 11, 5));
    CHECK(h_func(2, 11, 5) == 7);
    CHECK(theorem_bound(2, 11, 5).value == binomial(10, 4) - 7);
    CHECK_THROWS_AS(g_func(0, 7, 3), std::domain_error);
    CHECK_THROWS_AS(g_func(5, 7, 3), std::domain_error);

    // f rises to its plateau at k and falls afterwards.
    for (int k = 3; k <= 7; ++k) {
        for (int n = 2 * k + 1; n <= 2 * k + 8; ++n) {
            for (int x = 1; x < n - k; ++x) {
                if (x + 1 <= k)
                    CHECK(f_func(x, n, k) <= f_func(x + 1, n, k));
                else
                    CHECK(f_func(x, n, k) >= f_func(x + 1, n, k));
            }
        }
    }
}

TEST_CASE("trichotomy of the f minimum", "[constructions]") {
    auto rep1 = claim35_trichotomy(2, 11, 5);
    CHECK(rep1.passed);
    CHECK(rep1.notes.front().find("k >= t+3") != std::string::npos);

    auto rep2 = claim35_trichotomy(2, 9, 4);
    CHECK(rep2.passed);
    CHECK(rep2.notes.front().find("k = t+2") != std::string::npos);
    CHECK(f_func(2, 9, 4) == f_func(5, 9, 4));

    auto rep3 = claim35_trichotomy(2, 7, 3);
    CHECK(rep3.passed);
    CHECK(rep3.notes.front().find("k <= t+1") != std::string::npos);
    CHECK(h_func(2, 7, 3) == f_func(4, 7, 3));
}

TEST_CASE("level-t gap slack", "[constructions]") {
    CHECK(claim41_gap(19, 6, 4) > 0);
    // Out of regime the sign is whatever the arithmetic says; just evaluate.
    CHECK(claim41_gap(14, 6, 4) == binomial(5, 4) - 2 - (binomial(6, 3) - 4));
    CHECK(claim41_gap(14, 6, 4) < 0);
    for (int k = 6; k <= 12; ++k) {
        for (int t = 4; t <= k - 2; ++t) {
            const int n = smallest_level_t_regime_n(k);
            INFO("k=" << k << " t=" << t << " n=" << n);
            CHECK(claim41_gap(n, k, t) > 0);
        }
    }
    CHECK_THROWS_AS(claim41_gap(19, 6, 3), std::domain_error);
}
