#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <numeric>
#include <random>

#include "ekr/canonical.hpp"
#include "ekr/constructions.hpp"
#include "ekr/set_family.hpp"

using namespace ekr;

namespace {

SetFamily fam(int n, std::vector<std::vector<int>> lists) {
    return SetFamily::from_element_lists(n, lists);
}

// Deterministic random family generator for the property checks.
SetFamily random_family(std::mt19937& rng, int n, int k, int max_blocks) {
    std::vector<Mask> pool;
    for_each_subset_of_size(full_mask(n), k, [&](Mask m) { pool.push_back(m); });
    std::shuffle(pool.begin(), pool.end(), rng);
    const int count = 1 + static_cast<int>(rng() % static_cast<unsigned>(max_blocks));
    pool.resize(static_cast<std::size_t>(std::min<int>(count, static_cast<int>(pool.size()))));
    return SetFamily(n, std::move(pool));
}

std::vector<int> random_permutation(std::mt19937& rng, int n) {
    std::vector<int> image(static_cast<std::size_t>(n) + 1);
    std::iota(image.begin() + 1, image.end(), 1);
    std::shuffle(image.begin() + 1, image.end(), rng);
    return image;
}

}  // namespace

TEST_CASE("lex order on element sequences", "[family]") {
    auto ms = [](std::vector<int> v) { return ElementSet::from_elements(9, v).bits; };
    CHECK(lex_less(ms({1, 4}), ms({2, 3})));
    CHECK_FALSE(lex_less(ms({2, 3}), ms({1, 4})));
    CHECK(lex_less(ms({1, 2}), ms({1, 2, 3})));  // prefix first
    CHECK(lex_less(ms({1, 2, 3}), ms({2})));
    CHECK_FALSE(lex_less(ms({1, 2}), ms({1, 2})));
}

TEST_CASE("is_intersecting", "[family]") {
    CHECK(is_intersecting(make_star(5, 2, 1)));
    CHECK_FALSE(is_intersecting(fam(6, {{1, 2, 3}, {4, 5, 6}})));
    CHECK(is_intersecting(make_M_i(7, 3, 3)));
    CHECK(is_intersecting(fam(5, {})));           // vacuous
    CHECK(is_intersecting(fam(5, {{1, 2, 3}})));  // single block
}

TEST_CASE("is_uniform", "[family]") {
    CHECK(is_uniform(fam(4, {{1, 2}, {2, 3}}), 2));
    CHECK_FALSE(is_uniform(fam(4, {{1, 2}, {2, 3, 4}}), 2));
    CHECK(is_uniform(make_M_kj(9, 4, 2), 4));
}

TEST_CASE("shadow", "[family]") {
    CHECK(shadow(fam(3, {{1, 2, 3}}), 3) == fam(3, {{1, 2}, {1, 3}, {2, 3}}));
    CHECK(shadow(SetFamily(5, {}), 3).empty());
    CHECK(shadow(make_star(5, 3, 1), 3).size() == 10);  // all 2-subsets of [5]
    CHECK_THROWS_AS(shadow(fam(4, {{1, 2}, {2, 3, 4}}), 2), FamilyError);
}

TEST_CASE("max_degree", "[family]") {
    CHECK(max_degree(make_star(7, 3, 2)) == std::pair<int, int>{2, 15});
    CHECK(max_degree(fam(3, {{1, 2}, {1, 3}, {2, 3}})) == std::pair<int, int>{1, 2});
    const auto [elem, deg] = max_degree(make_M_i(9, 4, 4));
    CHECK(elem == 1);
    CHECK(BigInt(deg) == m_i_maxdeg(9, 4, 4));
    CHECK_THROWS_AS(max_degree(SetFamily(5, {})), FamilyError);
}

TEST_CASE("sunflower_core", "[family]") {
    auto core = sunflower_core(fam(6, {{1, 2, 3, 4}, {1, 2, 3, 5}, {1, 2, 3, 6}}));
    REQUIRE(core.has_value());
    CHECK(core->elements() == std::vector<int>{1, 2, 3});

    CHECK_FALSE(sunflower_core(fam(4, {{1, 2, 3}, {1, 2, 4}, {1, 3, 4}})).has_value());

    // Blocks of M_{4,2} on [9] avoiding element 1 form a sunflower with a
    // core of size k-1.
    const auto m42 = make_M_kj(9, 4, 2);
    std::vector<Mask> avoiding;
    for (Mask b : m42.blocks())
        if (!(b & element_bit(1))) avoiding.push_back(b);
    auto f0_core = sunflower_core(SetFamily(9, std::move(avoiding)));
    REQUIRE(f0_core.has_value());
    CHECK(f0_core->size() == 3);

    CHECK_THROWS_AS(sunflower_core(fam(4, {{1, 2}})), FamilyError);
}

TEST_CASE("is_star and is_maximal_intersecting", "[family]") {
    CHECK(is_star(make_star(7, 3, 1)));
    CHECK_FALSE(is_star(make_M_i(9, 4, 4)));
    CHECK(is_maximal_intersecting(make_star(7, 3, 1), 3));
    CHECK_THROWS_AS(is_maximal_intersecting(fam(6, {{1, 2, 3}, {4, 5, 6}}), 3), FamilyError);

    // Dropping a block from the star leaves it non-maximal; the dropped
    // block is an addable witness.
    auto blocks = make_star(7, 3, 1).blocks();
    const Mask dropped = blocks.back();
    blocks.pop_back();
    ElementSet witness;
    CHECK_FALSE(is_maximal_intersecting(SetFamily(7, std::move(blocks)), 3, &witness));
    CHECK(witness.bits == dropped);
}

TEST_CASE("canonical form and isomorphism", "[family]") {
    CHECK(is_isomorphic(make_star(7, 3, 1), make_star(7, 3, 5)));
    const auto m3 = make_M_i(7, 3, 3);
    const auto m4 = make_M_i(7, 3, 4);
    CHECK(m3.size() == m4.size());
    CHECK_FALSE(is_isomorphic(m3, m4));
    CHECK(is_subfamily_up_to_iso(fam(7, {{1, 2, 3}}), make_star(7, 3, 4)));

    CHECK_THROWS_AS(is_isomorphic(fam(5, {{1, 2}}), fam(6, {{1, 2}})), FamilyError);
    SECTION("ground sets above the limit are rejected loudly") {
        try {
            canonical_form(SetFamily(13, {element_bit(1)}));
            FAIL("expected a TooLarge error");
        } catch (const FamilyError& e) {
            CHECK(e.defect() == FamilyDefect::TooLarge);
        }
    }
}

TEST_CASE("subfamily embedding agrees with the structural M_kj test", "[family]") {
    const int n = 9, k = 4;
    for (int t = 1; t <= n - k; ++t) {
        const auto mkt = make_M_kj(n, k, t);
        for (int j = 1; j <= n - k; ++j) {
            const bool structural = embeds_in_mkj_copy(mkt, k, j);
            const bool generic = is_subfamily_up_to_iso(mkt, make_M_kj(n, k, j));
            INFO("t=" << t << " j=" << j);
            CHECK(structural == generic);
            // Equal tails embed; once t >= k the middle part is empty and
            // the family sits literally inside every longer-tail copy.
            CHECK(structural == (j == t || (t >= k && j >= t)));
        }
    }
}

TEST_CASE("family properties under random inputs", "[family]") {
    std::mt19937 rng(20240811);
    for (int trial = 0; trial < 60; ++trial) {
        const int n = 4 + static_cast<int>(rng() % 5);  // 4..8
        const int k = 2 + static_cast<int>(rng() % 3);  // 2..4
        if (k > n) continue;
        const auto f = random_family(rng, n, k, 10);
        const auto image = random_permutation(rng, n);
        const auto pf = apply_permutation(f, image);

        // Intersecting is a relabeling invariant.
        CHECK(is_intersecting(f) == is_intersecting(pf));

        // Degree sum identity for k-uniform families.
        const auto deg = degree_vector(f);
        CHECK(std::accumulate(deg.begin(), deg.end(), 0) == k * static_cast<int>(f.size()));

        // Shadow cardinality bound and monotonicity under subfamilies.
        const auto sh = shadow(f, k);
        CHECK(sh.size() <= f.size() * static_cast<std::size_t>(k));
        if (f.size() >= 2) {
            std::vector<Mask> half(f.blocks().begin(),
                                   f.blocks().begin() + static_cast<long>(f.size() / 2));
            const auto sub_shadow = shadow(SetFamily(n, std::move(half)), k);
            for (Mask m : sub_shadow.blocks()) CHECK(sh.contains_block(m));
        }

        // Canonical form: permutation-invariant and idempotent.
        if (n <= 8) {
            const auto cf = canonical_form(f);
            CHECK(canonical_form(pf) == cf);
            CHECK(canonical_form(cf) == cf);
        }

        // A sunflower core, when present, is the common intersection and
        // has size at most k-1 for distinct k-uniform blocks.
        if (f.size() >= 2) {
            if (auto core = sunflower_core(f)) {
                CHECK(core->bits == common_intersection(f));
                CHECK(core->size() <= k - 1);
            }
        }
    }
}
