#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "splitbound/alexander.hpp"
#include "splitbound/covering.hpp"
#include "splitbound/families.hpp"
#include "splitbound/linking.hpp"
#include "splitbound/obstructive.hpp"
#include "splitbound/seifert.hpp"

#include <random>

using namespace splitbound;

TEST_SUITE_BEGIN("covering");

TEST_CASE("hopf cover is the (2,4) torus link") {
    AxisPresentation p = AxisPresentation::from_braid({2, {1, 1}});
    LinkDiagram cover = double_cover_along_axis(p);
    CHECK(cover.component_count() == 2);
    LinkingMatrix lk = linking_matrix(cover);
    CHECK(std::abs(lk(0, 1)) == 2);
    CHECK(unit_equal(alexander_polynomial(cover), LaurentPoly::parse("st+1", 2)));
}

TEST_CASE("empty braid cover splits") {
    // Each crossing-free strand winds once around the axis, so its preimage
    // is connected: the squared identity permutation has 3 cycles.
    AxisPresentation p = AxisPresentation::from_braid({3, {}});
    LinkDiagram cover = double_cover_along_axis(p);
    CHECK(cover.component_count() == 3);
    CHECK(alexander_polynomial(cover).is_zero());
}

TEST_CASE("unknot with odd winding covers to one component") {
    AxisPresentation p = AxisPresentation::from_braid({2, {1}});
    LinkDiagram cover = double_cover_along_axis(p);
    // closure(s1^2) is the Hopf link: two components from the squared
    // 2-cycle permutation.
    CHECK(cover.component_count() == 2);
    LinkingMatrix lk = linking_matrix(cover);
    CHECK(std::abs(lk(0, 1)) == 1);
}

TEST_CASE("cover components equal squared-permutation cycles") {
    std::mt19937 rng(1234);
    std::uniform_int_distribution<int> ks(2, 4), len(0, 10), sg(0, 1);
    for (int iter = 0; iter < 100; ++iter) {
        BraidWord b{ks(rng), {}};
        std::uniform_int_distribution<int> gen(1, b.strands - 1);
        int L = len(rng);
        for (int i = 0; i < L; ++i) b.word.push_back(gen(rng) * (sg(rng) ? 1 : -1));
        auto perm = braid_permutation(b);
        std::vector<int> sq(perm.size());
        for (std::size_t q = 0; q < perm.size(); ++q) sq[q] = perm[perm[q]];
        LinkDiagram cover = double_cover_along_axis(AxisPresentation::from_braid(b));
        CHECK(cover.component_count() == cycle_count(sq));
    }
}

TEST_CASE("euler budgets") {
    for (int k = 0; k <= 3; ++k)
        CHECK(euler_char_budget(2, {2 * k + 1, 0, {0}}) == 1 - 2 * k);
    CHECK(euler_char_budget(3, {2, 1, {0, 0}}) == -2);
    CHECK(euler_char_budget(2, {2, 0, {0}}) == 0);
    CHECK_THROWS(euler_char_budget(1, {0, 0, {}}));

    CHECK(budget_forces_connected(3, 0, {{1, 2}, {0, 1}}));
    CHECK_FALSE(budget_forces_connected(3, 0, {{1, 2}}));
}

TEST_CASE("theorem 1.1 style obstruction") {
    LinkDiagram seven5 = seven_five();
    CHECK(std::abs(signature(seven5)) == 4);
    CHECK(theorem11_obstruction(seven5, 1) == CoverVerdict::Obstructed);
    CHECK(theorem11_obstruction(seven5, 2) == CoverVerdict::Consistent);
    CHECK(theorem11_obstruction(trefoil(), 1) == CoverVerdict::Consistent);
    CHECK(theorem11_obstruction(parse_pd("PD[]"), 0) == CoverVerdict::Consistent);
}

TEST_CASE("twist knot cover of the odd-winding type") {
    // The covering knot used for the 9-crossing example with unknotted
    // components: 7 half twists, determinant 29, algebraically slice.
    LinkDiagram tw = twist_knot(7, +1);
    CHECK(signature(tw) == 0);
    CHECK(unit_equal(alexander_polynomial(tw), LaurentPoly::parse("7t^2-15t+7", 1)));
    // The signature route alone cannot obstruct slice genus 0 here.
    CHECK(theorem11_obstruction(tw, 0) == CoverVerdict::Consistent);
}

TEST_CASE("sp_i bound via the cover's splitting bound") {
    // Cover of the Hopf axis presentation: T(2,4) has a = 2, so sp_i >= 1.
    LinkDiagram cover = double_cover_along_axis(AxisPresentation::from_braid({2, {1, 1}}));
    CHECK(sp_i_bound(cover) == 1);
}

TEST_CASE("weak slice obstructions") {
    LinkDiagram t24 = braid_closure({2, {1, 1, 1, 1}});
    CHECK(weak_slice_obstruction(t24) == WeakSlice::Obstructed);

    LinkDiagram unlink = split_union(parse_pd("PD[]"), parse_pd("PD[]"));
    CHECK(weak_slice_obstruction(unlink) == WeakSlice::Unknown);

    // The whitehead link's own cover must be weakly slice consistent
    // (its splitting number is two).
    AxisPresentation wh{parse_tangle("MT[2; U1,2,2,A3]")};
    LinkDiagram cover = double_cover_along_axis(wh);
    REQUIRE(cover.component_count() == 2);
    CHECK(weak_slice_obstruction(cover) == WeakSlice::Unknown);

    CHECK(weak_slice_band_sum_obstruction(seven_five()) == WeakSlice::Obstructed);
    CHECK(weak_slice_band_sum_obstruction(trefoil()) == WeakSlice::Unknown);
}

TEST_SUITE_END();
