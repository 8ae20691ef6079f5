#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "splitbound/alexander.hpp"
#include "splitbound/braid.hpp"
#include "splitbound/linking.hpp"
#include "splitbound/tangle.hpp"

#include <random>

using namespace splitbound;

namespace {

LaurentPoly P1(const std::string& s) { return LaurentPoly::parse(s, 1); }
LaurentPoly P2(const std::string& s) { return LaurentPoly::parse(s, 2); }

BraidWord random_braid(std::mt19937& rng, int max_strands, int max_len) {
    std::uniform_int_distribution<int> ks(2, max_strands);
    BraidWord b;
    b.strands = ks(rng);
    std::uniform_int_distribution<int> len(0, max_len);
    std::uniform_int_distribution<int> gen(1, b.strands - 1);
    std::uniform_int_distribution<int> sg(0, 1);
    int L = len(rng);
    for (int i = 0; i < L; ++i) b.word.push_back(gen(rng) * (sg(rng) ? 1 : -1));
    return b;
}

}  // namespace

TEST_SUITE_BEGIN("braid and tangle");

TEST_CASE("braid parsing") {
    BraidWord b = parse_braid("BR[3; 1,1,-2,1]");
    CHECK(b.strands == 3);
    CHECK(b.word == std::vector<int>{1, 1, -2, 1});
    CHECK(parse_braid(render_braid(b)).word == b.word);
    CHECK(parse_braid("BR[4;]").word.empty());
    CHECK_THROWS_AS(parse_braid("BR[2; 2]"), ParseError);
    CHECK_THROWS_AS(parse_braid("BR[2; 0]"), ParseError);
}

TEST_CASE("braid closures: hopf, trefoil, unlink") {
    LinkDiagram hopf = braid_closure(parse_braid("BR[2; 1,1]"));
    CHECK(hopf.crossing_count() == 2);
    CHECK(hopf.component_count() == 2);
    LinkingMatrix lk = linking_matrix(hopf);
    CHECK(std::abs(lk(0, 1)) == 1);
    CHECK(unit_equal(alexander_polynomial(hopf), P2("1")));

    LinkDiagram tre = braid_closure(parse_braid("BR[2; 1,1,1]"));
    CHECK(tre.component_count() == 1);
    CHECK(unit_equal(alexander_polynomial(tre), P1("1-t+t^2")));

    LinkDiagram unlink = braid_closure(parse_braid("BR[3;]"));
    CHECK(unlink.component_count() == 3);
    CHECK(unlink.free_loop_count() == 3);
    CHECK(alexander_polynomial(unlink).is_zero());
}

TEST_CASE("braid permutation and closure components agree") {
    std::mt19937 rng(2718);
    for (int iter = 0; iter < 100; ++iter) {
        BraidWord b = random_braid(rng, 4, 10);
        CHECK(braid_closure(b).component_count() == cycle_count(braid_permutation(b)));
    }
}

TEST_CASE("borromean rings from a braid") {
    // Closure of (s1 s2^-1)^3.
    LinkDiagram borr = braid_closure(parse_braid("BR[3; 1,-2,1,-2,1,-2]"));
    CHECK(borr.component_count() == 3);
    LinkingMatrix lk = linking_matrix(borr);
    CHECK(total_linking(lk) == 0);
    LaurentPoly delta = alexander_polynomial(borr);
    CHECK_FALSE(delta.is_zero());
    LaurentPoly expected =
        LaurentPoly::parse("s-1", 3) * LaurentPoly::parse("t-1", 3) * LaurentPoly::parse("u-1", 3);
    CHECK(unit_equal(delta, expected));
}

TEST_CASE("tangle text round trip and validation") {
    MorseTangle t = parse_tangle("MT[2; 1,1,A1,U1]");
    CHECK(t.width == 2);
    CHECK(t.events.size() == 4);
    CHECK(parse_tangle(render_tangle(t)).events.size() == 4);
    CHECK_THROWS_AS(parse_tangle("MT[2; A1,A1]"), ParseError);
    CHECK_THROWS_AS(parse_tangle("MT[2; 3]"), ParseError);
    CHECK_THROWS_AS(parse_tangle("MT[1; U1]"), ParseError);
}

TEST_CASE("cup-cap unknot and pass-through") {
    LinkDiagram u = tangle_closure(parse_tangle("MT[0; U1,A1]"));
    CHECK(u.component_count() == 1);
    CHECK(u.crossing_count() == 0);

    // A cup/cap pair threaded through the closure is still one unknot.
    LinkDiagram v = tangle_closure(parse_tangle("MT[2; A1,U1]"));
    CHECK(v.component_count() == 1);
    CHECK(v.crossing_count() == 0);
}

TEST_CASE("whitehead link as an axis link") {
    // Clasp the up- and down-going halves of a winding-zero unknot.
    AxisLink ax = tangle_closure_with_axis(parse_tangle("MT[2; U1,2,2,A3]"));
    const LinkDiagram& d = ax.diagram;
    CHECK(d.component_count() == 2);
    LinkingMatrix lk = linking_matrix(d);
    CHECK(lk(0, 1) == 0);
    LaurentPoly delta = alexander_polynomial(d);
    CHECK(unit_equal(delta, P2("s-1") * P2("t-1")));

    // A cancelling clasp unlinks by a Reidemeister II move.
    AxisLink triv = tangle_closure_with_axis(parse_tangle("MT[2; U1,2,-2,A3]"));
    CHECK(alexander_polynomial(triv.diagram).is_zero());
}

TEST_CASE("axis winding equals strand count for braids") {
    AxisLink ax = tangle_closure_with_axis(MorseTangle::braid(2, {1, 1}));
    const LinkDiagram& d = ax.diagram;
    CHECK(d.component_count() == 3);
    LinkingMatrix lk = linking_matrix(d);
    int axis = ax.axis_component;
    for (int c = 0; c < 3; ++c)
        if (c != axis) CHECK(std::abs(lk(axis, c)) == 1);

    AxisLink ax3 = tangle_closure_with_axis(MorseTangle::braid(3, {1, 1, 2}));
    // closure(s1 s1 s2) has components of 1 and 2 strands.
    const LinkingMatrix lk3 = linking_matrix(ax3.diagram);
    int a = ax3.axis_component;
    std::vector<int> windings;
    for (int c = 0; c < ax3.diagram.component_count(); ++c)
        if (c != a) windings.push_back(std::abs(lk3(a, c)));
    std::sort(windings.begin(), windings.end());
    CHECK(windings == std::vector<int>{1, 2});
}

TEST_SUITE_END();
