#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "splitbound/families.hpp"
#include "splitbound/braid.hpp"
#include "splitbound/obstructive.hpp"

using namespace splitbound;

TEST_SUITE_BEGIN("obstructive");

TEST_CASE("nonsplit certificates") {
    CHECK(nonsplit_certificate(positive_hopf()).nonsplit);
    CHECK(nonsplit_certificate(positive_hopf()).reason == "linking");

    AxisLink wh = whitehead_axis();
    NonSplitCertificate w = nonsplit_certificate(wh.diagram);
    CHECK(w.nonsplit);
    CHECK(w.reason == "alexander");

    LinkDiagram unlink = split_union(parse_pd("PD[]"), parse_pd("PD[]"));
    CHECK_FALSE(nonsplit_certificate(unlink).nonsplit);

    CHECK(nonsplit_certificate(borromean_rings()).nonsplit);
    CHECK_THROWS(nonsplit_certificate(trefoil()));
}

TEST_CASE("c invariant anchors") {
    CHECK(c_invariant(positive_hopf()).c == 0);

    CInvariant wh = c_invariant(whitehead_axis().diagram);
    CHECK(wh.c == 1);
    CHECK(wh.full_link_obstructive);

    CInvariant borr = c_invariant(borromean_rings());
    CHECK(borr.c == 1);

    LinkDiagram two_borr = split_union(borromean_rings(), borromean_rings());
    CInvariant c2 = c_invariant(two_borr);
    CHECK(c2.c == 2);
    CHECK(verify_collection(two_borr, c2.witness));
    CHECK_FALSE(c2.full_link_obstructive);

    LinkDiagram unlink = split_union(parse_pd("PD[]"), parse_pd("PD[]"));
    CHECK(c_invariant(unlink).c == 0);
}

TEST_CASE("witness verification is independent") {
    LinkDiagram two_borr = split_union(borromean_rings(), borromean_rings());
    ObstructiveCollection bogus;
    bogus.members = {{0, 1}, {1, 2}};  // pairs inside one borromean are unlinks
    CHECK_FALSE(verify_collection(two_borr, bogus));

    ObstructiveCollection overlap;
    overlap.members = {{0, 1, 2}, {1, 2, 3}};  // two shared components
    CHECK_FALSE(verify_collection(two_borr, overlap));

    ObstructiveCollection good;
    good.members = {{0, 1, 2}, {3, 4, 5}};
    CHECK(verify_collection(two_borr, good));
}

TEST_CASE("lemma lower bound") {
    LemmaBound hopf = lemma_lower_bound(positive_hopf());
    CHECK(hopf.a == 1);
    CHECK(hopf.c == 0);
    CHECK(hopf.bound == 1);
    CHECK(hopf.parity == 1);

    LemmaBound two_borr = lemma_lower_bound(split_union(borromean_rings(), borromean_rings()));
    CHECK(two_borr.bound == 4);
    CHECK(two_borr.parity == 0);

    LemmaBound wh = lemma_lower_bound(whitehead_axis().diagram);
    CHECK(wh.a == 0);
    CHECK(wh.bound == 2);
    CHECK(wh.self_only_bound == 2);

    LemmaBound t24 = lemma_lower_bound(braid_closure(parse_braid("BR[2; 1,1,1,1]")));
    CHECK(t24.a == 2);
    CHECK(t24.bound == 2);
    CHECK(t24.parity == 0);
}

TEST_SUITE_END();
