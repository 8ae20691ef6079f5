#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "splitbound/braid.hpp"
#include "splitbound/families.hpp"
#include "splitbound/linking.hpp"

#include <random>

using namespace splitbound;

TEST_SUITE_BEGIN("linking");

TEST_CASE("matrix invariants") {
    LinkDiagram borr = borromean_rings();
    LinkingMatrix lk = linking_matrix(borr);
    for (int i = 0; i < 3; ++i) {
        CHECK(lk(i, i) == 0);
        for (int j = 0; j < 3; ++j) CHECK(lk(i, j) == lk(j, i));
    }
    CHECK(total_linking(lk) == 0);
    CHECK(splitting_parity(lk) == 0);
}

TEST_CASE("sublink restriction is the principal submatrix") {
    std::mt19937 rng(555);
    std::uniform_int_distribution<int> len(2, 12), sg(0, 1);
    int done = 0;
    while (done < 40) {
        BraidWord b{4, {}};
        std::uniform_int_distribution<int> gen(1, 3);
        int L = len(rng);
        for (int i = 0; i < L; ++i) b.word.push_back(gen(rng) * (sg(rng) ? 1 : -1));
        LinkDiagram d = braid_closure(b);
        if (d.component_count() < 3 || d.free_loop_count() > 0) continue;
        ++done;
        LinkingMatrix lk = linking_matrix(d);
        std::vector<int> keep{0, d.component_count() - 1};
        LinkDiagram sub = sublink(d, keep);
        LinkingMatrix sk = linking_matrix(sub);
        CHECK(sk(0, 1) == lk(keep[0], keep[1]));
    }
}

TEST_CASE("inter-component crossing sums are even") {
    std::mt19937 rng(77);
    std::uniform_int_distribution<int> ks(2, 5), len(0, 14), sg(0, 1);
    for (int iter = 0; iter < 60; ++iter) {
        BraidWord b{ks(rng), {}};
        std::uniform_int_distribution<int> gen(1, b.strands - 1);
        int L = len(rng);
        for (int i = 0; i < L; ++i) b.word.push_back(gen(rng) * (sg(rng) ? 1 : -1));
        // linking_matrix throws on odd sums; not throwing is the property.
        CHECK_NOTHROW(linking_matrix(braid_closure(b)));
    }
}

TEST_CASE("worked values") {
    CHECK(total_linking(linking_matrix(positive_hopf())) == 1);
    CHECK(splitting_parity(linking_matrix(positive_hopf())) == 1);
    AxisLink wh = whitehead_axis();
    CHECK(total_linking(linking_matrix(wh.diagram)) == 0);
    LinkDiagram t6 = braid_closure({2, {1, 1, 1, 1, 1, 1}});
    CHECK(total_linking(linking_matrix(t6)) == 3);
}

TEST_SUITE_END();
