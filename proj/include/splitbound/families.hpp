#pragma once

#include "splitbound/diagram.hpp"
#include "splitbound/tangle.hpp"

#include <vector>

namespace splitbound {

// Rational (2-bridge) link of the fraction p/q, 0 < q < p coprime, as an
// alternating 4-plat. p odd gives a knot, p even a 2-component link;
// the determinant is p.
LinkDiagram rational_link(long p, long q);

// Continued-fraction form [a1, a2, ..., am], all positive:
// p/q = a_m + 1/(a_{m-1} + 1/(...)).
LinkDiagram rational_link(const std::vector<int>& twists);

// Numerator of the continued fraction (the link determinant up to sign).
long rational_fraction_numerator(const std::vector<int>& twists);

// Twist knot: k half twists plus a clasp. twist_knot(1) is a trefoil,
// twist_knot(2) the figure eight.
LinkDiagram twist_knot(int half_twists, int clasp_sign = 1);

LinkDiagram positive_hopf();
LinkDiagram trefoil();
LinkDiagram borromean_rings();
// Whitehead link with the branch-ready axis form; axis is returned last.
AxisLink whitehead_axis();

// The knot 7_5 (two-bridge, det 17, |signature| 4).
LinkDiagram seven_five();

}  // namespace splitbound
