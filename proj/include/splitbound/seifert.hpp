#pragma once

#include "splitbound/diagram.hpp"
#include "splitbound/laurent.hpp"

#include <vector>

namespace splitbound {

// Seifert's algorithm on an oriented diagram: discs from the oriented
// smoothing, one twisted band per crossing, H1 basis from the cycle space of
// the Seifert graph. Disconnected diagrams give direct sums.
struct SeifertData {
    std::vector<std::vector<Int>> matrix;  // A_ij = lk(a_i, a_j^+)
    int circles = 0;                       // Seifert circles incl. free loops
    int crossings = 0;
    int surface_components = 0;  // b_0(F)
    int euler = 0;               // chi(F) = circles - crossings
    int betti() const { return static_cast<int>(matrix.size()); }
};

SeifertData seifert_matrix(const LinkDiagram& d);

// Inertia of an integer symmetric matrix, computed exactly twice over
// (congruence diagonalization and Descartes on the characteristic
// polynomial); disagreement is a hard error.
struct Inertia {
    int positive = 0, negative = 0, zero = 0;
    int signature() const { return positive - negative; }
};

Inertia symmetric_inertia(const std::vector<std::vector<Int>>& sym);

// sign(A + A^T).
int signature(const LinkDiagram& d);
int signature(const SeifertData& s);

// Nullity of A + A^T (reported, unused by the bounds).
int nullity(const SeifertData& s);

// g4(K) >= ceil(|sigma|/2) for knots.
int slice_genus_lower_bound(const LinkDiagram& knot);

enum class Murasugi { Obstructed, Consistent };

// |sigma(J)| <= 2 g(F) + m - b0(F) for a smooth surface F in the 4-ball.
Murasugi murasugi_obstruction(int sigma, int genus, int surface_b0, int link_components);
Murasugi murasugi_obstruction(const LinkDiagram& d, int genus, int surface_b0);

// One-variable Alexander polynomial from the Seifert pairing,
// det(A - t A^T); used as an independent cross-check of the Fox route.
LaurentPoly seifert_alexander(const SeifertData& s);

}  // namespace splitbound
