#pragma once

#include "splitbound/diagram.hpp"
#include "splitbound/laurent.hpp"

#include <optional>
#include <vector>

namespace splitbound {

// Group word in generators: (generator id, +-1), left to right.
using GroupWord = std::vector<std::pair<int, int>>;

// Wirtinger presentation of the link group: one generator per arc (maximal
// over-strand run), one relator per crossing, plus a free generator for each
// crossing-free component.
struct WirtingerPresentation {
    int generator_count = 0;
    std::vector<int> generator_component;
    std::vector<GroupWord> relators;
    int component_count = 0;
    std::vector<int> arc_of_edge;  // edge id -> generator id
};

WirtingerPresentation wirtinger(const LinkDiagram& d);

// Free Fox derivative of a word, abelianized via generator -> t_{component}.
// Returns one row: entry j = d(word)/d(x_j) in Z[t_1^{+-1},..].
std::vector<LaurentPoly> fox_row(const GroupWord& word,
                                 const std::vector<int>& generator_component,
                                 int component_count);

// Full Fox Jacobian: relators x generators.
std::vector<std::vector<LaurentPoly>> fox_jacobian(const WirtingerPresentation& p);

struct AlexanderResult {
    LaurentPoly delta;                         // unit-normalized, arity = m
    int component_count = 0;
    std::vector<LaurentPoly> component_delta;  // knot polynomials, arity 1
    std::optional<Int> torres_value;           // |delta(1,1)| when m == 2
};

// Multivariable Alexander polynomial via Fox calculus on the Wirtinger
// presentation: delete one generator column, square up (dropping the
// redundant relator when present), take the determinant and divide exactly
// by (t_j - 1) when m >= 2. Computed twice with independent choices; a
// mismatch is a hard internal error.
AlexanderResult multivariable_alexander(const LinkDiagram& d);

// Just the polynomial (skips the per-component sublink computations).
LaurentPoly alexander_polynomial(const LinkDiagram& d);

enum class SplitVerdict { ObstructsSpOne, NoObstruction, NotApplicable };

struct SplitObstruction {
    SplitVerdict verdict = SplitVerdict::NotApplicable;
    std::string note;
    LaurentPoly divisor;  // delta(s,1) * delta(1,t), when applicable
};

// The sp(L)=1 obstruction for 2-component links: fires when
// delta(s,1)*delta(1,t) fails to divide delta(s,t).
SplitObstruction splitting_obstruction(const AlexanderResult& res);

}  // namespace splitbound
