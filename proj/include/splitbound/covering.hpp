#pragma once

#include "splitbound/braid.hpp"
#include "splitbound/diagram.hpp"
#include "splitbound/tangle.hpp"

#include <vector>

namespace splitbound {

// A link presented relative to an unknotted axis: the tangle's closure runs
// through the axis ring, so the modeled link is closure(T) together with the
// axis as branch component. Covers double the tangle.
struct AxisPresentation {
    MorseTangle tangle;

    static AxisPresentation from_braid(const BraidWord& b) { return {b.tangle()}; }
};

// The modeled link: closure(T) with the encircling axis.
AxisLink axis_link(const AxisPresentation& p);

// 2-fold branched cover construction by cutting: the branch circle bounds a
// disc crossed once by each cut edge (and odd_cut_loops crossing-free
// strands); two verbatim copies of the diagram are glued across the cut.
// Orientations and component labels are the induced ones: component k of
// the input is covered by the output components labelled via `projection`.
struct CoverDiagram {
    LinkDiagram diagram;
    std::vector<int> projection;  // cover component -> base component (-1: loop)
};

CoverDiagram branched_double_cover(const LinkDiagram& base, const std::vector<int>& cut_edges,
                                   int odd_cut_loops = 0);

// 2-fold covering link with respect to the axis: the double of the tangle,
// the branch component removed. Orientations are the induced ones.
LinkDiagram double_cover_along_axis(const AxisPresentation& p);

struct SplitBudget {
    int alpha = 0;                // crossing changes involving the branch component
    int beta = 0;                 // crossing changes avoiding it
    std::vector<int> genus4;      // slice genera of the non-branch components
};

// chi(F) = 2(m-1) - alpha - 4 beta - 4 sum(g4).
int euler_char_budget(int components, const SplitBudget& budget);

// Connectedness clause: true when some non-branch component j is changed
// against every other component. `changed_pairs` lists the component pairs
// (branch included) the splitting sequence touches.
bool budget_forces_connected(int components, int branch,
                             const std::vector<std::pair<int, int>>& changed_pairs);

enum class CoverVerdict { Obstructed, Consistent };

// sp(L) = 2k+1 with unknotted components forces every 2-fold covering knot
// to have slice genus <= k; the signature route refutes that.
CoverVerdict theorem11_obstruction(const LinkDiagram& covering_knot, int k);

// sp_i(L) >= ceil(sp(J)/2) with sp(J) bounded below by the splitting bound
// of the cover.
int sp_i_bound(const LinkDiagram& cover);

enum class WeakSlice { Obstructed, Unknown };

// sp(L) = 2 with unknotted components makes the cover weakly slice: an
// annulus budget |sigma| <= 1.
WeakSlice weak_slice_obstruction(const LinkDiagram& cover);

// Same conclusion refuted through an internal band sum of the cover, which
// would have slice genus <= 1.
WeakSlice weak_slice_band_sum_obstruction(const LinkDiagram& band_sum_knot);

// Internal band sum joining edge_a's component to edge_b's component with
// `twists` half twists in the band. The band runs inside a face shared by
// the two edges; orientation-incompatible or non-planar data is rejected.
LinkDiagram internal_band_sum(const LinkDiagram& d, int edge_a, int edge_b, int twists);

}  // namespace splitbound
