#include "splitbound/covering.hpp"

#include "splitbound/obstructive.hpp"
#include "splitbound/seifert.hpp"

#include <numeric>

namespace splitbound {

AxisLink axis_link(const AxisPresentation& p) { return tangle_closure_with_axis(p.tangle); }

CoverDiagram branched_double_cover(const LinkDiagram& base, const std::vector<int>& cut_edges,
                                   int odd_cut_loops) {
    const int E = base.edge_count();
    const int n = base.crossing_count();
    std::vector<LinkDiagram::Crossing> xs = base.crossings();
    xs.reserve(2 * n);
    for (const auto& x : base.crossings()) {
        LinkDiagram::Crossing y = x;
        for (int s = 0; s < 4; ++s) y.edge[s] += E;
        xs.push_back(y);
    }
    // Crossing the cut swaps sheets: exchange the head slots of each cut
    // edge between the two copies.
    for (int e : cut_edges) {
        if (e < 0 || e >= E) throw std::invalid_argument("cut edge out of range");
        auto h = base.head(e);
        xs[h.crossing].edge[h.slot] = e + E;
        xs[h.crossing + n].edge[h.slot] = e;
    }
    if (odd_cut_loops < 0 || odd_cut_loops > base.free_loop_count())
        throw std::invalid_argument("bad odd cut loop count");
    // Loops through the cut lift connected; the others double.
    int loops = odd_cut_loops + 2 * (base.free_loop_count() - odd_cut_loops);
    CoverDiagram out;
    out.diagram = LinkDiagram::build(std::move(xs), loops);
    out.projection.assign(out.diagram.component_count(), -1);
    for (int e = 0; e < out.diagram.edge_count(); ++e)
        out.projection[out.diagram.edge_component(e)] = base.edge_component(e % E);
    return out;
}

LinkDiagram double_cover_along_axis(const AxisPresentation& p) {
    TangleClosureCut base = tangle_closure_cut(p.tangle);
    return branched_double_cover(base.diagram, base.cut_edges, base.odd_cut_loops).diagram;
}

int euler_char_budget(int components, const SplitBudget& budget) {
    if (components < 2) throw std::invalid_argument("budget needs >= 2 components");
    if (budget.alpha < 0 || budget.beta < 0) throw std::invalid_argument("negative budget");
    int g = std::accumulate(budget.genus4.begin(), budget.genus4.end(), 0);
    return 2 * (components - 1) - budget.alpha - 4 * budget.beta - 4 * g;
}

bool budget_forces_connected(int components, int branch,
                             const std::vector<std::pair<int, int>>& changed_pairs) {
    for (int j = 0; j < components; ++j) {
        if (j == branch) continue;
        bool all = true;
        for (int k = 0; k < components && all; ++k) {
            if (k == j) continue;
            bool touched = false;
            for (auto [a, b] : changed_pairs)
                if ((a == j && b == k) || (a == k && b == j)) touched = true;
            if (!touched) all = false;
        }
        if (all) return true;
    }
    return false;
}

CoverVerdict theorem11_obstruction(const LinkDiagram& covering_knot, int k) {
    if (covering_knot.component_count() != 1)
        throw std::invalid_argument("covering knot expected");
    return slice_genus_lower_bound(covering_knot) > k ? CoverVerdict::Obstructed
                                                      : CoverVerdict::Consistent;
}

int sp_i_bound(const LinkDiagram& cover) {
    int lower = lemma_lower_bound(cover).bound;
    return (lower + 1) / 2;
}

WeakSlice weak_slice_obstruction(const LinkDiagram& cover) {
    if (cover.component_count() != 2)
        throw std::invalid_argument("weak-slice test expects a 2-component cover");
    // Murasugi with an annulus budget: g = 0, b0 = 1, m = 2.
    return std::abs(signature(cover)) > 1 ? WeakSlice::Obstructed : WeakSlice::Unknown;
}

WeakSlice weak_slice_band_sum_obstruction(const LinkDiagram& band_sum_knot) {
    if (band_sum_knot.component_count() != 1)
        throw std::invalid_argument("band sum of a 2-component link must be a knot");
    return slice_genus_lower_bound(band_sum_knot) > 1 ? WeakSlice::Obstructed : WeakSlice::Unknown;
}

LinkDiagram internal_band_sum(const LinkDiagram& d, int edge_a, int edge_b, int twists) {
    if (edge_a == edge_b || edge_a < 0 || edge_b < 0 || edge_a >= d.edge_count() ||
        edge_b >= d.edge_count())
        throw std::invalid_argument("band sum needs two distinct edges");
    int ca = d.edge_component(edge_a), cb = d.edge_component(edge_b);
    if (ca == cb) throw std::invalid_argument("band sum here joins distinct components");
    // Align orientations: the band reverses one side.
    LinkDiagram base = reverse_component(d, cb);
    std::vector<LinkDiagram::Crossing> xs = base.crossings();
    // Zero-twist band: exchange the heads of the two edges.
    auto ha = base.head(edge_a), hb = base.head(edge_b);
    xs[ha.crossing].edge[ha.slot] = edge_b;
    xs[hb.crossing].edge[hb.slot] = edge_a;
    // Twist region: chain |twists| crossings between the band sides.
    int left = edge_a, right = edge_b;
    int next_id = base.edge_count();
    auto head_of = [&](int e) {
        // current head slot of edge e within xs
        for (std::size_t c = 0; c < xs.size(); ++c)
            for (int s = 0; s < 4; ++s)
                if (xs[c].edge[s] == e) {
                    bool is_head;
                    if (s == 0)
                        is_head = true;
                    else if (s == 2)
                        is_head = false;
                    else
                        is_head = (s == xs[c].over_entry);
                    if (is_head) return LinkDiagram::End{static_cast<int>(c), s};
                }
        throw std::logic_error("edge head not found");
    };
    for (int k = 0; k < std::abs(twists); ++k) {
        auto hl = head_of(left), hr = head_of(right);
        int l2 = next_id++, r2 = next_id++;
        xs[hl.crossing].edge[hl.slot] = l2;
        xs[hr.crossing].edge[hr.slot] = r2;
        LinkDiagram::Crossing x;
        if (twists > 0) {
            x.edge = {left, r2, l2, right};
            x.over_entry = 3;
        } else {
            x.edge = {right, left, r2, l2};
            x.over_entry = 1;
        }
        xs.push_back(x);
        left = l2;
        right = r2;
    }
    LinkDiagram out = LinkDiagram::build(std::move(xs), d.free_loop_count());
    if (!planar(out)) throw std::invalid_argument("band is not planar at these edges");
    return out;
}

}  // namespace splitbound
