#pragma once

#include <array>
#include <stdexcept>
#include <string>
#include <vector>

namespace splitbound {

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Oriented link diagram as a combinatorial map.
//
// Conventions, fixed project-wide:
//  - Each crossing stores its four incident edge ids in counterclockwise
//    order starting from the incoming under-strand: slot 0 = under in,
//    slot 2 = under out, slots 1/3 carry the over strand.
//  - over_entry (1 or 3) says where the over strand enters; it exits at the
//    opposite slot.  sign = +1 iff over_entry == 3 (right-handed crossing),
//    which makes `X[4,2,1,3] X[2,4,3,1]` the positive Hopf link.
//  - Edges are 0-based, each incident to exactly two crossing slots, and
//    directed (they leave an out-slot and arrive at an in-slot).
//  - Components are numbered by their smallest edge id unless a builder
//    specifies otherwise; crossing-free components are counted separately
//    as free loops.
class LinkDiagram {
public:
    struct Crossing {
        std::array<int, 4> edge{-1, -1, -1, -1};
        int over_entry = 3;
        int sign() const { return over_entry == 3 ? +1 : -1; }
        int under_in() const { return edge[0]; }
        int under_out() const { return edge[2]; }
        int over_in() const { return edge[over_entry]; }
        int over_out() const { return edge[over_entry ^ 2]; }
    };

    struct End {
        int crossing = -1;
        int slot = -1;
    };

    LinkDiagram() = default;

    // Builds and validates a diagram from crossings with resolved over_entry.
    // edge ids must be 0..E-1; free_loop_count adds crossing-free unknot
    // components (numbered after the edge-bearing ones).
    static LinkDiagram build(std::vector<Crossing> crossings, int free_loop_count = 0);
    // As `build`, but assigns the given component label to each edge instead
    // of deriving labels from smallest edge ids (used by sublink/covers where
    // the caller tracks identity). Labels must be 0..m-1.
    static LinkDiagram build_labeled(std::vector<Crossing> crossings,
                                     std::vector<int> edge_component,
                                     std::vector<int> free_loop_components);

    int crossing_count() const { return static_cast<int>(crossings_.size()); }
    int edge_count() const { return edge_count_; }
    int component_count() const { return component_count_; }
    int free_loop_count() const { return static_cast<int>(free_loop_components_.size()); }
    const std::vector<int>& free_loop_components() const { return free_loop_components_; }

    const std::vector<Crossing>& crossings() const { return crossings_; }
    const Crossing& crossing(int i) const { return crossings_[i]; }
    int edge_component(int e) const { return edge_component_[e]; }
    const std::vector<int>& edge_components() const { return edge_component_; }

    // Where an edge leaves from / arrives at.
    End tail(int e) const { return tail_[e]; }
    End head(int e) const { return head_[e]; }
    // The edge that continues a strand after arriving at `head(e)`.
    int next_edge(int e) const;

private:
    std::vector<Crossing> crossings_;
    int edge_count_ = 0;
    std::vector<End> tail_, head_;
    std::vector<int> edge_component_;
    std::vector<int> free_loop_components_;
    int component_count_ = 0;

    void index_ends();
    void derive_components();
};

// PD text -> diagram. Accepts `PD[X[a,b,c,d],...]` or bare `X[..] X[..]`
// lists, whitespace-insensitive; `PD[]` is the 0-crossing unknot.
LinkDiagram parse_pd(const std::string& text);

// Canonical PD text; parse_pd(render_pd(d)) reproduces d up to relabeling.
std::string render_pd(const LinkDiagram& d);

// Deterministic relabeling: components ordered by smallest edge id, edges
// renumbered along each component starting from its smallest edge.
LinkDiagram canonicalize(const LinkDiagram& d);

// Structural equality after canonicalization (crossing incidence, signs,
// orientations).
bool same_diagram(const LinkDiagram& a, const LinkDiagram& b);

// Keep the given components; crossings with a deleted strand are smoothed.
LinkDiagram sublink(const LinkDiagram& d, const std::vector<int>& keep);

// Disjoint union; components of `b` follow those of `a`.
LinkDiagram split_union(const LinkDiagram& a, const LinkDiagram& b);

// Mirror image (all crossings switched).
LinkDiagram mirror(const LinkDiagram& d);

// Reverse the orientation of one component.
LinkDiagram reverse_component(const LinkDiagram& d, int comp);

// One traversed edge side of a face walk: dir +1 runs with the edge.
struct FaceSide {
    int edge;
    int dir;
    bool operator==(const FaceSide&) const = default;
};

// Faces of the combinatorial map (counterclockwise rotation at crossings).
std::vector<std::vector<FaceSide>> diagram_faces(const LinkDiagram& d);

// Connected pieces of the underlying 4-valent graph (free loops excluded).
int connected_piece_count(const LinkDiagram& d);

// True when every connected piece embeds in the sphere (V - E + F checks out).
bool planar(const LinkDiagram& d);

}  // namespace splitbound
