#pragma once

#include "splitbound/diagram.hpp"

#include <string>
#include <vector>

namespace splitbound {

// Morse word for a tangle with d strands entering at the bottom and d
// leaving at the top, read bottom to top:
//   crossing  +i / -i : strands at positions i,i+1 cross; +i puts the strand
//                       coming from position i on top (braid convention)
//   cup       U i     : a local minimum inserting two new ends at i,i+1
//   cap       A i     : a local maximum joining the ends at i,i+1
// Text form: MT[d; 1,-2,U2,A1] (a braid word is the cups/caps-free case).
struct MorseTangle {
    struct Event {
        enum Kind { Crossing, Cup, Cap } kind;
        int pos;   // 1-based
        int sign;  // crossings only
    };
    int width = 0;
    std::vector<Event> events;

    static MorseTangle braid(int strands, const std::vector<int>& word);
    MorseTangle repeated(int times) const;  // concatenation with itself

    void validate() const;  // throws ParseError on inconsistent widths
};

MorseTangle parse_tangle(const std::string& text);
std::string render_tangle(const MorseTangle& t);

// Trace closure: top endpoint p joins bottom endpoint p around the right.
LinkDiagram tangle_closure(const MorseTangle& t);

// Closure together with the cut data: which edges cross the closure cut an
// odd number of times (the disc of the encircling axis), and how many
// crossing-free strands do.
struct TangleClosureCut {
    LinkDiagram diagram;
    std::vector<int> cut_edges;
    int odd_cut_loops = 0;
};

TangleClosureCut tangle_closure_cut(const MorseTangle& t);

struct AxisLink {
    LinkDiagram diagram;
    int axis_component = -1;
};

// Closure of the tangle together with an unknotted axis encircling the d
// closure strands. lk(axis, C) equals the algebraic winding of C through
// the axis.
AxisLink tangle_closure_with_axis(const MorseTangle& t);

// Boundary permutation: bottom position p connects to top position perm[p]
// (0-based). Throws if some strand enters and leaves at the bottom (caps and
// cups may pair boundary points on one side; such tangles have no permutation).
std::vector<int> tangle_permutation(const MorseTangle& t);

// Low-level assembly from crossing ports. Ports run counterclockwise
// SW=0, SE=1, NE=2, NW=3; the strand through SW-NE is diagonal 0, through
// SE-NW diagonal 1, and over_diag picks the one on top. Two ports sharing a
// connection id are joined by an arc; every id must appear exactly twice.
// Orientations are chosen consistently per component.
struct PortCrossing {
    std::array<int, 4> end{-1, -1, -1, -1};
    int over_diag = 0;
};

LinkDiagram assemble_ports(const std::vector<PortCrossing>& crossings, int free_loops = 0);

}  // namespace splitbound
