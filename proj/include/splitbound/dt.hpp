#pragma once

#include "splitbound/diagram.hpp"

#include <string>
#include <vector>

namespace splitbound {

struct NotRealizableError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Dowker-Thistlethwaite code: per-component sequences of signed even labels,
// one entry per odd label 1,3,5,.. in walking order. A positive entry means
// the even-labelled pass goes under (all-positive codes are alternating).
struct DTCode {
    std::vector<std::vector<int>> rows;

    int crossing_count() const {
        int n = 0;
        for (const auto& r : rows) n += static_cast<int>(r.size());
        return n;
    }
    int component_count() const { return static_cast<int>(rows.size()); }
};

// Accepts the table style "(14,-6,-10,16,-4,-18),(-20,22,8,-24,-2,12)";
// a single parenthesized tuple is a knot code.
DTCode parse_dt(const std::string& text);

std::string render_dt(const DTCode& code);

// Builds a planar diagram whose DT code reproduces the input, searching the
// per-crossing handedness assignments for a genus-0 embedding. Throws
// NotRealizableError when no embedding exists (never returns a wrong diagram).
LinkDiagram realize_dt(const DTCode& code);

// All DT codes of `d` over the traversal choices (component order, start
// pass, direction) that produce a valid odd/even labelling.
std::vector<DTCode> all_dt_codes(const LinkDiagram& d, std::size_t limit = 1 << 20);

// True iff some traversal of `d` reproduces `code` exactly.
bool dt_matches(const LinkDiagram& d, const DTCode& code);

}  // namespace splitbound
