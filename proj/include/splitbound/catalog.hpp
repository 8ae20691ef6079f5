#pragma once

#include "splitbound/diagram.hpp"

#include <optional>
#include <string>
#include <vector>

namespace splitbound {

// External mathematical input consumed as an explicit assumption with a
// bibliographic key, never silently.
struct CitedAssumption {
    std::string kind;   // e.g. "unlinking_number_at_least", "covering_knot_not_slice"
    std::string value;  // numeric payload when applicable
    std::string ref;    // bibliography key
    std::string note;
};

// Axis presentation of the link itself: closure(tangle) with the encircling
// axis reproduces the catalog diagram, the axis playing the branch component.
struct AxisAnnotation {
    std::string tangle;  // MT[...] text
    int branch = -1;     // catalog component index of the branch
};

// Internal band sum applied to the computed cover (edge ids in the cover).
struct BandAnnotation {
    int edge_a = -1, edge_b = -1;
    int twists = 0;
};

struct CatalogEntry {
    std::string name;
    int components = 0;
    int crossings = 0;
    int sp = -1;      // recorded splitting number
    int method = 0;   // recorded method tag 1..5
    std::string provenance;  // paper-dt | construction | tabulated | unrealized
    std::string pd;          // empty when unrealized
    std::string dt;

    std::vector<std::string> labels;
    std::optional<AxisAnnotation> axis;
    std::optional<std::string> cover_pd;
    std::optional<BandAnnotation> band_sum;
    std::vector<CitedAssumption> cited;
    std::string alexander;  // printed polynomial, when published

    bool has_diagram() const { return !pd.empty(); }
    LinkDiagram diagram() const;
};

struct Catalog {
    std::vector<CatalogEntry> entries;
    const CatalogEntry* find(const std::string& name) const;
};

// CSV columns: name,components,crossings,sp,method,provenance,dt,pd
// (pd/dt quoted). The optional JSON sidecar holds annotations per name.
// Schema violations report line numbers; duplicate names and recorded sp
// values violating the diagram's linking parity are load errors.
Catalog load_catalog(const std::string& csv_path, const std::string& annotations_path = "");

}  // namespace splitbound
