#pragma once

#include "splitbound/diagram.hpp"
#include "splitbound/linking.hpp"

#include <string>
#include <vector>

namespace splitbound {

// Sufficient non-splitness certificate: nonzero linking number or nonzero
// multivariable Alexander polynomial. Never certifies splitness.
struct NonSplitCertificate {
    bool nonsplit = false;
    std::string reason;  // "linking" or "alexander"; empty when Unknown
};

NonSplitCertificate nonsplit_certificate(const LinkDiagram& d);

// A collection of certified obstructive sublinks (non-split, all pairwise
// linking numbers zero) sharing at most one component pairwise.
struct ObstructiveCollection {
    std::vector<std::vector<int>> members;  // component subsets, sorted
};

// Re-checks the collection's defining invariants from scratch; used by tests
// and by certificate consumers, independent of the search that produced it.
bool verify_collection(const LinkDiagram& d, const ObstructiveCollection& col);

struct CInvariant {
    int c = 0;
    ObstructiveCollection witness;
    bool full_link_obstructive = false;  // the witness {whole link} is valid
};

// Maximum-cardinality collection over all certified-obstructive sublinks by
// exhaustive set packing. Because certification is one-sided, the result is
// a lower bound for c(L), which is what the splitting bound consumes.
// Refuses m > 8.
CInvariant c_invariant(const LinkDiagram& d);

struct LemmaBound {
    int a = 0;       // total linking
    int c = 0;       // obstructive count (lower bound)
    int bound = 0;   // a + 2c
    int parity = 0;  // sp mod 2
    int self_only_bound = 0;  // a + 2*[full link certified obstructive]
    CInvariant detail;
};

LemmaBound lemma_lower_bound(const LinkDiagram& d);

}  // namespace splitbound
