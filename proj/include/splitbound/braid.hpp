#pragma once

#include "splitbound/diagram.hpp"
#include "splitbound/tangle.hpp"

#include <string>
#include <vector>

namespace splitbound {

// Word in braid generators: i stands for sigma_i, -i for its inverse.
struct BraidWord {
    int strands = 0;
    std::vector<int> word;

    MorseTangle tangle() const { return MorseTangle::braid(strands, word); }
};

// Text form: BR[k; 1,1,-2,1]; an empty word is BR[k;].
BraidWord parse_braid(const std::string& text);
std::string render_braid(const BraidWord& b);

LinkDiagram braid_closure(const BraidWord& b);

// Permutation of strand positions (0-based) induced by the word.
std::vector<int> braid_permutation(const BraidWord& b);

int cycle_count(const std::vector<int>& perm);

}  // namespace splitbound
