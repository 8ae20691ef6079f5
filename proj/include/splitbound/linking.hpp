#pragma once

#include "splitbound/diagram.hpp"

#include <vector>

namespace splitbound {

// Symmetric m x m integer matrix, zero diagonal; lk(i,j) is half the signed
// sum of crossings between components i and j.
struct LinkingMatrix {
    std::vector<std::vector<int>> lk;

    int size() const { return static_cast<int>(lk.size()); }
    int operator()(int i, int j) const { return lk[i][j]; }
};

LinkingMatrix linking_matrix(const LinkDiagram& d);

// a(L) = sum over i>j of |lk(i,j)|.
int total_linking(const LinkingMatrix& m);

// sp(L) mod 2 == sum over i>j of lk(i,j) mod 2; returns 0 (even) or 1 (odd).
int splitting_parity(const LinkingMatrix& m);

}  // namespace splitbound
