#include "splitbound/linking.hpp"

#include <cstdlib>
#include <stdexcept>

namespace splitbound {

LinkingMatrix linking_matrix(const LinkDiagram& d) {
    const int m = d.component_count();
    std::vector<std::vector<int>> sum(m, std::vector<int>(m, 0));
    for (const auto& x : d.crossings()) {
        int cu = d.edge_component(x.under_in());
        int co = d.edge_component(x.over_in());
        if (cu == co) continue;
        sum[cu][co] += x.sign();
        sum[co][cu] += x.sign();
    }
    LinkingMatrix out;
    out.lk.assign(m, std::vector<int>(m, 0));
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
            if (i == j) continue;
            if (sum[i][j] % 2 != 0)
                throw std::logic_error("odd inter-component crossing sum");
            out.lk[i][j] = sum[i][j] / 2;
        }
    return out;
}

int total_linking(const LinkingMatrix& m) {
    int a = 0;
    for (int i = 0; i < m.size(); ++i)
        for (int j = 0; j < i; ++j) a += std::abs(m(i, j));
    return a;
}

int splitting_parity(const LinkingMatrix& m) {
    int s = 0;
    for (int i = 0; i < m.size(); ++i)
        for (int j = 0; j < i; ++j) s += m(i, j);
    return ((s % 2) + 2) % 2;
}

}  // namespace splitbound
