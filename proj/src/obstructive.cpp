#include "splitbound/obstructive.hpp"

#include "splitbound/alexander.hpp"

#include <algorithm>
#include <map>

namespace splitbound {

NonSplitCertificate nonsplit_certificate(const LinkDiagram& d) {
    if (d.component_count() < 2)
        throw std::invalid_argument("non-splitness concerns links with >= 2 components");
    LinkingMatrix lk = linking_matrix(d);
    for (int i = 0; i < lk.size(); ++i)
        for (int j = 0; j < i; ++j)
            if (lk(i, j) != 0) return {true, "linking"};
    if (!alexander_polynomial(d).is_zero()) return {true, "alexander"};
    return {false, ""};
}

bool verify_collection(const LinkDiagram& d, const ObstructiveCollection& col) {
    LinkingMatrix lk = linking_matrix(d);
    for (const auto& s : col.members) {
        if (s.size() < 2) return false;
        for (int c : s)
            if (c < 0 || c >= d.component_count()) return false;
        for (std::size_t i = 0; i < s.size(); ++i)
            for (std::size_t j = 0; j < i; ++j)
                if (lk(s[i], s[j]) != 0) return false;
        if (!nonsplit_certificate(sublink(d, s)).nonsplit) return false;
    }
    for (std::size_t i = 0; i < col.members.size(); ++i)
        for (std::size_t j = 0; j < i; ++j) {
            std::vector<int> common;
            std::set_intersection(col.members[i].begin(), col.members[i].end(),
                                  col.members[j].begin(), col.members[j].end(),
                                  std::back_inserter(common));
            if (common.size() > 1) return false;
        }
    return true;
}

CInvariant c_invariant(const LinkDiagram& d) {
    const int m = d.component_count();
    if (m > 8) throw std::invalid_argument("c invariant capped at 8 components");
    CInvariant out;
    if (m < 2) return out;
    LinkingMatrix lk = linking_matrix(d);

    // Candidate subsets: >= 2 components, zero linking submatrix, certified
    // non-split (certificates memoized per subset mask).
    std::vector<unsigned> candidates;
    for (unsigned mask = 0; mask < (1u << m); ++mask) {
        if (__builtin_popcount(mask) < 2) continue;
        bool zero = true;
        for (int i = 0; i < m && zero; ++i)
            for (int j = 0; j < i && zero; ++j)
                if ((mask >> i & 1) && (mask >> j & 1) && lk(i, j) != 0) zero = false;
        if (!zero) continue;
        std::vector<int> comps;
        for (int i = 0; i < m; ++i)
            if (mask >> i & 1) comps.push_back(i);
        if (!nonsplit_certificate(sublink(d, comps)).nonsplit) continue;
        candidates.push_back(mask);
        if (mask == (1u << m) - 1) out.full_link_obstructive = true;
    }

    // Exhaustive packing under the <=1 shared component constraint.
    std::vector<unsigned> best, cur;
    std::function<void(std::size_t)> rec = [&](std::size_t idx) {
        if (cur.size() + (candidates.size() - idx) <= best.size()) return;
        if (idx == candidates.size()) {
            if (cur.size() > best.size()) best = cur;
            return;
        }
        unsigned cand = candidates[idx];
        bool ok = true;
        for (unsigned used : cur)
            if (__builtin_popcount(used & cand) > 1) ok = false;
        if (ok) {
            cur.push_back(cand);
            rec(idx + 1);
            cur.pop_back();
        }
        rec(idx + 1);
    };
    rec(0);

    out.c = static_cast<int>(best.size());
    for (unsigned mask : best) {
        std::vector<int> comps;
        for (int i = 0; i < m; ++i)
            if (mask >> i & 1) comps.push_back(i);
        out.witness.members.push_back(std::move(comps));
    }
    return out;
}

LemmaBound lemma_lower_bound(const LinkDiagram& d) {
    LemmaBound out;
    LinkingMatrix lk = linking_matrix(d);
    out.a = total_linking(lk);
    out.parity = splitting_parity(lk);
    out.detail = c_invariant(d);
    out.c = out.detail.c;
    out.bound = out.a + 2 * out.c;
    out.self_only_bound = out.a + 2 * (out.detail.full_link_obstructive ? 1 : 0);
    return out;
}

}  // namespace splitbound
