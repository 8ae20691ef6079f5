#include "splitbound/dt.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <numeric>
#include <sstream>

namespace splitbound {

DTCode parse_dt(const std::string& text) {
    DTCode code;
    std::size_t i = 0;
    auto skip = [&] {
        while (i < text.size() && (std::isspace(static_cast<unsigned char>(text[i])) || text[i] == ','))
            ++i;
    };
    skip();
    if (i == text.size()) return code;
    while (true) {
        skip();
        if (i >= text.size()) break;
        if (text[i] != '(') throw ParseError("expected '(' in DT code");
        ++i;
        std::vector<int> row;
        while (true) {
            skip();
            if (i < text.size() && text[i] == ')') {
                ++i;
                break;
            }
            int sign = 1;
            if (i < text.size() && (text[i] == '-' || text[i] == '+')) {
                if (text[i] == '-') sign = -1;
                ++i;
            }
            std::size_t start = i;
            while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
            if (i == start) throw ParseError("expected integer in DT code");
            row.push_back(sign * std::stoi(text.substr(start, i - start)));
        }
        code.rows.push_back(std::move(row));
    }

    const int n = code.crossing_count();
    std::vector<char> seen(2 * n + 1, 0);
    for (const auto& r : code.rows)
        for (int v : r) {
            int a = std::abs(v);
            if (v == 0 || a % 2 != 0) throw ParseError("odd label in DT code");
            if (a > 2 * n || seen[a]) throw ParseError("DT label set is not {2,4,..,2n}");
            seen[a] = 1;
        }
    return code;
}

std::string render_dt(const DTCode& code) {
    std::ostringstream os;
    for (std::size_t r = 0; r < code.rows.size(); ++r) {
        if (r) os << ",";
        os << "(";
        for (std::size_t k = 0; k < code.rows[r].size(); ++k) {
            if (k) os << ",";
            os << code.rows[r][k];
        }
        os << ")";
    }
    return os.str();
}

namespace {

struct DtLayout {
    int n = 0;
    std::vector<int> partner;        // pass label (1-based) -> partner pass
    std::vector<char> pass_under;    // pass label -> goes under?
    std::vector<int> pass_crossing;  // pass label -> crossing id
    std::vector<int> succ, pred;     // walk order, cyclic per component
};

DtLayout layout_of(const DTCode& code) {
    DtLayout L;
    L.n = code.crossing_count();
    const int P = 2 * L.n;
    L.partner.assign(P + 1, 0);
    L.pass_under.assign(P + 1, 0);
    L.pass_crossing.assign(P + 1, -1);
    L.succ.assign(P + 1, 0);
    L.pred.assign(P + 1, 0);

    int odd = 1, crossing = 0;
    for (const auto& row : code.rows)
        for (int v : row) {
            int even = std::abs(v);
            if (L.pass_crossing[even] != -1 || even == 0)
                throw NotRealizableError("DT label collision");
            L.partner[odd] = even;
            L.partner[even] = odd;
            L.pass_under[even] = v > 0;
            L.pass_under[odd] = v < 0;
            L.pass_crossing[odd] = L.pass_crossing[even] = crossing++;
            odd += 2;
        }
    for (int p = 1; p <= P; ++p)
        if (L.pass_crossing[p] == -1) throw NotRealizableError("DT labels do not pair up");

    int base = 0;
    for (const auto& row : code.rows) {
        int len = 2 * static_cast<int>(row.size());
        for (int p = base + 1; p <= base + len; ++p)
            L.succ[p] = (p == base + len) ? base + 1 : p + 1;
        base += len;
    }
    for (int p = 1; p <= P; ++p) L.pred[L.succ[p]] = p;
    return L;
}

}  // namespace

LinkDiagram realize_dt(const DTCode& code) {
    int free_loops = 0;
    DTCode trimmed;
    for (const auto& r : code.rows) {
        if (r.empty())
            ++free_loops;
        else
            trimmed.rows.push_back(r);
    }
    if (trimmed.rows.empty()) return LinkDiagram::build({}, std::max(free_loops, 1));
    if (free_loops > 0)
        throw NotRealizableError("mixed empty and non-empty DT components (split diagram)");

    DtLayout L = layout_of(trimmed);
    const int n = L.n;
    const int P = 2 * n;

    // Strand A at each crossing = the smaller pass label.
    std::vector<int> strandA(n, 0);
    for (int p = 1; p <= P; ++p)
        if (p < L.partner[p]) strandA[L.pass_crossing[p]] = p;

    // Edge e (0-based) runs from pass e+1 to pass succ[e+1].
    auto arriving_edge = [&](int pass) { return L.pred[pass] - 1; };
    auto leaving_edge = [&](int pass) { return pass - 1; };

    // Rotation positions per crossing: A_in, X, A_out, Y where (X,Y) is
    // (B_in, B_out) for handedness 0 and (B_out, B_in) for handedness 1.
    auto dart_info = [&](int c, int h, int pos, int& edge, bool& incoming) {
        int pa = strandA[c], pb = L.partner[pa];
        int strand_pass = (pos % 2 == 0) ? pa : pb;
        bool in = (pos == 0) || (pos == 1 && h == 0) || (pos == 3 && h == 1);
        edge = in ? arriving_edge(strand_pass) : leaving_edge(strand_pass);
        incoming = in;
    };

    // Connectivity of the underlying 4-valent graph.
    {
        std::vector<std::vector<int>> adj(n);
        for (int p = 1; p <= P; ++p) {
            int a = L.pass_crossing[p], b = L.pass_crossing[L.succ[p]];
            adj[a].push_back(b);
            adj[b].push_back(a);
        }
        std::vector<char> vis(n, 0);
        std::vector<int> stack{0};
        vis[0] = 1;
        while (!stack.empty()) {
            int c = stack.back();
            stack.pop_back();
            for (int d : adj[c])
                if (!vis[d]) {
                    vis[d] = 1;
                    stack.push_back(d);
                }
        }
        if (std::find(vis.begin(), vis.end(), 0) != vis.end())
            throw NotRealizableError("DT code describes a disconnected diagram");
    }

    std::vector<int> handed(n, 0);
    std::vector<int> head_dart(P), tail_dart(P);
    auto count_faces = [&]() -> int {
        for (int c = 0; c < n; ++c)
            for (int pos = 0; pos < 4; ++pos) {
                int e;
                bool in;
                dart_info(c, handed[c], pos, e, in);
                (in ? head_dart : tail_dart)[e] = 4 * c + pos;
            }
        std::vector<char> visited(4 * n, 0);
        int faces = 0;
        for (int d0 = 0; d0 < 4 * n; ++d0) {
            if (visited[d0]) continue;
            ++faces;
            int d = d0;
            do {
                visited[d] = 1;
                // alpha: to the opposite dart of the same edge; sigma: rotate.
                int c = d >> 2, pos = d & 3;
                int e;
                bool in;
                dart_info(c, handed[c], pos, e, in);
                int opp = in ? tail_dart[e] : head_dart[e];
                d = (opp & ~3) | ((opp + 1) & 3);
            } while (d != d0);
        }
        return faces;
    };

    bool found = false;
    for (long mask = 0; mask < (1L << n) && !found; ++mask) {
        for (int c = 0; c < n; ++c) handed[c] = static_cast<int>((mask >> c) & 1);
        if (n - P + count_faces() == 2) found = true;
    }
    if (!found) throw NotRealizableError("DT code admits no planar embedding");

    std::vector<LinkDiagram::Crossing> xs(n);
    for (int c = 0; c < n; ++c) {
        int pa = strandA[c], pb = L.partner[pa];
        int under_pass = L.pass_under[pa] ? pa : pb;
        std::array<int, 4> edge{};
        std::array<bool, 4> incoming{};
        for (int pos = 0; pos < 4; ++pos) dart_info(c, handed[c], pos, edge[pos], incoming[pos]);
        int start = -1, over_in_pos = -1;
        for (int pos = 0; pos < 4; ++pos) {
            int strand_pass = (pos % 2 == 0) ? pa : pb;
            if (incoming[pos]) {
                if (strand_pass == under_pass)
                    start = pos;
                else
                    over_in_pos = pos;
            }
        }
        for (int s = 0; s < 4; ++s) xs[c].edge[s] = edge[(start + s) % 4];
        xs[c].over_entry = (over_in_pos - start + 4) % 4;
    }
    return LinkDiagram::build(std::move(xs));
}

// ---------------------------------------------------------------------------
// Recomputing DT codes from a diagram

namespace {

bool dt_of(const LinkDiagram& d, const std::vector<int>& order,
           const std::vector<int>& start_edge, const std::vector<int>& dir, DTCode& out) {
    const int n = d.crossing_count();
    std::vector<std::vector<std::pair<int, bool>>> comp_passes;  // (crossing, under?)
    for (std::size_t k = 0; k < order.size(); ++k) {
        int comp = order[k];
        std::vector<std::pair<int, bool>> passes;
        int e0 = start_edge[comp];
        if (e0 >= 0) {
            if (dir[comp] == 0) {
                int e = e0;
                do {
                    auto h = d.head(e);
                    passes.emplace_back(h.crossing, h.slot == 0);
                    e = d.next_edge(e);
                } while (e != e0);
            } else {
                int e = e0;
                do {
                    auto t = d.tail(e);
                    passes.emplace_back(t.crossing, t.slot == 2);
                    const auto& x = d.crossing(t.crossing);
                    int in_slot = (t.slot == 2) ? 0 : (t.slot ^ 2);
                    e = x.edge[in_slot];
                } while (e != e0);
            }
        }
        comp_passes.push_back(std::move(passes));
    }

    // Assign labels 1..2n and check the odd/even pairing.
    std::vector<std::vector<int>> labels_of_crossing(n);
    std::vector<char> under_at(2 * n + 1, 0);
    int next_label = 1;
    for (const auto& passes : comp_passes)
        for (auto [c, under] : passes) {
            for (int prev : labels_of_crossing[c])
                if ((prev % 2) == (next_label % 2)) return false;
            labels_of_crossing[c].push_back(next_label);
            under_at[next_label] = under;
            ++next_label;
        }
    for (int c = 0; c < n; ++c)
        if (labels_of_crossing[c].size() != 2) return false;

    std::vector<int> partner(2 * n + 1, 0);
    for (int c = 0; c < n; ++c) {
        partner[labels_of_crossing[c][0]] = labels_of_crossing[c][1];
        partner[labels_of_crossing[c][1]] = labels_of_crossing[c][0];
    }

    out.rows.clear();
    int base = 0;
    for (const auto& passes : comp_passes) {
        std::vector<int> row;
        for (std::size_t k = 0; k < passes.size(); ++k) {
            int lbl = base + static_cast<int>(k) + 1;
            if (lbl % 2 == 1) {
                int p = partner[lbl];
                row.push_back(under_at[p] ? p : -p);
            }
        }
        base += static_cast<int>(passes.size());
        out.rows.push_back(std::move(row));
    }
    return true;
}

}  // namespace

std::vector<DTCode> all_dt_codes(const LinkDiagram& d, std::size_t limit) {
    std::vector<DTCode> out;
    const int m = d.component_count();
    if (d.free_loop_count() > 0 || m > 6) return out;
    std::vector<int> order(m);
    std::iota(order.begin(), order.end(), 0);
    std::vector<std::vector<int>> comp_edges(m);
    for (int e = 0; e < d.edge_count(); ++e) comp_edges[d.edge_component(e)].push_back(e);
    do {
        std::vector<int> start(m, -1), dir(m, 0);
        std::function<void(int)> rec = [&](int k) {
            if (out.size() >= limit) return;
            if (k == m) {
                DTCode code;
                if (dt_of(d, order, start, dir, code)) out.push_back(code);
                return;
            }
            int comp = order[k];
            const auto& edges = comp_edges[comp];
            if (edges.empty()) {
                start[comp] = -1;
                dir[comp] = 0;
                rec(k + 1);
                return;
            }
            for (int e : edges)
                for (dir[comp] = 0; dir[comp] < 2; ++dir[comp]) {
                    start[comp] = e;
                    rec(k + 1);
                }
        };
        rec(0);
        if (out.size() >= limit) break;
    } while (std::next_permutation(order.begin(), order.end()));
    return out;
}

bool dt_matches(const LinkDiagram& d, const DTCode& code) {
    for (const auto& c : all_dt_codes(d))
        if (c.rows == code.rows) return true;
    return false;
}

}  // namespace splitbound
