#include "splitbound/diagram.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <sstream>

namespace splitbound {

namespace {

// Strand continuation: arriving at an in-slot, leave at the opposite slot.
int in_slot_partner(int slot) { return slot ^ 2; }

}  // namespace

void LinkDiagram::index_ends() {
    tail_.assign(edge_count_, End{});
    head_.assign(edge_count_, End{});
    std::vector<int> seen(edge_count_, 0);
    for (int c = 0; c < crossing_count(); ++c) {
        const Crossing& x = crossings_[c];
        for (int s = 0; s < 4; ++s) {
            int e = x.edge[s];
            if (e < 0 || e >= edge_count_)
                throw ParseError("edge id out of range at crossing " + std::to_string(c));
            bool is_in = (s == 0) || (s == x.over_entry);
            (is_in ? head_ : tail_)[e] = End{c, s};
            seen[e] += is_in ? 1 : 4;
        }
    }
    for (int e = 0; e < edge_count_; ++e)
        if (seen[e] != 5)
            throw ParseError("edge " + std::to_string(e) +
                             " is not incident to exactly one in-end and one out-end");
}

int LinkDiagram::next_edge(int e) const {
    End h = head_[e];
    return crossings_[h.crossing].edge[in_slot_partner(h.slot)];
}

void LinkDiagram::derive_components() {
    edge_component_.assign(edge_count_, -1);
    int comp = 0;
    for (int e0 = 0; e0 < edge_count_; ++e0) {
        if (edge_component_[e0] != -1) continue;
        int e = e0;
        do {
            edge_component_[e] = comp;
            e = next_edge(e);
        } while (e != e0);
        ++comp;
    }
    component_count_ = comp;
}

LinkDiagram LinkDiagram::build(std::vector<Crossing> crossings, int free_loop_count) {
    LinkDiagram d;
    d.crossings_ = std::move(crossings);
    int max_edge = -1;
    for (const auto& x : d.crossings_)
        for (int e : x.edge) max_edge = std::max(max_edge, e);
    d.edge_count_ = max_edge + 1;
    d.index_ends();
    d.derive_components();
    int base = d.component_count_;
    for (int i = 0; i < free_loop_count; ++i) d.free_loop_components_.push_back(base + i);
    d.component_count_ = base + free_loop_count;
    return d;
}

LinkDiagram LinkDiagram::build_labeled(std::vector<Crossing> crossings,
                                       std::vector<int> edge_component,
                                       std::vector<int> free_loop_components) {
    LinkDiagram d = build(std::move(crossings), 0);
    if (static_cast<int>(edge_component.size()) != d.edge_count_)
        throw std::invalid_argument("edge_component size mismatch");
    // Labels must be constant along strands as derived.
    for (int e = 0; e < d.edge_count_; ++e)
        if (edge_component[e] != edge_component[d.next_edge(e)])
            throw std::invalid_argument("component labels not constant along strands");
    int m = 0;
    for (int l : edge_component) m = std::max(m, l + 1);
    for (int l : free_loop_components) m = std::max(m, l + 1);
    std::vector<int> used(m, 0);
    for (int l : edge_component) used[l] = 1;
    for (int l : free_loop_components) {
        if (used[l]) throw std::invalid_argument("free loop label collides with an edge label");
        used[l] = 1;
    }
    if (std::find(used.begin(), used.end(), 0) != used.end())
        throw std::invalid_argument("component labels not contiguous");
    d.edge_component_ = std::move(edge_component);
    d.free_loop_components_ = std::move(free_loop_components);
    d.component_count_ = m;
    return d;
}

// ---------------------------------------------------------------------------
// PD parsing

namespace {

struct PdRow {
    std::array<long, 4> label;
};

std::vector<PdRow> tokenize_pd(const std::string& text) {
    std::vector<PdRow> rows;
    std::size_t i = 0;
    auto skip = [&] {
        while (i < text.size() &&
               (std::isspace(static_cast<unsigned char>(text[i])) || text[i] == ','))
            ++i;
    };
    skip();
    bool wrapped = false;
    if (text.compare(i, 3, "PD[") == 0) {
        wrapped = true;
        i += 3;
    }
    while (true) {
        skip();
        if (i >= text.size()) {
            if (wrapped) throw ParseError("unterminated PD[...]");
            break;
        }
        if (wrapped && text[i] == ']') {
            ++i;
            skip();
            if (i != text.size()) throw ParseError("trailing characters after PD[...]");
            break;
        }
        if (text[i] != 'X') throw ParseError("expected X[a,b,c,d]");
        ++i;
        skip();
        if (i >= text.size() || text[i] != '[') throw ParseError("expected '[' after X");
        ++i;
        PdRow row{};
        for (int k = 0; k < 4; ++k) {
            skip();
            std::size_t start = i;
            while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
            if (i == start) throw ParseError("expected arc label");
            row.label[k] = std::stol(text.substr(start, i - start));
            if (row.label[k] <= 0) throw ParseError("arc labels must be positive");
        }
        skip();
        if (i >= text.size() || text[i] != ']') throw ParseError("expected ']' closing X[...]");
        ++i;
        rows.push_back(row);
    }
    return rows;
}

}  // namespace

LinkDiagram parse_pd(const std::string& text) {
    std::vector<PdRow> rows = tokenize_pd(text);
    if (rows.empty()) {
        // `PD[]`: the 0-crossing unknot.
        return LinkDiagram::build({}, 1);
    }

    // Compact arc labels, checking multiplicity 2.
    std::map<long, int> count;
    for (const auto& r : rows)
        for (long l : r.label) ++count[l];
    for (const auto& [l, c] : count)
        if (c != 2)
            throw ParseError("arc multiplicity: label " + std::to_string(l) + " occurs " +
                             std::to_string(c) + " times");
    std::map<long, int> compact;
    for (const auto& [l, c] : count) compact.emplace(l, static_cast<int>(compact.size()));

    const int n = static_cast<int>(rows.size());
    std::vector<LinkDiagram::Crossing> xs(n);
    for (int c = 0; c < n; ++c)
        for (int s = 0; s < 4; ++s) xs[c].edge[s] = compact[rows[c].label[s]];

    // Resolve over-strand directions. Slots 0/2 are forced in/out; each edge
    // needs exactly one in-end and one out-end.
    const int E = static_cast<int>(compact.size());
    struct Occ {
        int crossing, slot;
    };
    std::vector<std::vector<Occ>> occ(E);
    for (int c = 0; c < n; ++c)
        for (int s = 0; s < 4; ++s) occ[xs[c].edge[s]].push_back({c, s});

    // over_dir: 0 unknown, 3 or 1 = resolved over_entry.
    std::vector<int> over_dir(n, 0);
    // edge state: 0 unknown, +1 first occurrence is the in-end, -1 the out-end.
    enum class EndKind { In, Out, Unknown };
    auto end_kind = [&](Occ o) {
        if (o.slot == 0) return EndKind::In;
        if (o.slot == 2) return EndKind::Out;
        if (over_dir[o.crossing] == 0) return EndKind::Unknown;
        return o.slot == over_dir[o.crossing] ? EndKind::In : EndKind::Out;
    };
    auto force = [&](Occ o, EndKind k, auto&& enqueue) {
        EndKind cur = end_kind(o);
        if (cur != EndKind::Unknown) {
            if (cur != k) throw ParseError("inconsistent orientation");
            return;
        }
        over_dir[o.crossing] = (k == EndKind::In) ? o.slot : (o.slot ^ 2);
        // Both over slots of this crossing just became determined.
        enqueue(xs[o.crossing].edge[1]);
        enqueue(xs[o.crossing].edge[3]);
    };

    std::vector<int> pending;
    std::vector<char> queued(E, 0);
    auto enqueue = [&](int e) {
        if (!queued[e]) {
            queued[e] = 1;
            pending.push_back(e);
        }
    };
    for (int e = 0; e < E; ++e) enqueue(e);
    while (true) {
        while (!pending.empty()) {
            int e = pending.back();
            pending.pop_back();
            queued[e] = 0;
            EndKind k0 = end_kind(occ[e][0]);
            EndKind k1 = end_kind(occ[e][1]);
            if (k0 == EndKind::Unknown && k1 == EndKind::Unknown) continue;
            if (k0 == EndKind::Unknown)
                force(occ[e][0], k1 == EndKind::In ? EndKind::Out : EndKind::In, enqueue);
            else if (k1 == EndKind::Unknown)
                force(occ[e][1], k0 == EndKind::In ? EndKind::Out : EndKind::In, enqueue);
            else if (k0 == k1)
                throw ParseError("inconsistent orientation");
        }
        // Components running entirely over: direction is a free choice.
        int free_c = -1;
        for (int c = 0; c < n; ++c)
            if (over_dir[c] == 0) {
                free_c = c;
                break;
            }
        if (free_c == -1) break;
        over_dir[free_c] = 3;
        enqueue(xs[free_c].edge[1]);
        enqueue(xs[free_c].edge[3]);
    }
    for (int c = 0; c < n; ++c) xs[c].over_entry = over_dir[c];
    return LinkDiagram::build(std::move(xs));
}

// ---------------------------------------------------------------------------
// Canonical form, rendering, equality

LinkDiagram canonicalize(const LinkDiagram& d) {
    const int E = d.edge_count();
    // Component order by smallest edge id; edges renumbered along traversal.
    std::vector<int> first_edge;
    std::vector<char> seen(E, 0);
    for (int e = 0; e < E; ++e) {
        if (seen[e]) continue;
        first_edge.push_back(e);
        int cur = e;
        do {
            seen[cur] = 1;
            cur = d.next_edge(cur);
        } while (cur != e);
    }
    std::vector<int> newid(E, -1);
    int next = 0;
    for (int start : first_edge) {
        int cur = start;
        do {
            newid[cur] = next++;
            cur = d.next_edge(cur);
        } while (cur != start);
    }
    std::vector<LinkDiagram::Crossing> xs = d.crossings();
    for (auto& x : xs)
        for (int s = 0; s < 4; ++s) x.edge[s] = newid[x.edge[s]];
    std::sort(xs.begin(), xs.end(),
              [](const auto& a, const auto& b) { return a.edge[0] < b.edge[0]; });
    return LinkDiagram::build(std::move(xs), d.free_loop_count());
}

std::string render_pd(const LinkDiagram& d) {
    LinkDiagram c = canonicalize(d);
    std::ostringstream os;
    os << "PD[";
    for (int i = 0; i < c.crossing_count(); ++i) {
        if (i) os << ",";
        const auto& x = c.crossing(i);
        os << "X[" << x.edge[0] + 1 << "," << x.edge[1] + 1 << "," << x.edge[2] + 1 << ","
           << x.edge[3] + 1 << "]";
    }
    os << "]";
    return os.str();
}

namespace {

// Label-independent encoding: edges renumbered by a deterministic multi-
// component walk from a seed edge, minimized over all seeds.
std::vector<int> canonical_code(const LinkDiagram& d) {
    const int E = d.edge_count();
    std::vector<int> best;
    if (E == 0) return {d.free_loop_count()};
    for (int seed = 0; seed < E; ++seed) {
        std::vector<int> newid(E, -1);
        std::vector<int> crossing_order;
        std::vector<char> crossing_seen(d.crossing_count(), 0);
        int next = 0;
        auto walk = [&](int start) {
            int e = start;
            do {
                newid[e] = next++;
                int c = d.head(e).crossing;
                if (!crossing_seen[c]) {
                    crossing_seen[c] = 1;
                    crossing_order.push_back(c);
                }
                e = d.next_edge(e);
            } while (e != start);
        };
        walk(seed);
        for (std::size_t i = 0; i < crossing_order.size(); ++i) {
            const auto& x = d.crossing(crossing_order[i]);
            for (int s = 0; s < 4; ++s)
                if (newid[x.edge[s]] == -1) walk(x.edge[s]);
        }
        std::vector<std::array<int, 5>> rows;
        rows.reserve(d.crossing_count());
        for (const auto& x : d.crossings())
            rows.push_back({newid[x.edge[0]], newid[x.edge[1]], newid[x.edge[2]],
                            newid[x.edge[3]], x.over_entry});
        std::sort(rows.begin(), rows.end());
        std::vector<int> code;
        code.push_back(d.free_loop_count());
        for (const auto& r : rows) code.insert(code.end(), r.begin(), r.end());
        if (best.empty() || code < best) best = std::move(code);
    }
    return best;
}

}  // namespace

bool same_diagram(const LinkDiagram& a, const LinkDiagram& b) {
    if (a.crossing_count() != b.crossing_count() || a.free_loop_count() != b.free_loop_count() ||
        a.component_count() != b.component_count())
        return false;
    return canonical_code(a) == canonical_code(b);
}

// ---------------------------------------------------------------------------
// Sublink and friends

namespace {

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(int a, int b) { parent[find(a)] = find(b); }
};

}  // namespace

LinkDiagram sublink(const LinkDiagram& d, const std::vector<int>& keep_in) {
    if (keep_in.empty()) throw std::invalid_argument("sublink: empty component set");
    std::vector<int> keep = keep_in;
    std::sort(keep.begin(), keep.end());
    keep.erase(std::unique(keep.begin(), keep.end()), keep.end());
    for (int c : keep)
        if (c < 0 || c >= d.component_count())
            throw std::invalid_argument("sublink: unknown component " + std::to_string(c));
    std::vector<int> new_label(d.component_count(), -1);
    for (std::size_t i = 0; i < keep.size(); ++i) new_label[keep[i]] = static_cast<int>(i);

    auto kept_edge = [&](int e) { return new_label[d.edge_component(e)] >= 0; };

    UnionFind uf(d.edge_count());
    std::vector<int> surviving;
    for (int c = 0; c < d.crossing_count(); ++c) {
        const auto& x = d.crossing(c);
        bool under = kept_edge(x.under_in());
        bool over = kept_edge(x.over_in());
        if (under && over) {
            surviving.push_back(c);
        } else if (under) {
            uf.unite(x.under_in(), x.under_out());
        } else if (over) {
            uf.unite(x.over_in(), x.over_out());
        }
    }

    // Compact representative edges that still touch a surviving crossing.
    std::map<int, int> edge_id;
    std::vector<LinkDiagram::Crossing> xs;
    std::vector<int> edge_label;
    for (int c : surviving) {
        LinkDiagram::Crossing x = d.crossing(c);
        for (int s = 0; s < 4; ++s) {
            int rep = uf.find(x.edge[s]);
            auto [it, inserted] = edge_id.emplace(rep, static_cast<int>(edge_id.size()));
            if (inserted) edge_label.push_back(new_label[d.edge_component(x.edge[s])]);
            x.edge[s] = it->second;
        }
        xs.push_back(x);
    }

    // Components that kept no crossing become free loops (including old free
    // loops that were kept).
    std::vector<char> has_crossing(keep.size(), 0);
    for (int l : edge_label) has_crossing[l] = 1;
    std::vector<int> free_loops;
    for (std::size_t i = 0; i < keep.size(); ++i)
        if (!has_crossing[i]) free_loops.push_back(static_cast<int>(i));
    return LinkDiagram::build_labeled(std::move(xs), std::move(edge_label), std::move(free_loops));
}

LinkDiagram split_union(const LinkDiagram& a, const LinkDiagram& b) {
    std::vector<LinkDiagram::Crossing> xs = a.crossings();
    const int eoff = a.edge_count();
    for (auto x : b.crossings()) {
        for (int s = 0; s < 4; ++s) x.edge[s] += eoff;
        xs.push_back(x);
    }
    std::vector<int> labels(a.edge_components());
    for (int e = 0; e < b.edge_count(); ++e)
        labels.push_back(b.edge_component(e) + a.component_count());
    std::vector<int> loops(a.free_loop_components());
    for (int l : b.free_loop_components()) loops.push_back(l + a.component_count());
    return LinkDiagram::build_labeled(std::move(xs), std::move(labels), std::move(loops));
}

LinkDiagram mirror(const LinkDiagram& d) {
    std::vector<LinkDiagram::Crossing> xs;
    xs.reserve(d.crossing_count());
    for (const auto& x : d.crossings()) {
        LinkDiagram::Crossing y;
        // Over and under swap; the counterclockwise order of ends is kept, so
        // the tuple is rotated to start at the new incoming under strand.
        int r = x.over_entry;  // old over-in becomes new under-in
        for (int s = 0; s < 4; ++s) y.edge[s] = x.edge[(s + r) % 4];
        // Old under-in (slot 0) sits at new slot (4-r)%4; it is the new over-in.
        y.over_entry = (4 - r) % 4;
        xs.push_back(y);
    }
    return LinkDiagram::build_labeled(std::move(xs), d.edge_components(),
                                      d.free_loop_components());
}

std::vector<std::vector<FaceSide>> diagram_faces(const LinkDiagram& d) {
    const int E = d.edge_count();
    std::vector<char> used_fwd(E, 0), used_bwd(E, 0);
    std::vector<std::vector<FaceSide>> faces;
    auto next_side = [&](FaceSide s) -> FaceSide {
        LinkDiagram::End at = s.dir > 0 ? d.head(s.edge) : d.tail(s.edge);
        int slot = (at.slot + 1) % 4;
        int e = d.crossing(at.crossing).edge[slot];
        bool forward = d.tail(e).crossing == at.crossing && d.tail(e).slot == slot;
        return {e, forward ? +1 : -1};
    };
    for (int e = 0; e < E; ++e)
        for (int dir : {+1, -1}) {
            auto& used = dir > 0 ? used_fwd : used_bwd;
            if (used[e]) continue;
            std::vector<FaceSide> face;
            FaceSide s{e, dir};
            do {
                (s.dir > 0 ? used_fwd : used_bwd)[s.edge] = 1;
                face.push_back(s);
                s = next_side(s);
            } while (!(s == FaceSide{e, dir}));
            faces.push_back(std::move(face));
        }
    return faces;
}

int connected_piece_count(const LinkDiagram& d) {
    const int n = d.crossing_count();
    std::vector<int> piece(n, -1);
    int pieces = 0;
    for (int c0 = 0; c0 < n; ++c0) {
        if (piece[c0] != -1) continue;
        std::vector<int> stack{c0};
        piece[c0] = pieces;
        while (!stack.empty()) {
            int c = stack.back();
            stack.pop_back();
            for (int s = 0; s < 4; ++s) {
                int e = d.crossing(c).edge[s];
                for (auto end : {d.head(e), d.tail(e)})
                    if (piece[end.crossing] == -1) {
                        piece[end.crossing] = piece[c];
                        stack.push_back(end.crossing);
                    }
            }
        }
        ++pieces;
    }
    return pieces;
}

bool planar(const LinkDiagram& d) {
    if (d.crossing_count() == 0) return true;
    int faces = static_cast<int>(diagram_faces(d).size());
    int euler = d.crossing_count() - d.edge_count() + faces;
    return euler == 2 * connected_piece_count(d);
}

LinkDiagram reverse_component(const LinkDiagram& d, int comp) {
    if (comp < 0 || comp >= d.component_count())
        throw std::invalid_argument("reverse_component: unknown component");
    std::vector<LinkDiagram::Crossing> xs;
    xs.reserve(d.crossing_count());
    for (const auto& x : d.crossings()) {
        bool under = d.edge_component(x.under_in()) == comp;
        bool over = d.edge_component(x.over_in()) == comp;
        LinkDiagram::Crossing y = x;
        if (under) {
            // Under strand now enters at the old slot 2; rotate by 2.
            for (int s = 0; s < 4; ++s) y.edge[s] = x.edge[(s + 2) % 4];
            y.over_entry = x.over_entry ^ 2;
        }
        if (over) y.over_entry ^= 2;
        xs.push_back(y);
    }
    return LinkDiagram::build_labeled(std::move(xs), d.edge_components(),
                                      d.free_loop_components());
}

}  // namespace splitbound
