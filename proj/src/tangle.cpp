#include "splitbound/tangle.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <numeric>
#include <sstream>

namespace splitbound {

MorseTangle MorseTangle::braid(int strands, const std::vector<int>& word) {
    MorseTangle t;
    t.width = strands;
    for (int w : word) {
        if (w == 0) throw ParseError("braid letter 0");
        t.events.push_back({Event::Crossing, std::abs(w), w > 0 ? +1 : -1});
    }
    t.validate();
    return t;
}

MorseTangle MorseTangle::repeated(int times) const {
    MorseTangle t;
    t.width = width;
    for (int i = 0; i < times; ++i)
        t.events.insert(t.events.end(), events.begin(), events.end());
    return t;
}

void MorseTangle::validate() const {
    if (width < 0) throw ParseError("negative tangle width");
    int w = width;
    for (const auto& e : events) {
        switch (e.kind) {
            case Event::Crossing:
                if (e.pos < 1 || e.pos + 1 > w)
                    throw ParseError("crossing position out of range");
                break;
            case Event::Cup:
                if (e.pos < 1 || e.pos > w + 1) throw ParseError("cup position out of range");
                w += 2;
                break;
            case Event::Cap:
                if (e.pos < 1 || e.pos + 1 > w) throw ParseError("cap position out of range");
                w -= 2;
                break;
        }
    }
    if (w != width) throw ParseError("tangle does not return to its boundary width");
}

MorseTangle parse_tangle(const std::string& text) {
    MorseTangle t;
    std::size_t i = 0;
    auto skip = [&] {
        while (i < text.size() && (std::isspace(static_cast<unsigned char>(text[i])) || text[i] == ','))
            ++i;
    };
    skip();
    if (text.compare(i, 3, "MT[") != 0) throw ParseError("expected MT[d; ...]");
    i += 3;
    skip();
    std::size_t start = i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    if (i == start) throw ParseError("expected tangle width");
    t.width = std::stoi(text.substr(start, i - start));
    skip();
    if (i >= text.size() || text[i] != ';') throw ParseError("expected ';' after width");
    ++i;
    while (true) {
        skip();
        if (i >= text.size()) throw ParseError("unterminated MT[...]");
        if (text[i] == ']') {
            ++i;
            break;
        }
        MorseTangle::Event ev{};
        if (text[i] == 'U' || text[i] == 'A') {
            ev.kind = text[i] == 'U' ? MorseTangle::Event::Cup : MorseTangle::Event::Cap;
            ++i;
            std::size_t s = i;
            while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
            if (i == s) throw ParseError("expected position after U/A");
            ev.pos = std::stoi(text.substr(s, i - s));
        } else {
            int sign = 1;
            if (text[i] == '-' || text[i] == '+') {
                if (text[i] == '-') sign = -1;
                ++i;
            }
            std::size_t s = i;
            while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
            if (i == s) throw ParseError("expected crossing index");
            ev.kind = MorseTangle::Event::Crossing;
            ev.pos = std::stoi(text.substr(s, i - s));
            ev.sign = sign;
        }
        t.events.push_back(ev);
    }
    t.validate();
    return t;
}

std::string render_tangle(const MorseTangle& t) {
    std::ostringstream os;
    os << "MT[" << t.width << ";";
    for (std::size_t k = 0; k < t.events.size(); ++k) {
        os << (k ? "," : " ");
        const auto& e = t.events[k];
        if (e.kind == MorseTangle::Event::Cup)
            os << "U" << e.pos;
        else if (e.kind == MorseTangle::Event::Cap)
            os << "A" << e.pos;
        else
            os << (e.sign < 0 ? "-" : "") << e.pos;
    }
    os << "]";
    return os.str();
}

// ---------------------------------------------------------------------------
// Geometry: crossings carry four ports in counterclockwise order
// SW=0, SE=1, NE=2, NW=3; the strand through SW-NE is "diagonal 0", through
// SE-NW "diagonal 1". over_diag records which diagonal is on top.

namespace {

struct InternalCrossing {
    std::array<int, 4> strand_end;  // provisional end ids at SW,SE,NE,NW
    int over_diag;                  // 0: SW-NE on top, 1: SE-NW on top
};

struct Builder {
    std::vector<InternalCrossing> crossings;
    std::vector<int> parent;  // union-find over strand-end ids

    int fresh() {
        parent.push_back(static_cast<int>(parent.size()));
        return parent.back();
    }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(int a, int b) { parent[find(a)] = find(b); }
};

// Runs the Morse word, returning per-position open end ids at top; `cur`
// starts as the bottom ends.
void run_events(Builder& b, const MorseTangle& t, std::vector<int>& cur) {
    for (const auto& e : t.events) {
        int i = e.pos - 1;
        switch (e.kind) {
            case MorseTangle::Event::Cup: {
                int f = b.fresh();
                cur.insert(cur.begin() + i, 2, f);
                break;
            }
            case MorseTangle::Event::Cap: {
                b.unite(cur[i], cur[i + 1]);
                cur.erase(cur.begin() + i, cur.begin() + i + 2);
                break;
            }
            case MorseTangle::Event::Crossing: {
                int a = cur[i], c = b.fresh();      // diagonal 0: SW -> NE
                int bb = cur[i + 1], d = b.fresh();  // diagonal 1: SE -> NW
                InternalCrossing x;
                x.strand_end = {a, bb, c, d};
                x.over_diag = e.sign > 0 ? 0 : 1;
                b.crossings.push_back(x);
                cur[i] = d;
                cur[i + 1] = c;
                break;
            }
        }
    }
}

// Finalize a port graph into an oriented diagram. Each end-id class must
// contain exactly two crossing ports (or none: a free loop). For each
// tracked provisional id, *track_edges receives its edge id (-1 for a
// port-less class).
LinkDiagram finalize(Builder& b, const std::vector<int>& track_ids = {},
                     std::vector<int>* track_edges = nullptr) {
    const int n = static_cast<int>(b.crossings.size());
    // Map end classes to edges and collect the two ports of each edge.
    std::vector<int> edge_of_class(b.parent.size(), -1);
    struct Port {
        int crossing, port;
    };
    std::vector<std::array<Port, 2>> ports;
    std::vector<int> port_count;
    int free_loops = 0;
    for (int c = 0; c < n; ++c)
        for (int p = 0; p < 4; ++p) {
            int cls = b.find(b.crossings[c].strand_end[p]);
            if (edge_of_class[cls] == -1) {
                edge_of_class[cls] = static_cast<int>(ports.size());
                ports.push_back({});
                port_count.push_back(0);
            }
            int e = edge_of_class[cls];
            if (port_count[e] >= 2) throw std::logic_error("end class with more than two ports");
            ports[e][port_count[e]++] = {c, p};
        }
    for (std::size_t cls = 0; cls < b.parent.size(); ++cls)
        if (b.find(static_cast<int>(cls)) == static_cast<int>(cls) && edge_of_class[cls] == -1)
            ++free_loops;
    const int E = static_cast<int>(ports.size());
    for (int e = 0; e < E; ++e)
        if (port_count[e] != 2) throw std::logic_error("open strand end after closure");

    // Orient: walk each curve, recording the direction of every edge.
    // edge_dir[e]: the index in ports[e] of the end the edge points INTO.
    std::vector<int> edge_dir(E, -1);
    std::vector<std::array<int, 4>> edge_at(n);  // edge id per port
    for (int e = 0; e < E; ++e)
        for (int k = 0; k < 2; ++k) edge_at[ports[e][k].crossing][ports[e][k].port] = e;
    auto other_port = [&](Port p) -> Port {
        // Continuation through the crossing: SW<->NE, SE<->NW.
        return {p.crossing, p.port ^ 2};
    };
    for (int e0 = 0; e0 < E; ++e0) {
        if (edge_dir[e0] != -1) continue;
        int e = e0, into = 1;
        do {
            edge_dir[e] = into;
            Port arrival = ports[e][into];
            Port departure = other_port(arrival);
            int enext = edge_at[departure.crossing][departure.port];
            into = (ports[enext][0].crossing == departure.crossing &&
                    ports[enext][0].port == departure.port)
                       ? 1
                       : 0;
            e = enext;
        } while (e != e0);
    }

    // Emit PD crossings: rotate (SW,SE,NE,NW) so slot 0 is the incoming
    // under end.
    std::vector<LinkDiagram::Crossing> xs(n);
    for (int c = 0; c < n; ++c) {
        const auto& pc = b.crossings[c];
        int under_diag = pc.over_diag ^ 1;
        auto incoming_at = [&](int port) {
            int e = edge_at[c][port];
            Port into = ports[e][edge_dir[e]];
            return into.crossing == c && into.port == port;
        };
        int under_in_port = -1, over_in_port = -1;
        for (int p = 0; p < 4; ++p) {
            if (!incoming_at(p)) continue;
            if ((p % 2) == under_diag)
                under_in_port = p;
            else
                over_in_port = p;
        }
        if (under_in_port < 0 || over_in_port < 0)
            throw std::logic_error("crossing without incoming ends");
        for (int s = 0; s < 4; ++s) xs[c].edge[s] = edge_at[c][(under_in_port + s) % 4];
        xs[c].over_entry = (over_in_port - under_in_port + 4) % 4;
    }
    LinkDiagram d = LinkDiagram::build(std::move(xs), free_loops);
    if (track_edges) {
        track_edges->clear();
        for (int id : track_ids) track_edges->push_back(edge_of_class[b.find(id)]);
    }
    return d;
}

}  // namespace

LinkDiagram tangle_closure(const MorseTangle& t) { return tangle_closure_cut(t).diagram; }

TangleClosureCut tangle_closure_cut(const MorseTangle& t) {
    t.validate();
    Builder b;
    std::vector<int> cur;
    for (int p = 0; p < t.width; ++p) cur.push_back(b.fresh());
    std::vector<int> bottom = cur;
    run_events(b, t, cur);
    for (int p = 0; p < t.width; ++p) b.unite(cur[p], bottom[p]);
    TangleClosureCut out;
    std::vector<int> cut_edges_of;  // provisional-id class -> cut multiplicity
    if (t.width == 0 && t.events.empty()) {
        out.diagram = LinkDiagram::build({}, 0);
        return out;
    }
    std::vector<std::pair<int, int>> track;  // (class rep, multiplicity)
    for (int p = 0; p < t.width; ++p) {
        int rep = b.find(bottom[p]);
        bool seen = false;
        for (auto& [r, m] : track)
            if (r == rep) {
                ++m;
                seen = true;
            }
        if (!seen) track.push_back({rep, 1});
    }
    std::vector<int> reps;
    for (auto& [r, m] : track)
        if (m % 2 == 1) reps.push_back(r);
    std::vector<int> edges;
    out.diagram = finalize(b, reps, &edges);
    for (std::size_t i = 0; i < reps.size(); ++i) {
        if (edges[i] >= 0)
            out.cut_edges.push_back(edges[i]);
        else
            ++out.odd_cut_loops;
    }
    return out;
}

AxisLink tangle_closure_with_axis(const MorseTangle& t) {
    t.validate();
    // Axis as an extra strand sweeping under the others to the left and back
    // over them: positions d+1 down to 1 and back, all positive letters.
    MorseTangle ext = t;
    ext.width = t.width + 1;
    for (int i = t.width; i >= 1; --i)
        ext.events.push_back({MorseTangle::Event::Crossing, i, +1});
    for (int i = 1; i <= t.width; ++i)
        ext.events.push_back({MorseTangle::Event::Crossing, i, +1});

    Builder b;
    std::vector<int> cur;
    for (int p = 0; p < ext.width; ++p) cur.push_back(b.fresh());
    std::vector<int> bottom = cur;
    int axis_end = bottom[ext.width - 1];
    run_events(b, ext, cur);
    for (int p = 0; p < ext.width; ++p) b.unite(cur[p], bottom[p]);
    AxisLink out;
    std::vector<int> edges;
    out.diagram = finalize(b, {axis_end}, &edges);
    if (edges[0] < 0) throw std::logic_error("axis has no crossings");
    out.axis_component = out.diagram.edge_component(edges[0]);
    return out;
}

LinkDiagram assemble_ports(const std::vector<PortCrossing>& crossings, int free_loops) {
    Builder b;
    int max_id = -1;
    for (const auto& x : crossings)
        for (int e : x.end) max_id = std::max(max_id, e);
    for (int i = 0; i <= max_id; ++i) b.fresh();
    for (const auto& x : crossings) {
        InternalCrossing ic;
        ic.strand_end = x.end;
        ic.over_diag = x.over_diag;
        b.crossings.push_back(ic);
    }
    LinkDiagram d = finalize(b);
    if (free_loops == 0) return d;
    std::vector<int> labels(d.edge_count());
    for (int e = 0; e < d.edge_count(); ++e) labels[e] = d.edge_component(e);
    std::vector<int> loop_labels(d.free_loop_components());
    int base = d.component_count();
    for (int i = 0; i < free_loops; ++i) loop_labels.push_back(base + i);
    return LinkDiagram::build_labeled(
        std::vector<LinkDiagram::Crossing>(d.crossings()), std::move(labels),
        std::move(loop_labels));
}

std::vector<int> tangle_permutation(const MorseTangle& t) {
    t.validate();
    Builder b;
    std::vector<int> cur;
    for (int p = 0; p < t.width; ++p) cur.push_back(b.fresh());
    std::vector<int> bottom = cur;
    run_events(b, t, cur);
    std::vector<int> perm(t.width, -1);
    for (int p = 0; p < t.width; ++p) {
        int cls = b.find(cur[p]);
        for (int q = 0; q < t.width; ++q)
            if (b.find(bottom[q]) == cls) {
                if (perm[q] != -1 && perm[q] != p)
                    throw std::logic_error("ambiguous boundary pairing");
                perm[q] = p;
            }
    }
    for (int q = 0; q < t.width; ++q)
        if (perm[q] == -1)
            throw std::invalid_argument("tangle pairs boundary points on one side");
    return perm;
}

}  // namespace splitbound
