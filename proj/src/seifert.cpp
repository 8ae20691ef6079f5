#include "splitbound/seifert.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>

namespace splitbound {

namespace {

using Side = FaceSide;

std::vector<std::vector<Side>> faces_of(const LinkDiagram& d) { return diagram_faces(d); }

// ---------------------------------------------------------------------------
// Seifert circles: oriented smoothing. Arriving at an in-slot, the smoothing
// continues: under-in joins over-out, over-in joins under-out.

int smoothing_next(const LinkDiagram& d, int e) {
    LinkDiagram::End h = d.head(e);
    const auto& x = d.crossing(h.crossing);
    return h.slot == 0 ? x.over_out() : x.under_out();
}

struct Circles {
    std::vector<int> of_edge;
    int count = 0;
};

Circles seifert_circles(const LinkDiagram& d) {
    Circles c;
    c.of_edge.assign(d.edge_count(), -1);
    for (int e0 = 0; e0 < d.edge_count(); ++e0) {
        if (c.of_edge[e0] != -1) continue;
        int e = e0;
        do {
            c.of_edge[e] = c.count;
            e = smoothing_next(d, e);
        } while (e != e0);
        ++c.count;
    }
    return c;
}

// ---------------------------------------------------------------------------
// Vogel's algorithm: while some face contains two same-direction sides on
// different Seifert circles, push one strand across the other (a Reidemeister
// II move that makes the circles compatible). Terminates in a diagram whose
// circles are coherently nested, i.e. a closed-braid form.

struct EdgeSplitter {
    std::vector<LinkDiagram::Crossing> xs;
    int next_edge_id;

    explicit EdgeSplitter(const LinkDiagram& d)
        : xs(d.crossings()), next_edge_id(d.edge_count()) {}

    void replace_at_head(const LinkDiagram& d, int e, int new_e) {
        auto h = d.head(e);
        xs[h.crossing].edge[h.slot] = new_e;
    }
};

LinkDiagram vogel_step(const LinkDiagram& d, Side s1, Side s2) {
    // The face walk keeps the face on the right of forward sides, so (+,+)
    // pairs see the face on the right of both edges and (-,-) pairs on the
    // left; each configuration gets its own splice tables.
    bool face_left = s1.dir < 0;
    int e1 = s1.edge, e2 = s2.edge;
    EdgeSplitter sp(d);
    int e1b = sp.next_edge_id++, e1c = sp.next_edge_id++;
    int e2b = sp.next_edge_id++, e2c = sp.next_edge_id++;
    sp.replace_at_head(d, e1, e1c);
    sp.replace_at_head(d, e2, e2c);
    LinkDiagram::Crossing xa, xb;
    if (face_left) {
        // Face above e1 (pointing right) and below e2 (pointing left); e2
        // bulges downward across e1, passing over. Feet: xa left, xb right.
        // e1: e1 -> xa -> e1b -> xb -> e1c ; e2: e2 -> xb -> e2b -> xa -> e2c.
        xa.edge = {e1, e2b, e1b, e2c};
        xa.over_entry = 1;
        xb.edge = {e1b, e2b, e1c, e2};
        xb.over_entry = 3;
    } else {
        // Face above e1 pointing left and below e2 pointing right.
        // e1: e1 -> xb -> e1b -> xa -> e1c ; e2: e2 -> xa -> e2b -> xb -> e2c.
        xa.edge = {e1b, e2, e1c, e2b};
        xa.over_entry = 1;
        xb.edge = {e1, e2c, e1b, e2b};
        xb.over_entry = 3;
    }
    sp.xs.push_back(xa);
    sp.xs.push_back(xb);
    return LinkDiagram::build(std::move(sp.xs), d.free_loop_count());
}

std::optional<std::pair<Side, Side>> find_incoherent(const LinkDiagram& d) {
    Circles c = seifert_circles(d);
    for (const auto& face : faces_of(d)) {
        for (std::size_t i = 0; i < face.size(); ++i)
            for (std::size_t j = i + 1; j < face.size(); ++j) {
                if (face[i].dir != face[j].dir) continue;
                if (c.of_edge[face[i].edge] == c.of_edge[face[j].edge]) continue;
                return std::make_pair(face[i], face[j]);
            }
    }
    return std::nullopt;
}

LinkDiagram vogel_coherent(LinkDiagram d) {
    int guard = 40 * d.crossing_count() * d.crossing_count() + 200;
    while (auto pair = find_incoherent(d)) {
        if (--guard < 0) throw std::logic_error("braiding did not terminate");
        d = vogel_step(d, pair->first, pair->second);
    }
    return d;
}

// ---------------------------------------------------------------------------
// Connected pieces of the 4-valent graph.

std::vector<LinkDiagram> split_pieces(const LinkDiagram& d) {
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
    std::vector<LinkDiagram> out;
    for (int p = 0; p < pieces; ++p) {
        std::vector<LinkDiagram::Crossing> xs;
        std::map<int, int> emap;
        for (int c = 0; c < n; ++c) {
            if (piece[c] != p) continue;
            LinkDiagram::Crossing x = d.crossing(c);
            for (int s = 0; s < 4; ++s) {
                auto [it, fresh] = emap.emplace(x.edge[s], static_cast<int>(emap.size()));
                x.edge[s] = it->second;
            }
            xs.push_back(x);
        }
        out.push_back(LinkDiagram::build(std::move(xs), 0));
    }
    return out;
}

// ---------------------------------------------------------------------------
// Reading the coherent (closed-braid) diagram: nesting path of circles and,
// per circle, the linear order of incident bands after cutting along a
// radial face path.

struct AnnularReading {
    int k = 0;                                    // circles on the path
    std::vector<int> band_annulus;                // per crossing: 1..k-1
    std::vector<std::map<int, int>> band_pos;     // per circle: crossing -> rank
};

AnnularReading read_annular(const LinkDiagram& d) {
    Circles cir = seifert_circles(d);
    const int k = cir.count;
    AnnularReading out;
    out.k = k;
    const int n = d.crossing_count();
    if (n == 0) return out;

    // Seifert graph must be a path after braiding.
    std::vector<std::map<int, int>> adj(k);  // neighbor -> band count
    std::vector<std::pair<int, int>> band_circles(n);
    for (int c = 0; c < n; ++c) {
        const auto& x = d.crossing(c);
        int ca = cir.of_edge[x.under_in()];
        int cb = cir.of_edge[x.over_in()];
        if (ca == cb) throw std::logic_error("self-banded Seifert circle after braiding");
        band_circles[c] = {ca, cb};
        adj[ca][cb]++;
        adj[cb][ca]++;
    }
    std::vector<int> ord;
    {
        int start = -1;
        for (int v = 0; v < k; ++v) {
            if (adj[v].size() > 2) throw std::logic_error("Seifert graph is not a path");
            if (adj[v].size() <= 1) start = v;
        }
        if (start == -1) throw std::logic_error("Seifert graph has a cycle");
        int prev = -1, cur = start;
        while (true) {
            ord.push_back(cur);
            int nxt = -1;
            for (auto [w, cnt] : adj[cur])
                if (w != prev) nxt = w;
            if (nxt == -1) break;
            prev = cur;
            cur = nxt;
        }
        if (static_cast<int>(ord.size()) != k) throw std::logic_error("Seifert graph disconnected");
    }
    std::vector<int> rank_of_circle(k);
    for (int i = 0; i < k; ++i) rank_of_circle[ord[i]] = i;

    out.band_annulus.assign(n, 0);
    for (int c = 0; c < n; ++c) {
        int ra = rank_of_circle[band_circles[c].first];
        int rb = rank_of_circle[band_circles[c].second];
        if (std::abs(ra - rb) != 1)
            throw std::logic_error("band joins non-adjacent circles after braiding");
        out.band_annulus[c] = std::max(ra, rb);
    }

    // Cyclic walk of each circle: sequence of (edge, crossing passed).
    std::vector<std::vector<std::pair<int, int>>> walk(k);  // (edge, crossing)
    {
        std::vector<char> seen(d.edge_count(), 0);
        for (int e0 = 0; e0 < d.edge_count(); ++e0) {
            if (seen[e0]) continue;
            int circle = cir.of_edge[e0];
            int e = e0;
            do {
                seen[e] = 1;
                walk[circle].push_back({e, d.head(e).crossing});
                e = smoothing_next(d, e);
            } while (e != e0);
        }
    }

    // Radial face path: start at a pole face (all sides on one end circle),
    // then cross one edge of each circle in nesting order.
    auto faces = faces_of(d);
    auto face_circles = [&](const std::vector<Side>& f) {
        std::vector<int> cs;
        for (const auto& s : f) cs.push_back(rank_of_circle[cir.of_edge[s.edge]]);
        std::sort(cs.begin(), cs.end());
        cs.erase(std::unique(cs.begin(), cs.end()), cs.end());
        return cs;
    };
    // cut_edge[i]: the edge of circle ord[i] where the radial path crosses it.
    std::vector<int> cut_edge(k, -1);
    {
        const std::vector<Side>* cur_face = nullptr;
        for (const auto& f : faces) {
            auto cs = face_circles(f);
            if (cs == std::vector<int>{0}) {
                cur_face = &f;
                break;
            }
        }
        if (!cur_face) throw std::logic_error("no pole face found");
        for (int i = 0; i < k; ++i) {
            // Cross circle ord[i] via one of the current face's sides on it.
            int via = -1;
            for (const auto& s : *cur_face)
                if (rank_of_circle[cir.of_edge[s.edge]] == i) via = s.edge;
            if (via == -1) throw std::logic_error("radial path blocked");
            cut_edge[i] = via;
            if (i + 1 == k) break;
            // The face on the other side of `via`.
            const std::vector<Side>* nxt = nullptr;
            for (const auto& f : faces) {
                if (&f == cur_face) continue;
                for (const auto& s : f)
                    if (s.edge == via) nxt = &f;
            }
            if (!nxt) throw std::logic_error("no face across the cut edge");
            cur_face = nxt;
        }
    }

    // Linear band order per circle: walk from just after the cut edge.
    out.band_pos.assign(k, {});
    for (int i = 0; i < k; ++i) {
        int circle = ord[i];
        const auto& w = walk[circle];
        int start = -1;
        for (std::size_t j = 0; j < w.size(); ++j)
            if (w[j].first == cut_edge[i]) start = static_cast<int>(j);
        if (start == -1) throw std::logic_error("cut edge not on its circle");
        int rank = 0;
        for (std::size_t j = 0; j < w.size(); ++j) {
            int c = w[(start + j) % w.size()].second;
            out.band_pos[i].emplace(c, rank++);
        }
    }

    // Bands of an annulus must appear in the same relative order on both
    // boundary circles.
    for (int a = 1; a < k; ++a) {
        std::vector<int> lo, hi;
        for (const auto& [c, r] : out.band_pos[a - 1])
            if (out.band_annulus[c] == a) lo.push_back(c);
        for (const auto& [c, r] : out.band_pos[a])
            if (out.band_annulus[c] == a) hi.push_back(c);
        auto by_rank = [&](const std::vector<int>& v, int circle_rank) {
            std::vector<int> s = v;
            std::sort(s.begin(), s.end(), [&](int x, int y) {
                return out.band_pos[circle_rank].at(x) < out.band_pos[circle_rank].at(y);
            });
            return s;
        };
        if (by_rank(lo, a - 1) != by_rank(hi, a))
            throw std::logic_error("band orders disagree across an annulus");
    }
    return out;
}

// ---------------------------------------------------------------------------
// Seifert pairing of the standard basis loops of the disc-band surface.

struct Loop {
    int annulus;    // 1..k-1
    int b1, b2;     // crossings, consecutive in the annulus order
};

std::vector<std::vector<Int>> pairing_matrix(const LinkDiagram& d, const AnnularReading& r) {
    const int k = r.k;
    std::vector<std::vector<int>> bands(k);  // per annulus, sorted by position
    for (int c = 0; c < d.crossing_count(); ++c) bands[r.band_annulus[c]].push_back(c);
    for (int a = 1; a < k; ++a)
        std::sort(bands[a].begin(), bands[a].end(),
                  [&](int x, int y) { return r.band_pos[a].at(x) < r.band_pos[a].at(y); });
    std::vector<Loop> loops;
    for (int a = 1; a < k; ++a)
        for (std::size_t i = 0; i + 1 < bands[a].size(); ++i)
            loops.push_back({a, bands[a][i], bands[a][i + 1]});

    const int g = static_cast<int>(loops.size());
    std::vector<std::vector<Int>> A(g, std::vector<Int>(g, 0));
    auto sign_of = [&](int c) { return d.crossing(c).sign(); };
    for (int i = 0; i < g; ++i) {
        int e1 = sign_of(loops[i].b1), e2 = sign_of(loops[i].b2);
        A[i][i] = -(e1 + e2) / 2;
    }
    for (int i = 0; i < g; ++i)
        for (int j = 0; j < g; ++j) {
            if (i == j) continue;
            const Loop &x = loops[i], &y = loops[j];
            if (x.annulus == y.annulus) {
                // Only consecutive loops interact, through the shared band.
                if (x.b2 == y.b1) {  // x just before y
                    int e = sign_of(x.b2);
                    if (e > 0)
                        A[i][j] += 1;
                    else
                        A[j][i] += -1;
                }
            } else if (y.annulus == x.annulus + 1) {
                // Interaction on the shared circle (rank = x.annulus).
                const auto& pos = r.band_pos[x.annulus];
                int p1 = pos.at(x.b1), p2 = pos.at(x.b2);
                int q1 = pos.at(y.b1), q2 = pos.at(y.b2);
                if (p1 < q1 && q1 < p2 && p2 < q2)
                    A[i][j] += -1;
                else if (q1 < p1 && p1 < q2 && q2 < p2)
                    A[i][j] += 1;
            }
        }
    return A;
}

}  // namespace

SeifertData seifert_matrix(const LinkDiagram& d) {
    SeifertData out;
    out.crossings = d.crossing_count();
    out.surface_components = d.free_loop_count();
    out.circles = d.free_loop_count();
    std::vector<std::vector<std::vector<Int>>> blocks;
    for (const auto& piece : split_pieces(d)) {
        LinkDiagram braided = vogel_coherent(piece);
        AnnularReading r = read_annular(braided);
        out.circles += r.k;
        out.crossings += braided.crossing_count() - piece.crossing_count();
        out.surface_components += 1;
        blocks.push_back(pairing_matrix(braided, r));
    }
    int g = 0;
    for (const auto& b : blocks) g += static_cast<int>(b.size());
    out.matrix.assign(g, std::vector<Int>(g, 0));
    int off = 0;
    for (const auto& b : blocks) {
        for (std::size_t i = 0; i < b.size(); ++i)
            for (std::size_t j = 0; j < b.size(); ++j) out.matrix[off + i][off + j] = b[i][j];
        off += static_cast<int>(b.size());
    }
    out.euler = out.circles - out.crossings;
    return out;
}

// ---------------------------------------------------------------------------
// Exact inertia, twice.

namespace {

using Rational = boost::multiprecision::cpp_rational;

Inertia inertia_by_congruence(std::vector<std::vector<Rational>> a) {
    const int n = static_cast<int>(a.size());
    Inertia out;
    std::vector<int> alive(n);
    std::iota(alive.begin(), alive.end(), 0);
    // Symmetric Gaussian elimination with the rank-2 trick for zero diagonals.
    while (!alive.empty()) {
        int piv = -1;
        for (int i : alive)
            if (a[i][i] != 0) piv = i;
        if (piv == -1) {
            int r = -1, c = -1;
            for (int i : alive)
                for (int j : alive)
                    if (i != j && a[i][j] != 0) {
                        r = i;
                        c = j;
                    }
            if (r == -1) {
                out.zero += static_cast<int>(alive.size());
                break;
            }
            // Congruence: add row/col c to row/col r, making a[r][r] = 2a[r][c] != 0.
            for (int j = 0; j < n; ++j) a[r][j] += a[c][j];
            for (int i = 0; i < n; ++i) a[i][r] += a[i][c];
            piv = r;
        }
        Rational p = a[piv][piv];
        (p > 0 ? out.positive : out.negative) += 1;
        std::vector<int> rest;
        for (int i : alive)
            if (i != piv) rest.push_back(i);
        std::vector<Rational> prow(n);
        for (int j : rest) prow[j] = a[piv][j];
        for (int i : rest) {
            Rational f = a[i][piv] / p;
            if (f == 0) continue;
            for (int j : rest) a[i][j] -= f * prow[j];
        }
        for (int i : rest) {
            a[i][piv] = 0;
            a[piv][i] = 0;
        }
        alive = std::move(rest);
    }
    return out;
}

// Characteristic polynomial by the Faddeev-LeVerrier recurrence; the
// division by k is exact over the integers.
std::vector<Int> char_poly(const std::vector<std::vector<Int>>& a) {
    const int n = static_cast<int>(a.size());
    std::vector<Int> c(n + 1, 0);
    c[n] = 1;  // p(x) = x^n + c_{n-1} x^{n-1} + ... + c_0
    std::vector<std::vector<Int>> m(n, std::vector<Int>(n, 0));
    for (int k = 1; k <= n; ++k) {
        // m <- a*m + c_{n-k+1} I
        std::vector<std::vector<Int>> am(n, std::vector<Int>(n, 0));
        for (int i = 0; i < n; ++i)
            for (int l = 0; l < n; ++l) {
                if (a[i][l] == 0) continue;
                for (int j = 0; j < n; ++j) am[i][j] += a[i][l] * m[l][j];
            }
        for (int i = 0; i < n; ++i) am[i][i] += c[n - k + 1];
        Int tr = 0;
        for (int i = 0; i < n; ++i)
            for (int l = 0; l < n; ++l) tr += a[i][l] * am[l][i];
        c[n - k] = -tr / k;
        m = std::move(am);
    }
    return c;
}

int sign_variations(const std::vector<Int>& seq) {
    int var = 0, last = 0;
    for (const Int& v : seq) {
        if (v == 0) continue;
        int s = v > 0 ? 1 : -1;
        if (last != 0 && s != last) ++var;
        last = s;
    }
    return var;
}

Inertia inertia_by_descartes(const std::vector<std::vector<Int>>& a) {
    const int n = static_cast<int>(a.size());
    std::vector<Int> p = char_poly(a);
    Inertia out;
    out.zero = 0;
    while (out.zero < n && p[out.zero] == 0) ++out.zero;
    // p(x)/x^zero has nonzero constant term; roots are real (symmetric input).
    std::vector<Int> pos, neg;
    for (int i = out.zero; i <= n; ++i) pos.push_back(p[i]);
    for (int i = out.zero; i <= n; ++i)
        neg.push_back((i - out.zero) % 2 == 0 ? p[i] : -p[i]);
    out.positive = sign_variations(pos);
    out.negative = sign_variations(neg);
    return out;
}

}  // namespace

Inertia symmetric_inertia(const std::vector<std::vector<Int>>& sym) {
    const int n = static_cast<int>(sym.size());
    for (const auto& row : sym)
        if (static_cast<int>(row.size()) != n) throw std::invalid_argument("non-square matrix");
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < i; ++j)
            if (sym[i][j] != sym[j][i]) throw std::invalid_argument("matrix not symmetric");
    std::vector<std::vector<Rational>> q(n, std::vector<Rational>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) q[i][j] = Rational(sym[i][j]);
    Inertia a = inertia_by_congruence(std::move(q));
    Inertia b = inertia_by_descartes(sym);
    if (a.positive != b.positive || a.negative != b.negative || a.zero != b.zero)
        throw std::logic_error("inertia algorithms disagree");
    return a;
}

namespace {

std::vector<std::vector<Int>> symmetrized(const SeifertData& s) {
    const int g = s.betti();
    std::vector<std::vector<Int>> sym(g, std::vector<Int>(g));
    for (int i = 0; i < g; ++i)
        for (int j = 0; j < g; ++j) sym[i][j] = s.matrix[i][j] + s.matrix[j][i];
    return sym;
}

}  // namespace

int signature(const SeifertData& s) { return symmetric_inertia(symmetrized(s)).signature(); }

int signature(const LinkDiagram& d) { return signature(seifert_matrix(d)); }

int nullity(const SeifertData& s) { return symmetric_inertia(symmetrized(s)).zero; }

int slice_genus_lower_bound(const LinkDiagram& knot) {
    if (knot.component_count() != 1)
        throw std::invalid_argument("slice genus bound applies to knots");
    int s = std::abs(signature(knot));
    return (s + 1) / 2;
}

Murasugi murasugi_obstruction(int sigma, int genus, int surface_b0, int link_components) {
    return std::abs(sigma) > 2 * genus + link_components - surface_b0 ? Murasugi::Obstructed
                                                                      : Murasugi::Consistent;
}

Murasugi murasugi_obstruction(const LinkDiagram& d, int genus, int surface_b0) {
    return murasugi_obstruction(signature(d), genus, surface_b0, d.component_count());
}

LaurentPoly seifert_alexander(const SeifertData& s) {
    const int g = s.betti();
    std::vector<std::vector<LaurentPoly>> m(g, std::vector<LaurentPoly>(g, LaurentPoly(1)));
    LaurentPoly t = LaurentPoly::term(1, 0, 1);
    for (int i = 0; i < g; ++i)
        for (int j = 0; j < g; ++j) {
            m[i][j] = LaurentPoly::constant(1, s.matrix[i][j]) -
                      t * LaurentPoly::constant(1, s.matrix[j][i]);
        }
    if (g == 0) return LaurentPoly::constant(1, 1);
    return determinant(m);
}

}  // namespace splitbound
