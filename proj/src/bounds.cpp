#include "splitbound/bounds.hpp"

#include "splitbound/alexander.hpp"
#include "splitbound/covering.hpp"
#include "splitbound/linking.hpp"
#include "splitbound/seifert.hpp"

#include <json.hpp>

#include <algorithm>
#include <numeric>
#include <ostream>
#include <sstream>

namespace splitbound {

const char* method_name(Method m) {
    switch (m) {
        case Method::LinkingParity: return "linking-parity";
        case Method::LinkingPlusObstructive: return "linking+obstructive";
        case Method::UnlinkingCitation: return "unlinking/covering-odd";
        case Method::AlexanderDivisibility: return "alexander-divisibility";
        case Method::CoveringEvenCase: return "covering-even";
    }
    return "?";
}

namespace {

struct Candidate {
    int bound;
    Method method;
    std::vector<Evidence> evidence;
    bool cited = false;
};

// Does some component bijection (with per-component orientation flips)
// identify the two diagrams' linking data and Alexander polynomials,
// mapping `comp_a` of `a` to `comp_b` of `b`?
bool same_link_data(const LinkDiagram& a, int comp_a, const LinkDiagram& b, int comp_b) {
    const int m = a.component_count();
    if (b.component_count() != m) return false;
    LinkingMatrix la = linking_matrix(a), lb = linking_matrix(b);
    LaurentPoly da = alexander_polynomial(a).normalize();
    LaurentPoly db = alexander_polynomial(b);
    std::vector<int> perm(m);
    std::iota(perm.begin(), perm.end(), 0);
    do {
        if (comp_a >= 0 && perm[comp_a] != comp_b) continue;
        bool lk_ok = true;
        for (int i = 0; i < m && lk_ok; ++i)
            for (int j = 0; j < i && lk_ok; ++j)
                if (std::abs(la(i, j)) != std::abs(lb(perm[i], perm[j]))) lk_ok = false;
        if (!lk_ok) continue;
        // perm maps a-components to b-components; permute b's variables back.
        LaurentPoly dbp = db.permute_vars(perm);
        for (unsigned flips = 0; flips < (1u << m); ++flips) {
            LaurentPoly v = dbp;
            for (int i = 0; i < m; ++i)
                if (flips >> i & 1) v = v.invert_var(i);
            if (v.normalize() == da) return true;
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

int max_abs_signature_over_orientations(const CoverDiagram& cover, int base_components) {
    int best = 0;
    for (unsigned flips = 0; flips < (1u << base_components); ++flips) {
        LinkDiagram d = cover.diagram;
        for (int c = 0; c < d.component_count(); ++c) {
            int p = cover.projection[c];
            if (p >= 0 && (flips >> p & 1)) d = reverse_component(d, c);
        }
        best = std::max(best, std::abs(signature(d)));
    }
    return best;
}

bool components_look_unknotted(const AlexanderResult& res) {
    for (const auto& p : res.component_delta)
        if (!unit_equal(p, LaurentPoly::constant(1, 1))) return false;
    return true;
}

}  // namespace

BoundCertificate aggregate(const CatalogEntry& entry) {
    BoundCertificate cert;
    cert.name = entry.name;
    if (entry.sp >= 0) cert.upper = entry.sp;
    if (!entry.has_diagram()) {
        cert.realized = false;
        cert.evidence.push_back({"no diagram bundled for this entry", false});
        return cert;
    }
    cert.realized = true;
    LinkDiagram d = entry.diagram();
    const int m = d.component_count();
    LinkingMatrix lk = linking_matrix(d);
    cert.parity = splitting_parity(lk);
    cert.lemma = lemma_lower_bound(d);

    std::vector<Candidate> candidates;
    {
        std::ostringstream ev;
        ev << "a(L) = " << cert.lemma.a;
        if (cert.lemma.detail.full_link_obstructive) ev << "; the link itself is obstructive";
        candidates.push_back({cert.lemma.self_only_bound, Method::LinkingParity, {{ev.str(), false}}});
    }
    if (cert.lemma.bound > cert.lemma.self_only_bound) {
        std::ostringstream ev;
        ev << "a(L) = " << cert.lemma.a << ", c(L) >= " << cert.lemma.c << " via";
        for (const auto& s : cert.lemma.detail.witness.members) {
            ev << " {";
            for (std::size_t i = 0; i < s.size(); ++i) ev << (i ? " " : "") << "L" << s[i] + 1;
            ev << "}";
        }
        candidates.push_back({cert.lemma.bound, Method::LinkingPlusObstructive, {{ev.str(), false}}});
    }

    std::optional<AlexanderResult> adata;
    if (m == 2) {
        adata = multivariable_alexander(d);
        SplitObstruction obs = splitting_obstruction(*adata);
        if (obs.verdict == SplitVerdict::ObstructsSpOne && *cert.parity == 1) {
            std::ostringstream ev;
            ev << "delta(s,1)*delta(1,t) = " << obs.divisor.to_string()
               << " does not divide delta(s,t)";
            candidates.push_back({3, Method::AlexanderDivisibility, {{ev.str(), false}}});
        }
    }

    // Cited unlinking-number facts.
    for (const auto& c : entry.cited) {
        if (c.kind != "unlinking_number_at_least") continue;
        int u0 = std::stoi(c.value);
        bool unknotted_ok = true;
        if (m == 2 && adata) unknotted_ok = components_look_unknotted(*adata);
        std::ostringstream ev;
        ev << "unlinking number >= " << u0 << " [" << c.ref << "]";
        if (!c.note.empty()) ev << " (" << c.note << ")";
        if (*cert.parity == 1 && u0 >= 2 && unknotted_ok)
            candidates.push_back({3, Method::UnlinkingCitation, {{ev.str(), true}}, true});
        if (*cert.parity == 0 && u0 >= 3 && unknotted_ok)
            candidates.push_back({4, Method::CoveringEvenCase, {{ev.str(), true}}, true});
    }

    // Covering routes from an axis presentation of the link.
    if (entry.axis) {
        MorseTangle t = parse_tangle(entry.axis->tangle);
        AxisLink al = tangle_closure_with_axis(t);
        if (!same_link_data(d, entry.axis->branch, al.diagram, al.axis_component))
            throw std::runtime_error(entry.name +
                                     ": axis presentation does not match the catalog diagram");
        TangleClosureCut base = tangle_closure_cut(t);
        CoverDiagram cover = branched_double_cover(base.diagram, base.cut_edges, base.odd_cut_loops);
        LemmaBound jb = lemma_lower_bound(cover.diagram);
        int spi = (jb.bound + 1) / 2;
        int branch = entry.axis->branch;
        bool branch_unlinked = true;
        for (int k = 0; k < m; ++k)
            if (k != branch && lk(branch, k) != 0) branch_unlinked = false;

        if (m == 2 && *cert.parity == 1 && cover.diagram.component_count() == 1) {
            // Odd case with a covering knot: sp = 1 would force it slice.
            if (theorem11_obstruction(cover.diagram, 0) == CoverVerdict::Obstructed) {
                std::ostringstream ev;
                ev << "covering knot has |sigma| = " << std::abs(signature(cover.diagram))
                   << " > 0, so it is not slice";
                candidates.push_back({3, Method::UnlinkingCitation, {{ev.str(), false}}});
            } else {
                for (const auto& c : entry.cited) {
                    if (c.kind != "covering_knot_not_slice") continue;
                    std::ostringstream ev;
                    ev << "covering knot is not slice [" << c.ref << "]";
                    if (!c.note.empty()) ev << " (" << c.note << ")";
                    candidates.push_back({3, Method::UnlinkingCitation, {{ev.str(), true}}, true});
                }
            }
        }

        if (m >= 3 && *cert.parity == 1 && cert.lemma.a == 1 && branch_unlinked && spi >= 2) {
            // A single crossing change would have to avoid the branch
            // component, contradicting sp_i >= 2.
            std::ostringstream ev;
            ev << "cover splitting bound " << jb.bound << " gives sp_" << branch + 1
               << " >= " << spi << "; a single change avoids L" << branch + 1;
            candidates.push_back({3, Method::UnlinkingCitation, {{ev.str(), false}}});

            if (spi >= 4) {
                // sp = 3 would need two branch changes and one between the
                // linked pair; the cover would bound chi = -2 connected
                // surface, refuted by Murasugi.
                int mj = cover.diagram.component_count();
                int sig = max_abs_signature_over_orientations(cover, m);
                if (murasugi_obstruction(sig, 0, 1, mj) == Murasugi::Obstructed) {
                    std::ostringstream ev2;
                    ev2 << "sp_" << branch + 1 << " >= " << spi << " and |sigma(cover)| = " << sig
                        << " > " << mj - 1 << " rejects the 3-change budget (chi = -2)";
                    candidates.push_back({5, Method::CoveringEvenCase, {{ev2.str(), false}}});
                }
            }
        }

        if (m == 2 && *cert.parity == 0 && cover.diagram.component_count() == 2) {
            // Even case: sp = 2 would make the cover weakly slice.
            bool obstructed = false;
            std::ostringstream ev;
            int sig = max_abs_signature_over_orientations(cover, m);
            if (sig > 1) {
                obstructed = true;
                ev << "|sigma(cover)| = " << sig << " > 1: no annulus";
            } else if (entry.band_sum) {
                LinkDiagram knot = internal_band_sum(cover.diagram, entry.band_sum->edge_a,
                                                     entry.band_sum->edge_b, entry.band_sum->twists);
                if (weak_slice_band_sum_obstruction(knot) == WeakSlice::Obstructed) {
                    obstructed = true;
                    ev << "internal band sum of the cover has |sigma| = "
                       << std::abs(signature(knot)) << ", slice genus >= 2";
                }
            }
            if (obstructed && cert.lemma.bound >= 2)
                candidates.push_back({4, Method::CoveringEvenCase, {{ev.str(), false}}});
        }
    }

    // Direct covering-knot transcription (used when no axis form is known).
    if (!entry.axis && entry.cover_pd && m == 2 && *cert.parity == 1) {
        LinkDiagram cover = parse_pd(*entry.cover_pd);
        if (cover.component_count() == 1) {
            if (theorem11_obstruction(cover, 0) == CoverVerdict::Obstructed) {
                candidates.push_back(
                    {3, Method::UnlinkingCitation, {{"transcribed covering knot is not slice (signature)", false}}});
            } else {
                for (const auto& c : entry.cited)
                    if (c.kind == "covering_knot_not_slice")
                        candidates.push_back({3,
                                              Method::UnlinkingCitation,
                                              {{"transcribed covering knot is not slice [" + c.ref + "]", true}},
                                              true});
            }
        }
    }

    // Winner: largest bound, then smallest method tag.
    const Candidate* best = nullptr;
    for (const auto& c : candidates)
        if (!best || c.bound > best->bound ||
            (c.bound == best->bound && static_cast<int>(c.method) < static_cast<int>(best->method)))
            best = &c;
    cert.lower = best->bound;
    cert.method = best->method;
    cert.uses_cited = best->cited;
    cert.evidence = best->evidence;
    if (cert.upper) cert.sharp = cert.lower == *cert.upper;
    if (cert.parity && cert.lower % 2 != *cert.parity && cert.lower > 0)
        throw std::logic_error(entry.name + ": bound violates its own parity");
    return cert;
}

ReportResult report(const std::vector<CatalogEntry>& entries, const ReportOptions& options,
                    std::ostream& out) {
    ReportResult res;
    nlohmann::json jout = nlohmann::json::array();
    for (const auto& e : entries) {
        BoundCertificate cert = aggregate(e);
        if (!cert.realized) {
            ++res.unrealized;
        } else {
            ++res.checked;
            if (options.check && cert.upper) {
                bool parity_ok = cert.parity && (*cert.upper % 2 == *cert.parity);
                if (cert.lower > *cert.upper || !parity_ok) ++res.violations;
            }
        }
        if (options.json) {
            nlohmann::json j;
            j["name"] = cert.name;
            j["realized"] = cert.realized;
            j["lower"] = cert.lower;
            if (cert.parity) j["parity"] = *cert.parity == 1 ? "odd" : "even";
            if (cert.realized) j["method"] = static_cast<int>(cert.method);
            if (cert.upper) j["recorded_sp"] = *cert.upper;
            j["sharp"] = cert.sharp;
            j["uses_cited_assumptions"] = cert.uses_cited;
            auto ev = nlohmann::json::array();
            for (const auto& line : cert.evidence)
                ev.push_back({{"line", line.line}, {"cited", line.cited}});
            j["evidence"] = ev;
            jout.push_back(std::move(j));
        } else {
            out << cert.name << ": ";
            if (!cert.realized) {
                out << "unrealized";
                if (cert.upper) out << " (recorded sp " << *cert.upper << ")";
                out << "\n";
                continue;
            }
            out << "sp >= " << cert.lower;
            if (cert.parity) out << " (" << (*cert.parity ? "odd" : "even") << ")";
            out << "  method " << static_cast<int>(cert.method) << " [" << method_name(cert.method)
                << "]";
            if (cert.upper) out << "  recorded " << *cert.upper << (cert.sharp ? " sharp" : "");
            if (cert.uses_cited) out << "  cited-assumption";
            out << "\n";
            for (const auto& line : cert.evidence) out << "    " << line.line << "\n";
        }
    }
    if (options.json) out << jout.dump(2) << "\n";
    if (options.check && res.violations > 0) res.exit_code = 2;
    return res;
}

}  // namespace splitbound
