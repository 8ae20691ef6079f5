#include <CLI11.hpp>

#include "splitbound/alexander.hpp"
#include "splitbound/bounds.hpp"
#include "splitbound/braid.hpp"
#include "splitbound/catalog.hpp"
#include "splitbound/covering.hpp"
#include "splitbound/dt.hpp"
#include "splitbound/families.hpp"
#include "splitbound/linking.hpp"
#include "splitbound/seifert.hpp"
#include "splitbound/tangle.hpp"

#include <iostream>

using namespace splitbound;

namespace {

#ifndef SPLITBOUND_DATA_DIR
#define SPLITBOUND_DATA_DIR "data"
#endif

LinkDiagram parse_any(const std::string& text) {
    if (text.rfind("BR[", 0) == 0) return braid_closure(parse_braid(text));
    if (text.rfind("MT[", 0) == 0) return tangle_closure(parse_tangle(text));
    if (text.rfind("PD", 0) == 0 || text.rfind("X[", 0) == 0) return parse_pd(text);
    if (text.rfind("(", 0) == 0) return realize_dt(parse_dt(text));
    throw ParseError("unrecognised input (expected PD[..], (DT..), BR[..] or MT[..])");
}

void apply_flips(LinkDiagram& d, const std::vector<int>& flips) {
    for (int f : flips) {
        if (f < 1 || f > d.component_count())
            throw std::invalid_argument("--orient component out of range");
        d = reverse_component(d, f - 1);
    }
}

void print_invariants(const LinkDiagram& d0, bool maximize_sigma) {
    LinkDiagram d = d0;
    std::cout << "components: " << d.component_count() << "\n";
    std::cout << "crossings:  " << d.crossing_count() << "\n";
    LinkingMatrix lk = linking_matrix(d);
    if (d.component_count() > 1) {
        std::cout << "linking:   ";
        for (int i = 0; i < lk.size(); ++i)
            for (int j = 0; j < i; ++j)
                std::cout << " lk(L" << j + 1 << ",L" << i + 1 << ")=" << lk(i, j);
        std::cout << "\n";
        std::cout << "a(L) = " << total_linking(lk) << ", sp parity "
                  << (splitting_parity(lk) ? "odd" : "even") << "\n";
    }
    AlexanderResult res = multivariable_alexander(d);
    std::cout << "alexander:  " << res.delta.to_string() << "\n";
    if (res.torres_value) std::cout << "|delta(1,1)| = " << *res.torres_value << "\n";
    SeifertData s = seifert_matrix(d);
    std::cout << "seifert:    circles " << s.circles << ", betti " << s.betti() << ", chi "
              << s.euler << "\n";
    std::cout << "signature:  " << signature(s) << " (nullity " << nullity(s) << ")\n";
    if (maximize_sigma && d.component_count() > 1) {
        int best = std::abs(signature(s));
        for (unsigned f = 1; f < (1u << d.component_count()); ++f) {
            LinkDiagram e = d;
            for (int c = 0; c < d.component_count(); ++c)
                if (f >> c & 1) e = reverse_component(e, c);
            best = std::max(best, std::abs(signature(e)));
        }
        std::cout << "max |sigma| over orientations: " << best << "\n";
    }
    if (d.component_count() == 2) {
        SplitObstruction obs = splitting_obstruction(res);
        std::cout << "sp=1 obstruction: ";
        switch (obs.verdict) {
            case SplitVerdict::ObstructsSpOne: std::cout << "fires"; break;
            case SplitVerdict::NoObstruction: std::cout << "does not fire"; break;
            case SplitVerdict::NotApplicable: std::cout << "not applicable (" << obs.note << ")"; break;
        }
        std::cout << "\n";
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"certified lower bounds for link splitting numbers"};
    app.require_subcommand(1);
    std::string default_catalog = std::string(SPLITBOUND_DATA_DIR) + "/links_le9.csv";
    std::string default_annotations = std::string(SPLITBOUND_DATA_DIR) + "/annotations.json";

    std::string input;
    std::vector<int> flips;
    auto* inv = app.add_subcommand("invariants", "invariants of a diagram, braid or tangle");
    inv->add_option("input", input, "PD[..], DT tuple, BR[..] or MT[..]")->required();
    inv->add_flag("--max-sigma", "also maximize |sigma| over component orientations");
    inv->add_option("--orient", flips, "components to reverse (1-based)");

    std::string bound_target, catalog_path, annotations_path;
    auto* bnd = app.add_subcommand("bound", "splitting-number lower bound with certificate");
    bnd->add_option("target", bound_target, "catalog name or diagram text")->required();
    bnd->add_option("--catalog", catalog_path, "catalog csv")->capture_default_str();
    bnd->add_option("--annotations", annotations_path, "annotation sidecar json");

    std::string axis_text;
    auto* cov = app.add_subcommand("cover", "2-fold covering link of an axis presentation");
    cov->add_option("--axis", axis_text, "BR[..] or MT[..] with the axis as branch")->required();

    bool check = false, json = false;
    auto* tab = app.add_subcommand("table", "run the whole catalog");
    tab->add_option("--catalog", catalog_path, "catalog csv");
    tab->add_option("--annotations", annotations_path, "annotation sidecar json");
    tab->add_flag("--check", check, "verify soundness against recorded values");
    tab->add_flag("--json", json, "emit JSON");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*inv) {
            LinkDiagram d = parse_any(input);
            apply_flips(d, flips);
            print_invariants(d, inv->count("--max-sigma") > 0);
        } else if (*bnd) {
            if (bound_target.rfind("L", 0) == 0 &&
                bound_target.find('[') == std::string::npos) {
                std::string csv = catalog_path.empty() ? default_catalog : catalog_path;
                std::string ann = annotations_path.empty() ? default_annotations : annotations_path;
                Catalog cat = load_catalog(csv, ann);
                const CatalogEntry* e = cat.find(bound_target);
                if (!e) {
                    std::cerr << "no catalog entry named " << bound_target << "\n";
                    return 1;
                }
                ReportOptions opt;
                report({*e}, opt, std::cout);
            } else {
                CatalogEntry ad_hoc;
                ad_hoc.name = "input";
                ad_hoc.pd = render_pd(parse_any(bound_target));
                LinkDiagram d = ad_hoc.diagram();
                ad_hoc.components = d.component_count();
                ad_hoc.crossings = d.crossing_count();
                ReportOptions opt;
                report({ad_hoc}, opt, std::cout);
            }
        } else if (*cov) {
            AxisPresentation p = axis_text.rfind("BR[", 0) == 0
                                     ? AxisPresentation::from_braid(parse_braid(axis_text))
                                     : AxisPresentation{parse_tangle(axis_text)};
            AxisLink al = axis_link(p);
            std::cout << "axis link: " << render_pd(al.diagram) << "\n";
            std::cout << "axis component: L" << al.axis_component + 1 << "\n";
            LinkDiagram cover = double_cover_along_axis(p);
            std::cout << "cover: " << render_pd(cover) << "\n";
            print_invariants(cover, true);
        } else if (*tab) {
            std::string csv = catalog_path.empty() ? default_catalog : catalog_path;
            std::string ann = annotations_path.empty() ? default_annotations : annotations_path;
            Catalog cat = load_catalog(csv, ann);
            ReportOptions opt;
            opt.check = check;
            opt.json = json;
            ReportResult res = report(cat.entries, opt, std::cout);
            if (!json)
                std::cout << res.checked << " entries checked, " << res.unrealized
                          << " unrealized, " << res.violations << " violations\n";
            return res.exit_code;
        }
    } catch (const ParseError& ex) {
        std::cerr << "parse error: " << ex.what() << "\n";
        return 1;
    } catch (const std::exception& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return 1;
    }
    return 0;
}
