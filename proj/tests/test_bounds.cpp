#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "splitbound/bounds.hpp"
#include "splitbound/braid.hpp"
#include "splitbound/families.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

using namespace splitbound;

namespace {

std::string write_temp(const std::string& name, const std::string& text) {
    std::string path = std::string("/tmp/splitbound_test_") + name;
    std::ofstream out(path);
    out << text;
    return path;
}

CatalogEntry entry_for(const std::string& name, const LinkDiagram& d, int sp, int method) {
    CatalogEntry e;
    e.name = name;
    e.pd = render_pd(d);
    e.components = d.component_count();
    e.crossings = d.crossing_count();
    e.sp = sp;
    e.method = method;
    e.provenance = "construction";
    return e;
}

}  // namespace

TEST_SUITE_BEGIN("bounds");

TEST_CASE("catalog loader validation") {
    std::string good = write_temp("good.csv",
                                  "name,components,crossings,sp,method,provenance,dt,pd\n"
                                  "L2a1,2,2,1,1,construction,,\"PD[X[4,2,1,3],X[2,4,3,1]]\"\n"
                                  "Lx,2,0,2,1,unrealized,,\n");
    Catalog cat = load_catalog(good);
    CHECK(cat.entries.size() == 2);
    CHECK(cat.find("L2a1") != nullptr);
    CHECK(cat.find("L2a1")->has_diagram());
    CHECK_FALSE(cat.find("Lx")->has_diagram());
    CHECK(cat.find("nope") == nullptr);

    std::string dup = write_temp("dup.csv",
                                 "L2a1,2,2,1,1,c,,\n"
                                 "L2a1,2,2,1,1,c,,\n");
    CHECK_THROWS_WITH_AS(load_catalog(dup), doctest::Contains("duplicate"), std::runtime_error);

    // Hopf has odd parity; recording sp = 2 must fail the parity validation.
    std::string parity = write_temp("parity.csv",
                                    "Lbad,2,2,2,1,c,,\"PD[X[4,2,1,3],X[2,4,3,1]]\"\n");
    CHECK_THROWS_WITH_AS(load_catalog(parity), doctest::Contains("parity"), std::runtime_error);

    std::string badpd = write_temp("badpd.csv", "Lbad,2,2,1,1,c,,\"PD[X[1,1,1,2]]\"\n");
    CHECK_THROWS_AS(load_catalog(badpd), std::runtime_error);

    std::string schema = write_temp("schema.csv", "only,three,cols\n");
    CHECK_THROWS_WITH_AS(load_catalog(schema), doctest::Contains(":1:"), std::runtime_error);

    std::string empty = write_temp("empty.csv", "");
    CHECK(load_catalog(empty).entries.empty());
}

TEST_CASE("aggregate: hopf and whitehead") {
    BoundCertificate hopf = aggregate(entry_for("L2a1", positive_hopf(), 1, 1));
    CHECK(hopf.lower == 1);
    CHECK(hopf.method == Method::LinkingParity);
    CHECK(hopf.sharp);
    CHECK_FALSE(hopf.uses_cited);

    BoundCertificate wh = aggregate(entry_for("L5a1", whitehead_axis().diagram, 2, 1));
    CHECK(wh.lower == 2);
    CHECK(wh.method == Method::LinkingParity);  // the link itself is obstructive
    CHECK(wh.sharp);
}

TEST_CASE("aggregate: obstructive collections win method 2") {
    LinkDiagram two_borr = split_union(borromean_rings(), borromean_rings());
    BoundCertificate cert = aggregate(entry_for("2xborromean", two_borr, 4, 2));
    CHECK(cert.lower == 4);
    CHECK(cert.method == Method::LinkingPlusObstructive);
    CHECK(cert.sharp);
}

TEST_CASE("aggregate: cited unlinking bound") {
    CatalogEntry hopfish = entry_for("citedodd", positive_hopf(), 3, 3);
    hopfish.cited.push_back({"unlinking_number_at_least", "2", "someone-1993", ""});
    BoundCertificate cert = aggregate(hopfish);
    CHECK(cert.lower == 3);
    CHECK(cert.method == Method::UnlinkingCitation);
    CHECK(cert.uses_cited);
}

TEST_CASE("aggregate: unrealized entries") {
    CatalogEntry e;
    e.name = "Lx";
    e.sp = 2;
    BoundCertificate cert = aggregate(e);
    CHECK_FALSE(cert.realized);
    CHECK(cert.lower == 0);
}

TEST_CASE("aggregate: axis annotation validation failure") {
    CatalogEntry e = entry_for("wrong", positive_hopf(), 1, 1);
    e.axis = AxisAnnotation{"MT[2; U1,2,2,A3]", 0};  // whitehead tangle, not hopf
    CHECK_THROWS_WITH_AS(aggregate(e), doctest::Contains("does not match"), std::runtime_error);
}

TEST_CASE("report modes") {
    std::vector<CatalogEntry> entries{entry_for("L2a1", positive_hopf(), 1, 1)};
    std::ostringstream text;
    ReportOptions opt;
    ReportResult r = report(entries, opt, text);
    CHECK(r.exit_code == 0);
    CHECK(text.str().find("L2a1") != std::string::npos);

    std::ostringstream js;
    opt.json = true;
    report(entries, opt, js);
    CHECK(js.str().find("\"sharp\": true") != std::string::npos);

    // soundness violation: recorded sp below the computed bound
    std::vector<CatalogEntry> bad{entry_for("Lbad", braid_closure({2, {1, 1, 1, 1, 1, 1}}), 1, 1)};
    std::ostringstream sink;
    ReportOptions chk;
    chk.check = true;
    ReportResult rb = report(bad, chk, sink);
    CHECK(rb.exit_code == 2);
    CHECK(rb.violations == 1);
}

TEST_SUITE_END();
