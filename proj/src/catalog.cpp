#include "splitbound/catalog.hpp"

#include "splitbound/linking.hpp"

#include <json.hpp>

#include <fstream>
#include <set>
#include <sstream>

namespace splitbound {

LinkDiagram CatalogEntry::diagram() const {
    if (pd.empty()) throw std::runtime_error("catalog entry " + name + " has no diagram");
    return parse_pd(pd);
}

const CatalogEntry* Catalog::find(const std::string& name) const {
    for (const auto& e : entries)
        if (e.name == name) return &e;
    return nullptr;
}

namespace {

std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> out;
    std::string cur;
    bool quoted = false;
    for (char ch : line) {
        if (ch == '"') {
            quoted = !quoted;
        } else if (ch == ',' && !quoted) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += ch;
        }
    }
    out.push_back(cur);
    return out;
}

[[noreturn]] void fail(const std::string& path, int line, const std::string& what) {
    throw std::runtime_error(path + ":" + std::to_string(line) + ": " + what);
}

}  // namespace

Catalog load_catalog(const std::string& csv_path, const std::string& annotations_path) {
    std::ifstream in(csv_path);
    if (!in) throw std::runtime_error("cannot open catalog " + csv_path);
    Catalog cat;
    std::set<std::string> seen;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty() || line[0] == '#') continue;
        if (lineno == 1 && line.rfind("name,", 0) == 0) continue;
        auto f = split_csv_line(line);
        if (f.size() != 8) fail(csv_path, lineno, "expected 8 columns");
        CatalogEntry e;
        e.name = f[0];
        if (e.name.empty()) fail(csv_path, lineno, "empty name");
        if (!seen.insert(e.name).second) fail(csv_path, lineno, "duplicate name " + e.name);
        try {
            e.components = std::stoi(f[1]);
            e.crossings = std::stoi(f[2]);
            e.sp = std::stoi(f[3]);
            e.method = std::stoi(f[4]);
        } catch (const std::exception&) {
            fail(csv_path, lineno, "malformed numeric field");
        }
        e.provenance = f[5];
        e.dt = f[6];
        e.pd = f[7];
        if (e.method < 0 || e.method > 5) fail(csv_path, lineno, "method tag out of range");
        if (e.has_diagram()) {
            LinkDiagram d = [&] {
                try {
                    return e.diagram();
                } catch (const std::exception& ex) {
                    fail(csv_path, lineno, e.name + ": PD does not parse: " + ex.what());
                }
            }();
            if (d.component_count() != e.components)
                fail(csv_path, lineno, e.name + ": component count mismatch");
            if (e.sp >= 0 && splitting_parity(linking_matrix(d)) != e.sp % 2)
                fail(csv_path, lineno, e.name + ": recorded sp violates linking parity");
        }
        cat.entries.push_back(std::move(e));
    }

    if (!annotations_path.empty()) {
        std::ifstream jin(annotations_path);
        if (!jin) throw std::runtime_error("cannot open annotations " + annotations_path);
        nlohmann::json j;
        jin >> j;
        for (auto& [name, ann] : j.items()) {
            CatalogEntry* e = nullptr;
            for (auto& entry : cat.entries)
                if (entry.name == name) e = &entry;
            if (!e) throw std::runtime_error("annotation for unknown entry " + name);
            if (ann.contains("labels")) e->labels = ann["labels"].get<std::vector<std::string>>();
            if (ann.contains("axis")) {
                AxisAnnotation ax;
                ax.tangle = ann["axis"].at("tangle").get<std::string>();
                ax.branch = ann["axis"].value("branch", -1);
                e->axis = ax;
            }
            if (ann.contains("cover_pd")) e->cover_pd = ann["cover_pd"].get<std::string>();
            if (ann.contains("band_sum")) {
                BandAnnotation b;
                b.edge_a = ann["band_sum"].at("edge_a").get<int>();
                b.edge_b = ann["band_sum"].at("edge_b").get<int>();
                b.twists = ann["band_sum"].value("twists", 0);
                e->band_sum = b;
            }
            if (ann.contains("cited"))
                for (const auto& c : ann["cited"]) {
                    CitedAssumption a;
                    a.kind = c.at("kind").get<std::string>();
                    a.value = c.value("value", "");
                    a.ref = c.at("ref").get<std::string>();
                    a.note = c.value("note", "");
                    e->cited.push_back(std::move(a));
                }
            if (ann.contains("alexander")) e->alexander = ann["alexander"].get<std::string>();
        }
    }
    return cat;
}

}  // namespace splitbound
