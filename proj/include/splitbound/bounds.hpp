#pragma once

#include "splitbound/catalog.hpp"
#include "splitbound/obstructive.hpp"

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace splitbound {

// Method tags mirror the table's enumeration.
enum class Method {
    LinkingParity = 1,
    LinkingPlusObstructive = 2,
    UnlinkingCitation = 3,
    AlexanderDivisibility = 4,
    CoveringEvenCase = 5,
};

const char* method_name(Method m);

struct Evidence {
    std::string line;
    bool cited = false;
};

struct BoundCertificate {
    std::string name;
    bool realized = false;
    int lower = 0;
    std::optional<int> parity;
    Method method = Method::LinkingParity;
    std::optional<int> upper;  // recorded value, when present
    bool sharp = false;
    bool uses_cited = false;
    std::vector<Evidence> evidence;
    LemmaBound lemma;
};

// Runs every applicable obstruction on the entry, takes the largest lower
// bound consistent with parity, and records the winning method (ties go to
// the smallest tag) together with re-verifiable witnesses. External facts
// enter only through the entry's cited assumptions and are marked as such.
BoundCertificate aggregate(const CatalogEntry& entry);

struct ReportOptions {
    bool json = false;
    bool check = false;  // verify lower <= recorded sp and parity agreement
};

struct ReportResult {
    int exit_code = 0;  // 0 ok, 2 soundness violation
    int checked = 0;
    int unrealized = 0;
    int violations = 0;
};

ReportResult report(const std::vector<CatalogEntry>& entries, const ReportOptions& options,
                    std::ostream& out);

}  // namespace splitbound
