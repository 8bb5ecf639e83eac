#pragma once

// JSON rendering of census reports. Field order is part of the output
// contract (reports are diffed byte-for-byte), hence ordered_json.

#include <string>

#include "json.hpp"
#include "pathkit/census.hpp"

namespace pathkit {

inline nlohmann::ordered_json census_report_json(const CensusReport& r, const AuditVerdict& v) {
    nlohmann::ordered_json j;
    j["k"] = r.k;
    j["population"] = {
        {"description", r.population_label},
        {"size", r.population_size},
        {"digest", r.population_digest},
        {"require_connected_pk", r.require_connected_pk},
    };
    auto classes = nlohmann::ordered_json::array();
    for (const auto& c : r.classes)
        classes.push_back({
            {"pk_canon", c.pk_canon},
            {"members", c.members},
            {"size", c.members.size()},
        });
    j["classes"] = std::move(classes);
    j["dropped"] = r.dropped;
    j["skipped"] = r.skipped;
    j["pk_without_isolated_vertices"] = r.pk_without_isolated;
    j["verdict"] = v.verdict;
    return j;
}

inline std::string census_report_text(const CensusReport& r, const AuditVerdict& v) {
    return census_report_json(r, v).dump(2) + "\n";
}

}  // namespace pathkit
