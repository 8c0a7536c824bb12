#pragma once

#include "json.hpp"

#include "friezes/frieze.hpp"
#include "friezes/growth.hpp"
#include "friezes/quiddity.hpp"
#include "friezes/quiver.hpp"
#include "friezes/triangulation.hpp"

namespace friezes {

/// JSON schemas (all integers that may exceed 64 bits travel as decimal
/// strings; everything else as JSON numbers):
///   quiddity        {"entries": [4, 1, 2, 5]}
///   cycle word      {"word": "IIDD"}
///   triangulation   {"outer": m, "inner": n, "arcs": [[o, i], ...],
///                    "inner_offset": 0}
///   rows            {"rows": [["2", "3", ...], ...]}
///   growth report   {"s_q": "87", "minimal_period": 5, "delta_n": 0,
///                    "s_sequence": ["2", "87", ...], "method": "rows"}
///   subset family   {"n": 5, "cyclic": true, "subsets": [[1,2,3], ...]}

nlohmann::json to_json(const QuidditySequence& q);
QuidditySequence quiddity_from_json(const nlohmann::json& j);

nlohmann::json to_json(const NonOrientedCycle& q);
NonOrientedCycle cycle_from_json(const nlohmann::json& j);

nlohmann::json to_json(const SkeletalTriangulation& t);
SkeletalTriangulation triangulation_from_json(const nlohmann::json& j);

nlohmann::json rows_to_json(const std::vector<std::vector<BigInt>>& rows);
std::vector<std::vector<BigInt>> rows_from_json(const nlohmann::json& j);

nlohmann::json to_json(const GrowthReport& r);
GrowthReport growth_report_from_json(const nlohmann::json& j);

nlohmann::json to_json(const SubsetFamily& f);
SubsetFamily subset_family_from_json(const nlohmann::json& j);

}  // namespace friezes
