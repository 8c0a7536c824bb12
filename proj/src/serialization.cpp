#include "friezes/serialization.hpp"

namespace friezes {

using nlohmann::json;

namespace {

json bigints_to_json(const std::vector<BigInt>& v) {
    json out = json::array();
    for (const BigInt& x : v) out.push_back(x.str());
    return out;
}

std::vector<BigInt> bigints_from_json(const json& j) {
    std::vector<BigInt> out;
    for (const auto& x : j) out.emplace_back(x.get<std::string>());
    return out;
}

}  // namespace

json to_json(const QuidditySequence& q) {
    return json{{"entries", q.entries()}};
}

QuidditySequence quiddity_from_json(const json& j) {
    return QuidditySequence(j.at("entries").get<std::vector<std::int64_t>>());
}

json to_json(const NonOrientedCycle& q) {
    return json{{"word", q.word()}};
}

NonOrientedCycle cycle_from_json(const json& j) {
    return NonOrientedCycle(j.at("word").get<std::string>());
}

json to_json(const SkeletalTriangulation& t) {
    json arcs = json::array();
    for (const Arc& a : t.arcs) arcs.push_back(json::array({a.outer, a.inner}));
    return json{{"outer", t.outer_count},
                {"inner", t.inner_count},
                {"arcs", std::move(arcs)},
                {"inner_offset", t.inner_offset}};
}

SkeletalTriangulation triangulation_from_json(const json& j) {
    SkeletalTriangulation t;
    t.outer_count = j.at("outer").get<std::int64_t>();
    t.inner_count = j.at("inner").get<std::int64_t>();
    t.inner_offset = j.value("inner_offset", 0);
    for (const auto& a : j.at("arcs")) {
        t.arcs.push_back({a.at(0).get<std::int64_t>(), a.at(1).get<std::int64_t>()});
    }
    return t;
}

json rows_to_json(const std::vector<std::vector<BigInt>>& rows) {
    json out = json::array();
    for (const auto& row : rows) out.push_back(bigints_to_json(row));
    return json{{"rows", std::move(out)}};
}

std::vector<std::vector<BigInt>> rows_from_json(const json& j) {
    std::vector<std::vector<BigInt>> out;
    for (const auto& row : j.at("rows")) out.push_back(bigints_from_json(row));
    return out;
}

json to_json(const GrowthReport& r) {
    return json{{"s_q", r.s_q.str()},
                {"minimal_period", r.minimal_period},
                {"delta_n", r.delta_n},
                {"s_sequence", bigints_to_json(r.s_sequence)},
                {"method", r.method}};
}

GrowthReport growth_report_from_json(const json& j) {
    GrowthReport r;
    r.s_q = BigInt(j.at("s_q").get<std::string>());
    r.minimal_period = j.at("minimal_period").get<std::int64_t>();
    r.delta_n = j.at("delta_n").get<int>();
    r.s_sequence = bigints_from_json(j.at("s_sequence"));
    r.method = j.at("method").get<std::string>();
    return r;
}

json to_json(const SubsetFamily& f) {
    return json{{"n", f.n}, {"cyclic", f.cyclic}, {"subsets", f.subsets}};
}

SubsetFamily subset_family_from_json(const json& j) {
    SubsetFamily f;
    f.n = j.at("n").get<int>();
    f.cyclic = j.at("cyclic").get<bool>();
    f.subsets = j.at("subsets").get<std::vector<std::vector<int>>>();
    return f;
}

}  // namespace friezes
