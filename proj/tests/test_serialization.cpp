#include "doctest.h"

#include <string>

#include "friezes/serialization.hpp"

using namespace friezes;

TEST_CASE("quiddity round trip") {
    const QuidditySequence q{4, 1, 2, 5};
    const nlohmann::json j = to_json(q);
    CHECK(j["entries"] == nlohmann::json::array({4, 1, 2, 5}));
    CHECK(quiddity_from_json(j) == q);
    CHECK(quiddity_from_json(nlohmann::json::parse(j.dump())) == q);
}

TEST_CASE("cycle word round trip") {
    const NonOrientedCycle q("IIDIDDDID");
    const nlohmann::json j = to_json(q);
    CHECK(j["word"] == "IIDIDDDID");
    CHECK(cycle_from_json(j) == q);
}

TEST_CASE("triangulation round trip") {
    const SkeletalTriangulation t = triangulation_from_quiddity(QuidditySequence{3, 4, 2, 4});
    const nlohmann::json j = to_json(t);
    CHECK(j["outer"] == 4);
    CHECK(j["inner"] == 5);
    CHECK(j["arcs"][0] == nlohmann::json::array({1, 1}));
    const SkeletalTriangulation back = triangulation_from_json(j);
    CHECK(back.arcs == t.arcs);
    CHECK(back.outer_count == t.outer_count);
    CHECK(back.inner_count == t.inner_count);
    CHECK(back.inner_offset == t.inner_offset);
}

TEST_CASE("rows round trip keeps exact big values") {
    const auto r = rows(QuidditySequence{9, 9, 9}, 40);
    const nlohmann::json j = rows_to_json(r);
    CHECK(j["rows"][0][0] == "9");
    CHECK(j["rows"][39][0].get<std::string>().size() > 30);  // far beyond 64 bits
    CHECK(rows_from_json(j) == r);
}

TEST_CASE("growth report round trip") {
    const GrowthReport g = growth_report(QuidditySequence{4, 3, 4, 3}, 2, GrowthMethod::Both);
    const nlohmann::json j = to_json(g);
    CHECK(j["s_q"] == "98");
    CHECK(j["minimal_period"] == 2);
    CHECK(j["s_sequence"] == nlohmann::json::array({"2", "10", "98"}));
    const GrowthReport back = growth_report_from_json(j);
    CHECK(back.s_q == g.s_q);
    CHECK(back.minimal_period == g.minimal_period);
    CHECK(back.delta_n == g.delta_n);
    CHECK(back.s_sequence == g.s_sequence);
    CHECK(back.method == g.method);
}

TEST_CASE("subset family round trip") {
    const SubsetFamily f = cyclic_pair_excluding_subsets(5);
    const nlohmann::json j = to_json(f);
    CHECK(j["n"] == 5);
    CHECK(j["cyclic"] == true);
    CHECK(j["subsets"].size() == 11);
    const SubsetFamily back = subset_family_from_json(j);
    CHECK(back.n == f.n);
    CHECK(back.cyclic == f.cyclic);
    CHECK(back.subsets == f.subsets);
}
