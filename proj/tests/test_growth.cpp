#include "doctest.h"

#include <vector>

#include "friezes/growth.hpp"

using namespace friezes;

TEST_CASE("growth coefficients from rows") {
    CHECK(growth_coefficient_rows(QuidditySequence{2, 3, 4, 2, 4}) == 87);
    CHECK(growth_coefficient_rows(QuidditySequence{1, 4, 4}) == 7);
    CHECK(growth_coefficient_rows(QuidditySequence{3, 3}) == 7);
    CHECK(growth_coefficient_rows(QuidditySequence{2, 3}) == 4);
    CHECK(growth_coefficient_rows(QuidditySequence{4, 3, 4, 3}) == 98);
    CHECK(growth_coefficient_rows(QuidditySequence{5, 20}) == 98);
    CHECK(growth_coefficient_rows(QuidditySequence{3}) == 3);
    CHECK(growth_coefficient_rows(QuidditySequence{2}) == 2);
    CHECK(growth_coefficient_rows(QuidditySequence{2, 2, 2}) == 2);
}

TEST_CASE("growth coefficients from the subset formula") {
    for (const auto& v : {std::vector<std::int64_t>{2, 3, 4, 2, 4}, {1, 4, 4}, {3, 3}, {2, 3},
                          {4, 3, 4, 3}, {5, 20}, {3}, {2}, {2, 2, 2}, {1, 5}, {6, 1, 1, 6}}) {
        const QuidditySequence q(v);
        CHECK(growth_coefficient_formula(q) == growth_coefficient_rows(q));
    }
    CHECK(growth_coefficient_formula(QuidditySequence{2, 3, 4, 2, 4}) == 87);
}

TEST_CASE("delta term") {
    CHECK(growth_delta(1) == 0);
    CHECK(growth_delta(2) == -1);
    CHECK(growth_delta(3) == 0);
    CHECK(growth_delta(4) == 1);
    CHECK(growth_delta(5) == 0);
    CHECK(growth_delta(6) == -1);
    CHECK(growth_delta(8) == 1);
}

TEST_CASE("minimal period") {
    CHECK(minimal_period(QuidditySequence{4, 3, 4, 3}) == 2);
    CHECK(minimal_period(QuidditySequence{2, 3, 4, 2, 4}) == 5);
    CHECK(minimal_period(QuidditySequence{2, 2, 2}) == 1);
    CHECK(minimal_period(QuidditySequence{3, 3}) == 1);
    CHECK(minimal_period(QuidditySequence{2, 3, 2, 3, 2, 3}) == 2);
}

TEST_CASE("power sequence ties periods together") {
    // (4,3,4,3) has minimal period (4,3) with growth 10; s = 2, 10, 98
    const auto s = growth_sequence(QuidditySequence{4, 3, 4, 3}, 2);
    CHECK(s == std::vector<BigInt>{2, 10, 98});
    CHECK(s[2] == growth_coefficient_rows(QuidditySequence{4, 3, 4, 3}));

    // (3,3) has minimal period (3) with growth 3; s_2 = 7
    const auto t = growth_sequence(QuidditySequence{3, 3}, 3);
    CHECK(t == std::vector<BigInt>{2, 3, 7, 18});
    CHECK(t[2] == growth_coefficient_rows(QuidditySequence{3, 3}));

    // with the length taken as the period, s_1 is the growth of q itself
    const auto u = growth_sequence(QuidditySequence{3, 3}, 1, true);
    CHECK(u == std::vector<BigInt>{2, 7});
}

TEST_CASE("closed form") {
    CHECK(growth_closed_form(3, 0) == 2);
    CHECK(growth_closed_form(3, 1) == 3);
    CHECK(growth_closed_form(3, 2) == 7);
    CHECK(growth_closed_form(3, 3) == 18);
    CHECK(growth_closed_form(10, 2) == 98);
    CHECK(growth_closed_form(87, 1) == 87);

    const BigInt s1 = 1000003;
    std::vector<BigInt> s = {2, s1};
    for (int r = 2; r <= 15; ++r) {
        s.push_back(s1 * s[static_cast<std::size_t>(r - 1)] - s[static_cast<std::size_t>(r - 2)]);
        CHECK(growth_closed_form(s1, r) == s.back());
    }
}

TEST_CASE("growth report") {
    const GrowthReport both = growth_report(QuidditySequence{2, 3, 4, 2, 4}, 1, GrowthMethod::Both);
    CHECK(both.s_q == 87);
    CHECK(both.minimal_period == 5);
    CHECK(both.delta_n == 0);
    CHECK(both.method == "both");
    CHECK(both.s_sequence == std::vector<BigInt>{2, 87});

    const GrowthReport rows_only =
        growth_report(QuidditySequence{4, 3, 4, 3}, 2, GrowthMethod::Rows);
    CHECK(rows_only.s_q == 98);
    CHECK(rows_only.minimal_period == 2);
    CHECK(rows_only.s_sequence == std::vector<BigInt>{2, 10, 98});
    CHECK(rows_only.method == "rows");
}
