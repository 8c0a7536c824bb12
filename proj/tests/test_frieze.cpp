#include "doctest.h"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "friezes/frieze.hpp"

using namespace friezes;

namespace {

std::multiset<BigInt> as_multiset(const std::vector<BigInt>& row) {
    return {row.begin(), row.end()};
}

std::vector<BigInt> big(std::vector<std::int64_t> values) {
    return {values.begin(), values.end()};
}

}  // namespace

TEST_CASE("entry boundary rows and seeds") {
    const QuidditySequence q{2, 3, 4, 2, 4};
    FriezeGrid grid(q);
    for (std::int64_t i : {-3, 1, 2, 7}) {
        CHECK(grid.entry(i, i - 2) == 0);
        CHECK(grid.entry(i, i - 1) == 1);
        CHECK(grid.entry(i, i) == q.cyclic(i));
    }
    CHECK_THROWS_AS(grid.entry(1, -2), IndexOutOfRange);
}

TEST_CASE("five-periodic frieze rows, exact") {
    const QuidditySequence q{2, 3, 4, 2, 4};
    const auto r = rows(q, 5);
    CHECK(r[0] == big({2, 3, 4, 2, 4}));
    CHECK(r[1] == big({5, 11, 7, 7, 7}));
    CHECK(r[2] == big({18, 19, 24, 12, 17}));
    // a(5,8) is easy to mistranscribe as 62; the diamond rule and both
    // independent oracles force 61
    CHECK(r[3] == big({31, 65, 41, 29, 61}));
    CHECK(r[4] == big({106, 111, 99, 104, 105}));

    CHECK(as_multiset(r[2]) == as_multiset(big({17, 18, 19, 24, 12})));
    CHECK(as_multiset(r[4]) == as_multiset(big({104, 105, 106, 111, 99})));

    // anchored diagonal
    FriezeGrid grid(q);
    CHECK(grid.entry(1, 2) == 5);
    CHECK(grid.entry(1, 3) == 18);
    CHECK(grid.entry(1, 4) == 31);
    CHECK(grid.entry(1, 5) == 106);
}

TEST_CASE("periodicity and diamond rule") {
    const QuidditySequence q{2, 3, 4, 2, 4};
    FriezeGrid grid(q);
    const std::int64_t n = 5;
    for (std::int64_t i = -2; i <= 3; ++i) {
        for (std::int64_t j = i; j <= i + 9; ++j) {
            CHECK(grid.entry(i + n, j + n) == grid.entry(i, j));
            CHECK(grid.entry(i, j - 1) * grid.entry(i + 1, j) -
                      grid.entry(i, j) * grid.entry(i + 1, j - 1) ==
                  1);
        }
    }
}

TEST_CASE("small periodic frieze rows") {
    CHECK(as_multiset(rows(QuidditySequence{2, 3, 3}, 2)[1]) == as_multiset(big({8, 5, 5})));
    CHECK(rows(QuidditySequence{3, 4}, 2)[1] == big({11, 11}));
}

TEST_CASE("three computation paths agree, including the corrected entry") {
    const QuidditySequence q{2, 3, 4, 2, 4};
    CHECK(entry(q, 5, 8) == 61);
    CHECK(entry_determinant(q, 5, 8) == 61);
    CHECK(entry_pair_excluding(q, 5, 8) == 61);

    for (std::int64_t i = 1; i <= 5; ++i) {
        for (std::int64_t j = i; j <= i + 11; ++j) {
            const BigInt a = entry(q, i, j);
            CHECK(a == entry_determinant(q, i, j));
            CHECK(a == entry_pair_excluding(q, i, j));
        }
    }

    // entries stay exact far beyond 64 bits
    const QuidditySequence nine{9, 9, 9};
    const BigInt big_entry = entry(nine, 1, 80);
    CHECK(big_entry == entry_determinant(nine, 1, 80));
    CHECK(big_entry.str().size() > 70);
}

TEST_CASE("pair-excluding subset families") {
    const SubsetFamily p3 = pair_excluding_subsets(3);
    CHECK(p3.n == 3);
    CHECK_FALSE(p3.cyclic);
    const std::set<std::vector<int>> p3_set(p3.subsets.begin(), p3.subsets.end());
    CHECK(p3_set == std::set<std::vector<int>>{{1, 2, 3}, {1}, {3}});

    const SubsetFamily c3 = cyclic_pair_excluding_subsets(3);
    CHECK(c3.cyclic);
    const std::set<std::vector<int>> c3_set(c3.subsets.begin(), c3.subsets.end());
    CHECK(c3_set == std::set<std::vector<int>>{{1, 2, 3}, {1}, {2}, {3}});

    CHECK(pair_excluding_subsets(5).subsets.size() == 8);
    CHECK(cyclic_pair_excluding_subsets(5).subsets.size() == 11);
    CHECK(pair_excluding_subsets(6).subsets.size() == 13);
    CHECK(cyclic_pair_excluding_subsets(6).subsets.size() == 17);

    // the empty set appears exactly once for even n
    const SubsetFamily c6 = cyclic_pair_excluding_subsets(6);
    CHECK(std::count(c6.subsets.begin(), c6.subsets.end(), std::vector<int>{}) == 1);

    CHECK(pair_excluding_subsets(0).subsets.size() == 1);
    CHECK_THROWS_AS(pair_excluding_subsets(25), std::out_of_range);
    CHECK_THROWS_AS(cyclic_pair_excluding_subsets(0), std::out_of_range);
}

TEST_CASE("text rendering") {
    const std::string text = rows_text(QuidditySequence{2, 3, 4, 2, 4}, 4);
    CHECK(text.find("61") != std::string::npos);
    const std::string first_line = text.substr(0, text.find('\n'));
    CHECK(first_line.find_first_not_of("0 ") == std::string::npos);
    CHECK(std::count(text.begin(), text.end(), '\n') == 6);  // 0-row, 1-row, rows 1..4

    const auto deep = rows(QuidditySequence{2, 3, 4, 2, 4}, 12);
    CHECK(deep.size() == 12);
    for (const auto& row : deep) CHECK(row.size() == 5);
}
