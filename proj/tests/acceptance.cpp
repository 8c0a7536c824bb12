// Acceptance gate: one line per criterion, PASS only when every check inside
// the criterion holds exactly (integer equality, no tolerances). Exit status
// is the number of failed criteria.

#include <cstdio>
#include <set>
#include <string>
#include <vector>

#include "friezes/frieze.hpp"
#include "friezes/growth.hpp"
#include "friezes/quiddity.hpp"
#include "friezes/quiver.hpp"
#include "friezes/triangulation.hpp"
#include "friezes/tube.hpp"
#include "friezes/verify.hpp"

using namespace friezes;

namespace {

struct Criterion {
    std::string name;
    std::uint64_t cases = 0;
    std::uint64_t failures = 0;
    std::string first_failure;
    std::string detail;

    void check(bool ok, const std::string& what) {
        ++cases;
        if (!ok) {
            ++failures;
            if (first_failure.empty()) first_failure = what;
        }
    }

    void absorb(const SuiteResult& r) {
        cases += r.cases;
        failures += r.failures;
        if (first_failure.empty()) first_failure = r.first_failure;
    }
};

std::multiset<BigInt> as_multiset(const std::vector<BigInt>& row) {
    return {row.begin(), row.end()};
}

std::vector<BigInt> big(std::vector<std::int64_t> values) {
    return {values.begin(), values.end()};
}

template <typename F>
bool throws_not_skeletal(F&& f) {
    try {
        f();
    } catch (const NotSkeletal&) {
        return true;
    } catch (...) {
        return false;
    }
    return false;
}

Criterion worked_example_regression() {
    Criterion c{"worked-example regression"};

    // reductions and their inverses
    c.check(reduce_to_skeletal(QuidditySequence{4, 1, 2, 5}).entries() ==
                std::vector<std::int64_t>{2, 4},
            "reduce (4,1,2,5)");
    c.check(reduce_to_skeletal(QuidditySequence{1, 5}).entries() == std::vector<std::int64_t>{3},
            "reduce (1,5)");
    c.check(reduce_to_skeletal(QuidditySequence{1, 4, 4}).entries() ==
                std::vector<std::int64_t>{3, 3},
            "reduce (1,4,4)");
    c.check(reverse_reduce(QuidditySequence{2}, 0).entries() == std::vector<std::int64_t>{1, 4},
            "reverse_reduce (2)");
    c.check(reverse_reduce(QuidditySequence{2, 3}, 1).entries() ==
                std::vector<std::int64_t>{3, 1, 4},
            "reverse chain (2,3) -> (3,1,4)");
    c.check(reduce_once(QuidditySequence{3, 1, 4}, 1).entries() ==
                std::vector<std::int64_t>{2, 3},
            "reverse chain (3,1,4) -> (2,3)");

    // partners
    c.check(partner(QuidditySequence{2, 3, 3}).entries() == std::vector<std::int64_t>{3, 4},
            "partner (2,3,3)");
    c.check(cyclically_equal(partner(QuidditySequence{3, 4}), QuidditySequence{2, 3, 3}),
            "partner (3,4)");
    c.check(cyclically_equal(partner(partner(QuidditySequence{2, 3, 3})),
                             QuidditySequence{2, 3, 3}),
            "partner involution (2,3,3)");
    c.check(partner(QuidditySequence{4, 3, 2, 2, 3}).entries() ==
                std::vector<std::int64_t>{2, 3, 5, 3},
            "partner (4,3,2,2,3)");

    // frieze rows of the five-periodic worked example
    c.check(as_multiset(rows(QuidditySequence{2, 3, 3}, 2)[1]) == as_multiset(big({8, 5, 5})),
            "(2,3,3) row 2");
    c.check(rows(QuidditySequence{3, 4}, 2)[1] == big({11, 11}), "(3,4) row 2");
    {
        const auto r = rows(QuidditySequence{2, 3, 4, 2, 4}, 5);
        c.check(as_multiset(r[1]) == as_multiset(big({5, 11, 7, 7, 7})), "5-frieze row 2");
        c.check(as_multiset(r[2]) == as_multiset(big({17, 18, 19, 24, 12})), "5-frieze row 3");
        // a(5,8) is easy to mistranscribe as 62; the diamond rule and both
        // oracles force 61, asserted here
        c.check(as_multiset(r[3]) == as_multiset(big({61, 31, 65, 41, 29})), "5-frieze row 4");
        c.check(as_multiset(r[4]) == as_multiset(big({104, 105, 106, 111, 99})), "5-frieze row 5");
        FriezeGrid grid(QuidditySequence{2, 3, 4, 2, 4});
        c.check(grid.entry(1, 2) == 5 && grid.entry(1, 3) == 18 && grid.entry(1, 4) == 31 &&
                    grid.entry(1, 5) == 106,
                "5-frieze anchored diagonal");
        c.check(entry_determinant(QuidditySequence{2, 3, 4, 2, 4}, 5, 8) == 61 &&
                    entry_pair_excluding(QuidditySequence{2, 3, 4, 2, 4}, 5, 8) == 61,
                "corrected row-4 entry via both oracles");
    }

    // growth coefficients
    c.check(growth_coefficient_rows(QuidditySequence{2, 3, 4, 2, 4}) == 87, "s (2,3,4,2,4)");
    c.check(growth_coefficient_formula(QuidditySequence{2, 3, 4, 2, 4}) == 87,
            "s (2,3,4,2,4) formula");
    c.check(growth_coefficient_rows(QuidditySequence{1, 4, 4}) == 7, "s (1,4,4)");
    c.check(growth_coefficient_rows(QuidditySequence{3, 3}) == 7, "s (3,3)");
    c.check(growth_coefficient_rows(QuidditySequence{2, 3}) == 4, "s (2,3)");
    c.check(growth_coefficient_rows(QuidditySequence{4, 3, 4, 3}) == 98, "s (4,3,4,3)");
    c.check(growth_coefficient_rows(QuidditySequence{5, 20}) == 98, "s (5,20)");
    c.check(growth_coefficient_rows(QuidditySequence{3}) == 3, "s (3) at period 1");
    c.check(growth_sequence(QuidditySequence{4, 3, 4, 3}, 2) == std::vector<BigInt>{2, 10, 98},
            "power sequence of (4,3,4,3)");

    // quiver maps on the nine-vertex example
    {
        const NonOrientedCycle nine("IIDIDDDID");
        const QuidditySequence s = sigma(nine);
        const QuidditySequence st = sigma_tilde(nine);
        c.check(s.entries() == std::vector<std::int64_t>{4, 3, 2, 2, 3}, "sigma");
        c.check(st.entries() == std::vector<std::int64_t>{2, 3, 5, 3}, "sigma tilde");
        std::int64_t total = 0;
        for (auto e : s.entries()) total += e;
        for (auto e : st.entries()) total += e;
        c.check(total == 27, "sum sigma + sum sigma-tilde = 3n");
        c.check(mu(QuidditySequence{4, 3, 2, 2, 3}).word() == "IIDIDDDID", "mu inverts sigma");
    }

    // triangulation of (3,4,2,4)
    {
        const SkeletalTriangulation t =
            triangulation_from_quiddity(QuidditySequence{3, 4, 2, 4});
        c.check(t.arcs == std::vector<Arc>{{1, 1}, {1, 2}, {2, 2}, {2, 3}, {2, 4}, {3, 4},
                                           {4, 4}, {4, 5}, {4, 1}},
                "(3,4,2,4) arcs");
        const QuiddityPair p = quiddity_pair(t);
        c.check(p.outer.entries() == std::vector<std::int64_t>{3, 4, 2, 4} &&
                    cyclically_equal(p.inner, partner(p.outer)),
                "(3,4,2,4) quiddity pair");
    }

    // tube identities at pinned values
    c.check(repth_rhs(QuidditySequence{2, 3, 3}, 1, 3) == 10, "quotient sum (2,3,3) level 3");
    c.check(repth_rhs(QuidditySequence{4, 3, 4, 3}, 1, 4) == 98, "quotient sum (4,3,4,3) level 4");
    c.check(repth_rhs(QuidditySequence{2, 3, 4, 2, 4}, 1, 5) == 87,
            "quotient sum (2,3,4,2,4) level 5");

    // subset family counts
    c.check(pair_excluding_subsets(5).subsets.size() == 8, "path subsets n=5");
    c.check(cyclic_pair_excluding_subsets(5).subsets.size() == 11, "cyclic subsets n=5");
    c.check(pair_excluding_subsets(6).subsets.size() == 13, "path subsets n=6");
    c.check(cyclic_pair_excluding_subsets(6).subsets.size() == 17, "cyclic subsets n=6");

    c.detail = "row-4 entry a(5,8) = 61 pinned via diamond rule and both oracles";
    return c;
}

Criterion negative_controls() {
    Criterion c{"negative controls"};
    c.check(classify(QuidditySequence{1, 1}) == SequenceClass::Invalid, "(1,1) Invalid");
    c.check(classify(QuidditySequence{1, 2}) == SequenceClass::Invalid, "(1,2) Invalid");
    c.check(classify(QuidditySequence{1, 1, 1}) == SequenceClass::FiniteType,
            "(1,1,1) FiniteType");

    const QuidditySequence trivial{2, 2, 2};
    c.check(throws_not_skeletal([&] { (void)partner(trivial); }), "partner rejects trivial");
    c.check(throws_not_skeletal([&] { (void)triangulation_from_quiddity(trivial); }),
            "triangulate rejects trivial");
    c.check(throws_not_skeletal([&] { (void)mu(trivial); }), "mu rejects trivial");

    // equal growth does not make a partner pair
    c.check(growth_coefficient_rows(QuidditySequence{2, 3}) ==
                growth_coefficient_rows(QuidditySequence{2, 3}),
            "equal growth (2,3)/(2,3)");
    c.check(!cyclically_equal(partner(QuidditySequence{2, 3}), QuidditySequence{2, 3}),
            "(2,3) is not its own partner");
    c.check(growth_coefficient_rows(QuidditySequence{4, 3, 4, 3}) ==
                growth_coefficient_rows(QuidditySequence{5, 20}),
            "equal growth (4,3,4,3)/(5,20)");
    c.check(!cyclically_equal(partner(QuidditySequence{4, 3, 4, 3}), QuidditySequence{5, 20}),
            "(5,20) is not the partner of (4,3,4,3)");
    c.check(!cyclically_equal(partner(QuidditySequence{5, 20}), QuidditySequence{4, 3, 4, 3}),
            "(4,3,4,3) is not the partner of (5,20)");
    return c;
}

void report(const Criterion& c, int index, int& failed) {
    if (c.failures == 0) {
        std::printf("[%d] %-24s PASS  (%llu checks%s%s)\n", index, c.name.c_str(),
                    static_cast<unsigned long long>(c.cases), c.detail.empty() ? "" : "; ",
                    c.detail.c_str());
    } else {
        ++failed;
        std::printf("[%d] %-24s FAIL  (%llu of %llu checks; first: %s)\n", index, c.name.c_str(),
                    static_cast<unsigned long long>(c.failures),
                    static_cast<unsigned long long>(c.cases), c.first_failure.c_str());
    }
    std::fflush(stdout);
}

}  // namespace

int main() {
    const VerifyOptions opt;
    int failed = 0;
    int index = 1;

    report(worked_example_regression(), index++, failed);

    {
        Criterion c{"oracle equivalence"};
        c.absorb(verify_oracles(opt));
        c.detail = "three-way on all windows <= 2n+2: exhaustive necklaces n <= " +
                   std::to_string(opt.exhaustive_max_n) + ", " + std::to_string(opt.samples) +
                   " seeded samples per n <= " + std::to_string(opt.oracle_max_n) +
                   "; diamond rule on every necklace n <= " + std::to_string(opt.oracle_max_n) +
                   " (entries <= " + std::to_string(opt.oracle_max_entry) + ")";
        report(c, index++, failed);
    }
    {
        Criterion c{"growth equivalence"};
        c.absorb(verify_growth(opt));
        c.detail = "rows vs formula: exhaustive n <= " +
                   std::to_string(opt.growth_exhaustive_max_n) + ", sampled n <= " +
                   std::to_string(opt.growth_max_n) + ", " +
                   std::to_string(opt.growth_fuzz_cases) +
                   " fuzz cases (n <= 12, entries <= 9); recursion vs closed form r <= " +
                   std::to_string(opt.growth_power_max_r);
        report(c, index++, failed);
    }
    {
        Criterion c{"bijection round trips"};
        c.absorb(verify_bijections(opt));
        c.detail = "exhaustive quivers and skeletal sequences, n <= " +
                   std::to_string(opt.bijection_max_n);
        report(c, index++, failed);
    }
    {
        Criterion c{"skeleton commutation"};
        c.absorb(verify_commutation(opt));
        c.detail = "every skeletal pair with m+n <= " + std::to_string(opt.commutation_max_mn) +
                   ", every ear script of length <= " +
                   std::to_string(opt.commutation_script_len);
        report(c, index++, failed);
    }
    {
        Criterion c{"tube identities"};
        c.absorb(verify_tube(opt));
        c.detail = "levels 3..2n, exhaustive skeletal n <= " +
                   std::to_string(opt.tube_exhaustive_max_n) + ", sampled n <= " +
                   std::to_string(opt.tube_max_n) + "; mesh relation everywhere";
        report(c, index++, failed);
    }

    report(negative_controls(), index++, failed);

    if (failed == 0) {
        std::printf("acceptance: 7/7 criteria passed\n");
    } else {
        std::printf("acceptance: %d criteria FAILED\n", failed);
    }
    return failed;
}
