#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace friezes {

/// Outcome of one property suite.
struct SuiteResult {
    std::string name;
    std::uint64_t cases = 0;
    std::uint64_t failures = 0;
    std::string first_failure;  // empty when the suite passed

    bool ok() const noexcept { return failures == 0; }
};

/// Knobs for the randomized/sweep verification suites. The exhaustive
/// bounds are swept completely (over necklace representatives, one per
/// rotation class); above them, `samples` seeded random cases per length
/// extend coverage to the max bounds. All checks are exact.
struct VerifyOptions {
    std::uint64_t seed = 0x5EEDFACADEull;

    int exhaustive_max_n = 6;      // full three-way sweep bound for oracle checks
    int oracle_max_n = 8;          // diamond sweep + sampled three-way bound
    int oracle_max_entry = 6;

    int growth_exhaustive_max_n = 8;
    int growth_max_n = 10;         // sampled bound, entries <= 7
    int growth_fuzz_cases = 20000;  // extra random cases, n <= 12, entries <= 9
    int growth_power_max_r = 12;

    int bijection_max_n = 14;      // exhaustive, quiver vertex count
    int commutation_max_mn = 12;   // exhaustive, m + n of the skeletal pair
    int commutation_script_len = 3;

    int tube_exhaustive_max_n = 6;
    int tube_max_n = 8;            // sampled bound, entries <= 6
    int samples = 600;             // per length above the exhaustive bound

    int subset_max_n = 20;
};

SuiteResult verify_reduction(const VerifyOptions& opt);
SuiteResult verify_oracles(const VerifyOptions& opt);
SuiteResult verify_growth(const VerifyOptions& opt);
SuiteResult verify_bijections(const VerifyOptions& opt);
SuiteResult verify_commutation(const VerifyOptions& opt);
SuiteResult verify_tube(const VerifyOptions& opt);
SuiteResult verify_subsets(const VerifyOptions& opt);

std::vector<SuiteResult> verify_all(const VerifyOptions& opt);

}  // namespace friezes
