#include "friezes/verify.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <sstream>

#include "friezes/frieze.hpp"
#include "friezes/growth.hpp"
#include "friezes/quiddity.hpp"
#include "friezes/quiver.hpp"
#include "friezes/triangulation.hpp"
#include "friezes/tube.hpp"

namespace friezes {

namespace {

using Seq = std::vector<std::int64_t>;

std::string seq_str(const Seq& v) {
    std::ostringstream out;
    out << '(';
    for (std::size_t k = 0; k < v.size(); ++k) {
        if (k) out << ',';
        out << v[k];
    }
    out << ')';
    return out.str();
}

// Reporting helper: counts cases, records the first failing description.
struct Checker {
    SuiteResult result;

    explicit Checker(std::string name) { result.name = std::move(name); }

    void check(bool ok, const std::function<std::string()>& describe) {
        ++result.cases;
        if (!ok) {
            ++result.failures;
            if (result.first_failure.empty()) result.first_failure = describe();
        }
    }

    void check(bool ok, const std::string& describe) {
        check(ok, [&describe] { return describe; });
    }
};

bool is_least_rotation(const Seq& v) {
    const std::size_t n = v.size();
    for (std::size_t r = 1; r < n; ++r) {
        for (std::size_t k = 0; k < n; ++k) {
            const auto a = v[(r + k) % n];
            if (a < v[k]) return false;
            if (a > v[k]) break;
        }
    }
    return true;
}

// Every lexicographically least rotation representative of length n over
// [lo, hi].
void for_each_necklace(int n, std::int64_t lo, std::int64_t hi,
                       const std::function<void(const Seq&)>& f) {
    Seq v(static_cast<std::size_t>(n), lo);
    while (true) {
        if (is_least_rotation(v)) f(v);
        int k = n - 1;
        while (k >= 0 && v[static_cast<std::size_t>(k)] == hi) {
            v[static_cast<std::size_t>(k)] = lo;
            --k;
        }
        if (k < 0) break;
        ++v[static_cast<std::size_t>(k)];
    }
}

Seq random_seq(std::mt19937_64& rng, int n, std::int64_t lo, std::int64_t hi) {
    std::uniform_int_distribution<std::int64_t> dist(lo, hi);
    Seq v(static_cast<std::size_t>(n));
    for (auto& e : v) e = dist(rng);
    return v;
}

// Skeletal sequence: entries in [2, hi], at least one above 2.
Seq random_skeletal(std::mt19937_64& rng, int n, std::int64_t hi) {
    Seq v = random_seq(rng, n, 2, hi);
    if (std::all_of(v.begin(), v.end(), [](std::int64_t e) { return e == 2; })) {
        std::uniform_int_distribution<std::size_t> pos(0, v.size() - 1);
        std::uniform_int_distribution<std::int64_t> val(3, hi);
        v[pos(rng)] = val(rng);
    }
    return v;
}

// Shadow copy of the reduction rules, used by the confluence oracle so that
// every reduction order is explored independently of the library's
// leftmost-first policy.
std::vector<std::size_t> legal_ones(const Seq& v) {
    std::vector<std::size_t> out;
    const std::size_t n = v.size();
    for (std::size_t k = 0; k < n; ++k) {
        if (v[k] != 1) continue;
        if (n == 2 && v[1 - k] >= 3) out.push_back(k);
        if (n >= 3 && v[(k + n - 1) % n] >= 2 && v[(k + 1) % n] >= 2) out.push_back(k);
    }
    return out;
}

Seq reduce_at_copy(const Seq& v, std::size_t index) {
    const std::size_t n = v.size();
    if (n == 2) return {v[1 - index] - 2};
    Seq out = v;
    out[(index + n - 1) % n] -= 1;
    out[(index + 1) % n] -= 1;
    out.erase(out.begin() + static_cast<std::ptrdiff_t>(index));
    return out;
}

// Canonical terminal reached from v by exhausting reductions in every
// possible order; "<mixed>" if two orders disagree, "<stuck>" if some
// maximal order keeps a 1.
std::string confluent_terminal(const Seq& v, std::map<Seq, std::string>& memo) {
    if (std::find(v.begin(), v.end(), 1) == v.end()) {
        return canonical_rotation(QuidditySequence(v)).str();
    }
    auto it = memo.find(v);
    if (it != memo.end()) return it->second;
    const auto moves = legal_ones(v);
    std::string outcome;
    if (moves.empty()) {
        outcome = "<stuck>";
    } else {
        for (std::size_t k : moves) {
            const std::string t = confluent_terminal(reduce_at_copy(v, k), memo);
            if (outcome.empty()) {
                outcome = t;
            } else if (outcome != t) {
                outcome = "<mixed>";
                break;
            }
        }
    }
    memo.emplace(v, outcome);
    return outcome;
}

}  // namespace

SuiteResult verify_reduction(const VerifyOptions& opt) {
    Checker c("reduction");

    auto classified = [](const Seq& v) { return classify(QuidditySequence(v)); };
    c.check(classified({1}) == SequenceClass::Invalid, "(1) must be Invalid");
    c.check(classified({1, 1}) == SequenceClass::Invalid, "(1,1) must be Invalid");
    c.check(classified({1, 2}) == SequenceClass::Invalid, "(1,2) must be Invalid");
    c.check(classified({1, 1, 1}) == SequenceClass::FiniteType, "(1,1,1) must be FiniteType");
    c.check(classified({1, 2, 1, 2}) == SequenceClass::FiniteType, "(1,2,1,2) must be FiniteType");
    c.check(classified({1, 2, 2, 1, 3}) == SequenceClass::FiniteType,
            "(1,2,2,1,3) must be FiniteType");
    c.check(classified({2}) == SequenceClass::InfiniteType, "(2) must be InfiniteType");
    c.check(classified({2, 2}) == SequenceClass::InfiniteType, "(2,2) must be InfiniteType");

    auto drive = [&](const Seq& v) {
        QuidditySequence q(v);
        const SequenceClass cls = classify(q);
        if (cls == SequenceClass::InfiniteType) {
            const QuidditySequence skel = reduce_to_skeletal(q);
            c.check(is_skeletal(skel) || is_trivial(skel),
                    [&] { return "reduce_to_skeletal" + seq_str(v) + " kept a 1"; });
            std::map<Seq, std::string> memo;
            const std::string terminal = confluent_terminal(v, memo);
            c.check(terminal == canonical_rotation(skel).str(),
                    [&] { return "reduction of " + seq_str(v) + " is not confluent: " + terminal; });
        }
        for (std::size_t g = 0; g < q.size(); ++g) {
            const QuidditySequence up = reverse_reduce(q, g);
            c.check(reduce_once(up, g) == q,
                    [&] { return "reverse_reduce round trip failed at gap " +
                                 std::to_string(g) + " for " + seq_str(v); });
            if (cls != SequenceClass::Invalid) {
                c.check(classify(up) == cls,
                        [&] { return "ear insertion changed the class of " + seq_str(v); });
            }
        }
    };

    for (int n = 1; n <= opt.exhaustive_max_n; ++n) {
        for_each_necklace(n, 1, opt.oracle_max_entry, drive);
    }
    std::mt19937_64 rng(opt.seed ^ 0x9e3779b97f4a7c15ull);
    for (int n = opt.exhaustive_max_n + 1; n <= 10; ++n) {
        for (int k = 0; k < opt.samples; ++k) {
            drive(random_seq(rng, n, 1, opt.oracle_max_entry));
        }
    }
    return c.result;
}

SuiteResult verify_oracles(const VerifyOptions& opt) {
    Checker c("oracles");

    // Full three-way comparison on every window of length <= 2n+2 from every
    // start position, plus the diamond rule and boundary/periodicity checks.
    auto drive_full = [&](const Seq& v) {
        QuidditySequence q(v);
        if (classify(q) != SequenceClass::InfiniteType) return;
        FriezeGrid grid(q);
        const auto n = static_cast<std::int64_t>(v.size());
        for (std::int64_t i = 1; i <= n; ++i) {
            for (std::int64_t len = 1; len <= 2 * n + 2; ++len) {
                const std::int64_t j = i + len - 1;
                const BigInt a = grid.entry(i, j);
                const BigInt d = entry_determinant(q, i, j);
                const BigInt p = entry_pair_excluding(q, i, j);
                c.check(a == d && a == p, [&] {
                    return "oracle mismatch for " + seq_str(v) + " window (" + std::to_string(i) +
                           "," + std::to_string(j) + "): " + a.str() + "/" + d.str() + "/" +
                           p.str();
                });
            }
        }
        for (std::int64_t i = 0; i <= n; ++i) {
            bool diamond = true;
            for (std::int64_t j = i; j <= i + 2 * n && diamond; ++j) {
                diamond = grid.entry(i, j - 1) * grid.entry(i + 1, j) -
                              grid.entry(i, j) * grid.entry(i + 1, j - 1) ==
                          1;
            }
            c.check(diamond, [&] { return "diamond rule failed for " + seq_str(v); });
        }
        c.check(grid.entry(1, -1) == 0 && grid.entry(1, 0) == 1 &&
                    grid.entry(1 + n, 1 + n) == grid.entry(1, 1) &&
                    grid.entry(2 - n, n + 1 - n) == grid.entry(2, n + 1),
                [&] { return "boundary/periodicity failed for " + seq_str(v); });
    };

    // Cheaper full-necklace sweep: the diamond rule everywhere (it pins the
    // whole grid once row 1 is fixed).
    auto drive_diamond = [&](const Seq& v) {
        QuidditySequence q(v);
        if (classify(q) != SequenceClass::InfiniteType) return;
        FriezeGrid grid(q);
        const auto n = static_cast<std::int64_t>(v.size());
        bool diamond = true;
        for (std::int64_t i = 1; i <= n && diamond; ++i) {
            for (std::int64_t j = i; j <= i + 2 * n + 2 && diamond; ++j) {
                diamond = grid.entry(i, j - 1) * grid.entry(i + 1, j) -
                              grid.entry(i, j) * grid.entry(i + 1, j - 1) ==
                          1;
            }
        }
        c.check(diamond, [&] { return "diamond rule failed for " + seq_str(v); });
    };

    for (int n = 1; n <= opt.exhaustive_max_n; ++n) {
        for_each_necklace(n, 1, opt.oracle_max_entry, drive_full);
    }
    for (int n = opt.exhaustive_max_n + 1; n <= opt.oracle_max_n; ++n) {
        for_each_necklace(n, 1, opt.oracle_max_entry, drive_diamond);
    }
    std::mt19937_64 rng(opt.seed ^ 0xabcdef1234567890ull);
    for (int n = opt.exhaustive_max_n + 1; n <= opt.oracle_max_n; ++n) {
        int found = 0;
        for (int attempts = 0; attempts < 4 * opt.samples && found < opt.samples; ++attempts) {
            Seq v = random_seq(rng, n, 1, opt.oracle_max_entry);
            if (classify(QuidditySequence(v)) != SequenceClass::InfiniteType) continue;
            ++found;
            drive_full(v);
        }
        c.check(found == opt.samples, "sampling starved for n=" + std::to_string(n));
    }
    return c.result;
}

SuiteResult verify_growth(const VerifyOptions& opt) {
    Checker c("growth");

    auto drive = [&](const Seq& v) {
        QuidditySequence q(v);
        if (classify(q) != SequenceClass::InfiniteType) return;
        const BigInt s_rows = growth_coefficient_rows(q);
        const BigInt s_formula = growth_coefficient_formula(q);
        c.check(s_rows == s_formula, [&] {
            return "growth mismatch for " + seq_str(v) + ": rows " + s_rows.str() +
                   " vs formula " + s_formula.str();
        });
        if (is_skeletal(q)) {
            c.check(s_rows > 2, [&] { return "skeletal growth not above 2 for " + seq_str(v); });
        } else if (is_trivial(q)) {
            c.check(s_rows == 2, [&] { return "trivial growth not 2 for " + seq_str(v); });
        }
        const std::int64_t d = minimal_period(q);
        const auto n = static_cast<std::int64_t>(q.size());
        const auto s = growth_sequence(q, n / d);
        c.check(s[static_cast<std::size_t>(n / d)] == s_rows, [&] {
            return "growth power relation failed for " + seq_str(v) + " (period " +
                   std::to_string(d) + ")";
        });
    };

    for (int n = 1; n <= opt.growth_exhaustive_max_n; ++n) {
        for_each_necklace(n, 1, 7, drive);
    }
    std::mt19937_64 rng(opt.seed ^ 0x1234abcd5678ef90ull);
    for (int n = opt.growth_exhaustive_max_n + 1; n <= opt.growth_max_n; ++n) {
        for (int k = 0; k < opt.samples; ++k) drive(random_seq(rng, n, 1, 7));
    }
    std::uniform_int_distribution<int> nd(1, 12);
    for (int k = 0; k < opt.growth_fuzz_cases; ++k) {
        drive(random_seq(rng, nd(rng), 1, 9));
    }

    // Recursion against the closed form, exact in BigInt.
    std::uniform_int_distribution<std::int64_t> sd(3, 1000000);
    std::vector<BigInt> s1_values = {3, 4, 10, 87, 98, 1000000};
    for (int k = 0; k < 32; ++k) s1_values.emplace_back(sd(rng));
    for (const BigInt& s1 : s1_values) {
        std::vector<BigInt> s = {2, s1};
        for (std::int64_t r = 2; r <= opt.growth_power_max_r; ++r) {
            s.push_back(s1 * s[static_cast<std::size_t>(r - 1)] - s[static_cast<std::size_t>(r - 2)]);
        }
        for (std::int64_t r = 0; r <= opt.growth_power_max_r; ++r) {
            c.check(growth_closed_form(s1, r) == s[static_cast<std::size_t>(r)], [&] {
                return "closed form disagrees with recursion at r=" + std::to_string(r) +
                       ", s1=" + s1.str();
            });
        }
    }
    return c.result;
}

namespace {

// All skeletal sequences whose quiver has at most `max_vertices` vertices
// (vertex count = length + sum(entry - 2)), one representative per rotation
// class.
void for_each_small_skeletal(int max_vertices, const std::function<void(const Seq&)>& f) {
    Seq v;
    std::function<void(int)> rec = [&](int budget) {
        if (!v.empty() && is_least_rotation(v) &&
            std::any_of(v.begin(), v.end(), [](std::int64_t e) { return e > 2; })) {
            f(v);
        }
        if (budget <= 0) return;
        // every entry costs entry - 1 vertices
        for (std::int64_t e = 2; e - 1 <= budget; ++e) {
            v.push_back(e);
            rec(budget - static_cast<int>(e - 1));
            v.pop_back();
        }
    };
    rec(max_vertices);
}

}  // namespace

SuiteResult verify_bijections(const VerifyOptions& opt) {
    Checker c("bijections");

    // Quiver side: every non-oriented cycle word.
    for (int n = 2; n <= opt.bijection_max_n; ++n) {
        for (std::uint64_t bits = 1; bits + 1 < (1ull << n); ++bits) {
            std::string word;
            for (int k = 0; k < n; ++k) word.push_back(bits & (1ull << k) ? 'I' : 'D');
            NonOrientedCycle quiver(word);
            const QuidditySequence a = sigma(quiver);
            const QuidditySequence b = sigma_tilde(quiver);
            std::int64_t total = 0;
            for (auto e : a.entries()) total += e;
            for (auto e : b.entries()) total += e;
            c.check(total == 3 * n, [&] { return "sum rule failed for word " + word; });
            c.check(cyclically_equal(partner(a), b),
                    [&] { return "partner(sigma) != sigma_tilde for word " + word; });
            c.check(same_unlabeled(mu(a), quiver),
                    [&] { return "mu(sigma) != id for word " + word; });
        }
    }

    // Quiddity side: every small skeletal sequence.
    for_each_small_skeletal(opt.bijection_max_n, [&](const Seq& v) {
        QuidditySequence q(v);
        const QuidditySequence p = partner(q);
        c.check(cyclically_equal(partner(p), q),
                [&] { return "partner involution failed for " + seq_str(v); });
        c.check(growth_coefficient_rows(p) == growth_coefficient_rows(q),
                [&] { return "partner changed the growth coefficient of " + seq_str(v); });
        const NonOrientedCycle quiver = mu(q);
        c.check(static_cast<std::int64_t>(quiver.size()) ==
                    static_cast<std::int64_t>(v.size()) +
                        std::accumulate(v.begin(), v.end(), std::int64_t{0}) -
                        2 * static_cast<std::int64_t>(v.size()),
                [&] { return "mu vertex count wrong for " + seq_str(v); });
        c.check(cyclically_equal(sigma(quiver), q),
                [&] { return "sigma(mu) != id for " + seq_str(v); });
        c.check(cyclically_equal(sigma_tilde(quiver), p),
                [&] { return "sigma_tilde(mu) != partner for " + seq_str(v); });

        const SkeletalTriangulation t = triangulation_from_quiddity(q);
        c.check(t.inner_count >= 1 &&
                    t.arcs.size() == static_cast<std::size_t>(t.outer_count + t.inner_count),
                [&] { return "arc count wrong for " + seq_str(v); });
        const QuiddityPair pair = quiddity_pair(t);
        c.check(cyclically_equal(pair.outer, q) && cyclically_equal(pair.inner, p), [&] {
            return "triangulation quiddity pair wrong for " + seq_str(v);
        });
        c.check(same_unlabeled(quiver_of(t), quiver),
                [&] { return "quiver_of(triangulation) != mu for " + seq_str(v); });
        for (std::int64_t off = 1; off < t.inner_count; ++off) {
            const SkeletalTriangulation rotated = with_inner_offset(t, off);
            const QuiddityPair rp = quiddity_pair(rotated);
            c.check(cyclically_equal(rp.outer, pair.outer) &&
                        cyclically_equal(rp.inner, pair.inner) &&
                        same_unlabeled(quiver_of(rotated), quiver),
                    [&] { return "inner rotation changed invariants for " + seq_str(v); });
        }
    });
    return c.result;
}

SuiteResult verify_commutation(const VerifyOptions& opt) {
    Checker c("commutation");

    for_each_small_skeletal(opt.commutation_max_mn, [&](const Seq& v) {
        QuidditySequence q(v);
        const QuidditySequence p = partner(q);
        const QuiddityPair base{q, p};
        const std::string quiver_word = canonicalize(mu(q)).word();

        std::function<void(const QuiddityPair&, int)> extend = [&](const QuiddityPair& pair,
                                                                   int depth) {
            if (depth > 0) {
                const QuidditySequence skel1 = reduce_to_skeletal(pair.outer);
                const QuidditySequence skel2 = reduce_to_skeletal(pair.inner);
                c.check(cyclically_equal(skel1, q) && cyclically_equal(skel2, p), [&] {
                    return "skeleton changed after ear script on " + seq_str(v);
                });
                c.check(canonicalize(mu(skel1)).word() == quiver_word, [&] {
                    return "skeletal quiver changed after ear script on " + seq_str(v);
                });
            }
            if (depth == opt.commutation_script_len) return;
            for (int boundary = 1; boundary <= 2; ++boundary) {
                const auto& side = boundary == 1 ? pair.outer : pair.inner;
                for (std::size_t g = 0; g < side.size(); ++g) {
                    extend(attach_ear(pair, boundary, static_cast<std::int64_t>(g)), depth + 1);
                }
            }
        };
        extend(base, 0);
    });
    return c.result;
}

SuiteResult verify_tube(const VerifyOptions& opt) {
    Checker c("tube");

    auto drive = [&](const Seq& v, bool all_starts) {
        QuidditySequence q(v);
        FriezeGrid grid(q);
        const auto n = static_cast<std::int64_t>(v.size());
        for (std::int64_t i = 1; i <= n; ++i) {
            c.check(cc_value(q, {n, i, i}) == q.cyclic(i),
                    [&] { return "mouth value wrong for " + seq_str(v); });
            for (std::int64_t t = 1; t <= 2 * n; ++t) {
                c.check(verify_ar_diamond(q, {n, i, i + t - 1}), [&] {
                    return "mesh relation failed for " + seq_str(v) + " at (" +
                           std::to_string(i) + ", level " + std::to_string(t) + ")";
                });
            }
        }
        for (std::int64_t t = 3; t <= 2 * n; ++t) {
            const std::int64_t max_i = all_starts || t == n ? n : 1;
            for (std::int64_t i = 1; i <= max_i; ++i) {
                const BigInt rhs = repth_rhs(q, i, t);
                const BigInt lhs = grid.entry(i, i + t - 1) - grid.entry(i + 1, i + t - 2);
                c.check(lhs == rhs, [&] {
                    return "quotient sum failed for " + seq_str(v) + " at (" + std::to_string(i) +
                           ", level " + std::to_string(t) + "): " + lhs.str() + " vs " + rhs.str();
                });
                if (t == n) {
                    c.check(rhs == growth_coefficient_formula(q) &&
                                rhs == growth_coefficient_rows(q),
                            [&] {
                                return "level-n quotient sum is not the growth coefficient for " +
                                       seq_str(v);
                            });
                }
            }
        }
    };

    for (int n = 3; n <= opt.tube_exhaustive_max_n; ++n) {
        for_each_necklace(n, 2, 6, [&](const Seq& v) {
            if (std::any_of(v.begin(), v.end(), [](std::int64_t e) { return e > 2; })) {
                drive(v, true);
            }
        });
    }
    std::mt19937_64 rng(opt.seed ^ 0x0f0f0f0f12345678ull);
    const int tube_samples = std::max(1, opt.samples / 10);
    for (int n = opt.tube_exhaustive_max_n + 1; n <= opt.tube_max_n; ++n) {
        for (int k = 0; k < tube_samples; ++k) {
            drive(random_skeletal(rng, n, 6), false);
        }
    }
    return c.result;
}

SuiteResult verify_subsets(const VerifyOptions& opt) {
    Checker c("subsets");

    std::vector<std::uint64_t> fib(static_cast<std::size_t>(opt.subset_max_n) + 3);
    fib[0] = 0;
    fib[1] = 1;
    for (std::size_t k = 2; k < fib.size(); ++k) fib[k] = fib[k - 1] + fib[k - 2];
    auto lucas = [&](int n) { return fib[static_cast<std::size_t>(n - 1)] +
                                     fib[static_cast<std::size_t>(n + 1)]; };

    auto distinct = [](const SubsetFamily& f) {
        auto subsets = f.subsets;
        std::sort(subsets.begin(), subsets.end());
        return std::adjacent_find(subsets.begin(), subsets.end()) == subsets.end();
    };
    // The removed positions must split into cyclically consecutive runs of
    // even length (each run has a unique pair tiling).
    auto valid_subset = [](const std::vector<int>& subset, int n, bool cyclic) {
        std::vector<bool> kept(static_cast<std::size_t>(n), false);
        for (int e : subset) {
            if (e < 1 || e > n) return false;
            kept[static_cast<std::size_t>(e - 1)] = true;
        }
        if (subset.size() == static_cast<std::size_t>(n)) return true;
        if (!cyclic || std::any_of(kept.begin(), kept.end(), [](bool b) { return b; })) {
            int start = 0;
            if (cyclic) {
                while (!kept[static_cast<std::size_t>(start)]) ++start;
            }
            int run = 0;
            for (int k = 0; k < n; ++k) {
                const int pos = cyclic ? (start + k) % n : k;
                if (kept[static_cast<std::size_t>(pos)]) {
                    if (run % 2) return false;
                    run = 0;
                } else {
                    ++run;
                }
            }
            return run % 2 == 0;
        }
        return n % 2 == 0;  // fully removed cycle needs even length
    };

    for (int n = 1; n <= opt.subset_max_n; ++n) {
        const SubsetFamily path = pair_excluding_subsets(n);
        const SubsetFamily cycle = cyclic_pair_excluding_subsets(n);
        c.check(path.subsets.size() == fib[static_cast<std::size_t>(n) + 1],
                "path subset count wrong at n=" + std::to_string(n));
        const std::uint64_t expected_cycle = lucas(n) - (n % 2 == 0 ? 1 : 0);
        c.check(cycle.subsets.size() == expected_cycle,
                "cycle subset count wrong at n=" + std::to_string(n));
        c.check(distinct(path) && distinct(cycle),
                "duplicate subsets at n=" + std::to_string(n));
        if (n >= 2) {
            const std::size_t smaller = pair_excluding_subsets(n - 2).subsets.size();
            c.check(cycle.subsets.size() - path.subsets.size() ==
                        smaller - (n % 2 == 0 ? 1 : 0),
                    "cyclic/path difference wrong at n=" + std::to_string(n));
        }
        bool all_valid = true;
        for (const auto& s : path.subsets) {
            all_valid = all_valid && valid_subset(s, n, false) &&
                        (static_cast<std::size_t>(n) - s.size()) % 2 == 0;
        }
        for (const auto& s : cycle.subsets) {
            all_valid = all_valid && valid_subset(s, n, true) &&
                        (static_cast<std::size_t>(n) - s.size()) % 2 == 0;
        }
        c.check(all_valid, "invalid subset in family at n=" + std::to_string(n));
    }

    // The enumerated sum agrees with evaluating the materialized family.
    std::mt19937_64 rng(opt.seed ^ 0x7777777712345678ull);
    for (int k = 0; k < 200; ++k) {
        std::uniform_int_distribution<int> nd(1, 10), ld(1, 12);
        const Seq v = random_seq(rng, nd(rng), 1, 9);
        QuidditySequence q(v);
        const int len = ld(rng);
        const std::int64_t i = std::uniform_int_distribution<std::int64_t>(1, 12)(rng);
        const SubsetFamily family = pair_excluding_subsets(len);
        BigInt expected = 0;
        for (const auto& subset : family.subsets) {
            BigInt prod = 1;
            for (int e : subset) prod *= q.cyclic(i + e - 1);
            if ((static_cast<std::size_t>(len) - subset.size()) / 2 % 2) {
                expected -= prod;
            } else {
                expected += prod;
            }
        }
        c.check(entry_pair_excluding(q, i, i + len - 1) == expected,
                [&] { return "family evaluation mismatch for " + seq_str(v); });
    }
    return c.result;
}

std::vector<SuiteResult> verify_all(const VerifyOptions& opt) {
    return {verify_reduction(opt), verify_oracles(opt), verify_growth(opt),
            verify_bijections(opt), verify_commutation(opt), verify_tube(opt),
            verify_subsets(opt)};
}

}  // namespace friezes
