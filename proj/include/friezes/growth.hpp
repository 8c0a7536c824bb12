#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "friezes/bigint.hpp"
#include "friezes/quiddity.hpp"

namespace friezes {

/// Smallest divisor d of n such that a_{i+d} = a_i for all i.
std::int64_t minimal_period(const QuidditySequence& q);

/// delta_n: 0 for odd n, +1 when 4 | n, -1 when n = 2 (mod 4).
int growth_delta(std::int64_t n);

/// Growth coefficient from frieze rows: s_q = a(1, n) - a(2, n-1).
BigInt growth_coefficient_rows(const QuidditySequence& q);

/// Growth coefficient from the closed combinatorial formula:
/// the sum over distinct cyclic pair-excluding subsets I of {1..n} of
/// (-1)^{l(I)} prod_{k in I} a_k, plus delta_n.
BigInt growth_coefficient_formula(const QuidditySequence& q);

/// s_0, s_1, ..., s_r with s_0 = 2 and s_{r+1} = s_1 s_r - s_{r-1}.
/// By default s_1 is the growth coefficient of the frieze of minimal period
/// d, so that s_{n/d} is the growth coefficient of q itself. With
/// treat_length_as_period the given length is used (s_1 = s_q).
std::vector<BigInt> growth_sequence(const QuidditySequence& q, std::int64_t r,
                                    bool treat_length_as_period = false);

/// Closed form for the same sequence:
///   s_r = s1^r + r * sum_{l=1}^{floor(r/2)} (-1)^l (1/(r-l)) C(r-l, l) s1^{r-2l}
/// evaluated in exact integer arithmetic
/// (the coefficient equals C(r-l, l) + C(r-l-1, l-1)). s_0 = 2.
BigInt growth_closed_form(const BigInt& s1, std::int64_t r);

enum class GrowthMethod { Rows, Formula, Both };

struct GrowthReport {
    BigInt s_q;
    std::int64_t minimal_period = 0;
    int delta_n = 0;
    std::vector<BigInt> s_sequence;  // s_0..s_r of the minimal-period frieze
    std::string method;
};

/// Bundle used by the CLI. With GrowthMethod::Both the two computation
/// paths are compared and a mismatch throws std::logic_error.
GrowthReport growth_report(const QuidditySequence& q, std::int64_t r, GrowthMethod method);

}  // namespace friezes
