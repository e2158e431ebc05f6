#pragma once

#include "qp/exact.hpp"

#include <vector>

namespace qp {

// Coefficient of x^k in (1+x+...+x^s)^n, zero for k < 0 or k > s*n.
// Five independent computation routes; the expansion is the reference oracle.

ExactInt bisnomial_by_expansion(int s, long long n, long long k);
ExactInt bisnomial_by_nested_sum(int s, long long n, long long k);
ExactInt bisnomial_by_longitudinal(int s, long long n, long long k);
ExactInt bisnomial_by_diagonal(int s, long long n, long long k);
ExactInt bisnomial_by_demoivre(int s, long long n, long long k);

// full row n (entries k = 0..s*n) from the memoized longitudinal table
std::vector<ExactInt> bisnomial_row(int s, long long n);

// Numeric check of the alternating root-of-unity sum at a = exp(2i*pi/(s+1))
// against the exact expansion value. Guarded at desk scale: requires s*n <= 20.
// True iff both the real-part error and the imaginary part stay below tolerance.
bool verify_root_of_unity_bisnomial(int s, long long n, long long k, double tolerance);

namespace detail {
// unguarded evaluator of the alternating root-of-unity sum; round-off grows
// with the term count, callers own the tolerance question
CPoint root_of_unity_bisnomial_sum(int s, long long n, long long k);
// max(|Re - exact|, |Im|) against the expansion oracle
double root_of_unity_bisnomial_error(int s, long long n, long long k);
} // namespace detail

} // namespace qp
