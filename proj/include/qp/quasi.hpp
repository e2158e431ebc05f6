#pragma once

#include "qp/exact.hpp"

#include <vector>

namespace qp {

// Quasi coefficients: C_[s](n,k) counts lattice paths from (0,0) to (n,k)
// with step set {(1,0), (1,1), (2,1), ..., (s,1)}. Zero for k < 0 or k > n;
// C_[s](n,0) = C_[s](n,n) = 1. Six independent routes, cross-checked against
// the brute-force path enumeration.

// exhaustive depth-first path count; testing oracle only, requires n <= 18
ExactInt quasi_by_lattice_oracle(int s, long long n, long long k);

// memoized C_[s](n,k) = C_[s](n-1,k) + sum_{j=1..s} C_[s](n-j, k-1);
// the production route
ExactInt quasi_by_recurrence(int s, long long n, long long k);

// nested sum over j_1 >= ... >= j_{s-1} of
// C(k,j_1) C(j_1,j_2) ... C(j_{s-2},j_{s-1}) C(n - sum j_i, k)
ExactInt quasi_by_explicit_binomial(int s, long long n, long long k);

// sum over compositions k_1+...+k_s = k of
// multinomial(k; k_1..k_s) C(n + k - sum i*k_i, k)
ExactInt quasi_by_explicit_multinomial(int s, long long n, long long k);

// C_[s](n,k) = sum_i C(n-i, k) C_{s-1}(k, i); reduces to Barry's relation at s=2
ExactInt quasi_by_spascal_link(int s, long long n, long long k);

// alternating dual: sum_j (-1)^j C(k,j) C(n+k-sj, 2k)
ExactInt quasi_by_demoivre_dual(int s, long long n, long long k);

// Numeric check of the alternating nested sum at w = exp(2i*pi/s) against the
// recurrence value; requires s >= 2 and n <= 14 (desk scale).
bool verify_root_of_unity_dual(int s, long long n, long long k, double tolerance);

// Nested sum with exact rational weights 2^{j_1} (3/2)^{j_2} ... (s/(s-1))^{j_{s-1}};
// true iff the rational total is the integer C_[s](n,k). Requires s >= 2.
bool verify_nested_rational(int s, long long n, long long k);

struct DelannoyParams {
    int m = 1;
    ExactInt a = 1;
    std::vector<ExactInt> weights; // a_1..a_m
};

// D_m(n+1,k) = a*D_m(n+1,k-1) + sum_{i=0..m-1} a_{i+1}*D_m(n,k-i),
// boundaries D_m(0,k) = a^k and D_m(n,0) = a_1^n; entries for 0 <= n <= max_n,
// 0 <= k <= max_k
std::vector<std::vector<ExactInt>> delannoy_table(const DelannoyParams& p, long long max_n, long long max_k);

// unit-weight correspondence: D_s(k, n-k) == C_[s](n,k) for 0 <= k <= n <= max_n
bool verify_delannoy_correspondence(int s, long long max_n);

struct TriangleTable {
    int s = 1;
    std::vector<std::vector<ExactInt>> rows; // row n holds entries k = 0..n
};

TriangleTable triangle_rows(int s, long long count);

namespace detail {
CPoint root_of_unity_dual_sum(int s, long long n, long long k);
// max(|Re - exact|, |Im|) against the recurrence value
double root_of_unity_dual_error(int s, long long n, long long k);
} // namespace detail

} // namespace qp
