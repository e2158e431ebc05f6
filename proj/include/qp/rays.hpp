#pragma once

#include "qp/exact.hpp"

#include <vector>

namespace qp {

// Transversal direction over the quasi triangle with the constraints
// alpha >= 1, 0 <= beta < alpha, r + alpha > 0. Construction validates and
// names the violated constraint.
struct Direction {
    long long alpha;
    long long beta;
    long long r;
    Direction(long long alpha_, long long beta_, long long r_);
};

// T_0..T_{count-1} with T_{n+1} = sum_k C_[s](n-k, k); T_0 = 0, T_1 = 1,
// satisfies T_{n+1} = T_n + ... + T_{n-s}
std::vector<ExactInt> sbonacci(int s, long long count);

// T_n for the ray (alpha, beta, r): T_0 = 0 and, for n >= 1,
// T_n = sum_k C_[s]((n-1) - r*k, beta + alpha*k)
ExactInt ray_sum_direct(int s, const Direction& d, long long n);

// single instance of the transversal recurrence at index n:
// sum_{i=0..alpha} (-1)^i C(alpha,i) T_{n-i}
//   == sum_{i=0..alpha(s-1)} C_{s-1}(alpha,i) T_{n-alpha-r-i}
bool ray_recurrence_holds_at(int s, const Direction& d, long long n);

// checks the recurrence for every n in [alpha*s + r, n_max];
// requires n_max >= alpha*s + r
bool verify_ray_recurrence(int s, const Direction& d, long long n_max);

// sum_{i=0..alpha} (-1)^i C(alpha,i) C(a-i,b) == C(a-alpha, b-alpha);
// requires 0 <= alpha <= a
bool verify_alternating_lemma(long long a, long long b, long long alpha);

} // namespace qp
