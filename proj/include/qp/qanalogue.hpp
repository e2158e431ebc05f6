#pragma once

#include "qp/qpoly.hpp"
#include "qp/series.hpp"

#include <vector>

namespace qp {

// Bivariate polynomial in x and q: entry i is the QPoly coefficient of x^i.
// Canonical: no trailing zero polynomials.
class QXPoly {
public:
    QXPoly() = default;
    explicit QXPoly(std::vector<QPoly> coeffs); // trims trailing zero entries

    bool is_zero() const { return c_.empty(); }
    std::size_t x_degree() const { return c_.empty() ? 0 : c_.size() - 1; }
    const std::vector<QPoly>& coeffs() const { return c_; }
    QPoly coeff(std::size_t i) const { return i < c_.size() ? c_[i] : QPoly(); }

    QXPoly& operator+=(const QXPoly& o);
    friend QXPoly operator+(QXPoly a, const QXPoly& b) { return a += b; }
    friend bool operator==(const QXPoly& a, const QXPoly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const QXPoly& a, const QXPoly& b) { return !(a == b); }

    // substitutes x -> x*q^e: coefficient of x^k is scaled by q^{e*k}.
    // Negative e requires every affected coefficient to be divisible by the
    // q-power; a violation throws std::logic_error (implementation bug).
    QXPoly scale_x_by_q_power(long long e) const;

    // multiply by x^sh
    QXPoly shift_x(std::size_t sh) const;

    // scale the coefficient of x^k by q^{base + per_x*k}; same exactness
    // contract as scale_x_by_q_power when an exponent lands negative
    QXPoly scale_coeffs(long long base, long long per_x) const;

    // evaluate q := 1, leaving the x-coefficient list
    std::vector<ExactInt> at_q_one() const;

private:
    void trim();
    std::vector<QPoly> c_;
};

// [n k] = [n]_q! / ([k]_q! [n-k]_q!) * q^{C(k,2)}; zero outside 0 <= k <= n.
// The factorial quotient is computed by exact long division.
QPoly q_binomial(long long n, long long k);

// Both q-Pascal recurrences hold as QPoly identities for all 0 <= k <= n <= n_max:
//   [n k] = [n-1 k] + q^{n-1} [n-1 k-1]
//   [n k] = q^k [n-1 k] + q^{k-1} [n-1 k-1]
bool verify_q_binomial_recurrences(long long n_max);

// coefficient of x^k in prod_{j=0..n-1} (1 + q^j x + (q^j x)^2 + ... + (q^j x)^s)
QPoly q_bisnomial(int s, long long n, long long k);

// full row n of the product above, entries k = 0..s*n
std::vector<QPoly> q_bisnomial_row(int s, long long n);

enum class QQuasiRoute { recurrence_a, recurrence_b };

// q-deformation of the quasi coefficient, by either recurrence:
//   a: [n k] = [n-1 k] + sum_{j=1..s} q^{n-j} [n-j k-1]
//   b: [n k] = q^k [n-1 k] + sum_{j=1..s} q^{(k-1)j} [n-j k-1]
// [0 0] = 1; zero outside 0 <= k <= n. Memoized per (s, route).
QPoly q_quasi(int s, long long n, long long k, QQuasiRoute route = QQuasiRoute::recurrence_a);

// sum_j [n-j k] * [k j]^{(s-1)}; the s=1 factor collapses to j=0
QPoly q_quasi_by_explicit(int s, long long n, long long k);

// x^k q^{C(k,2)} prod_{j=0..k-1}(1 + q^j x + ... + (q^j x)^{s-1})
//   / prod_{j=0..k}(1 - q^j x), truncated at `order`; coefficient of x^n is
// q_quasi(s, n, k)
Series<QPoly> q_quasi_gf(int s, long long k, std::size_t order);

// T_0 = 0 and T_{n+1}(x) = sum_k [n-k k]_{[s]} x^k for n = 0..count-2.
// x_degree_cap must cover the largest term degree floor((count-2)/2);
// smaller caps are rejected rather than silently truncated.
std::vector<QXPoly> q_sbonacci(int s, long long count, long long x_degree_cap);

// checks, for n = 1..count-2, both polynomial recurrences
//   T_{n+1}(x) = T_n(x) + x sum_{j=1..s} q^{n-j-1} T_{n-j}(x/q)
//   T_{n+1}(x) = T_n(xq) + x sum_{j=1..s} T_{n-j}(x q^j)
// (neither holds at n = 0, where every right-hand term vanishes against T_1 = 1)
bool verify_q_sbonacci_recurrences(int s, long long count);

} // namespace qp
