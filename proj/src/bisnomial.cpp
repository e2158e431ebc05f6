#include "qp/bisnomial.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <stdexcept>

namespace qp {

namespace {

void check_query(int s, long long n) {
    if (s < 1) throw std::invalid_argument("bisnomial: s must be positive");
    if (n < 0) throw std::invalid_argument("bisnomial: n must be nonnegative");
}

// longitudinal row table per s, grown on demand; rows are immutable once built
struct RowCache {
    std::mutex mu;
    std::map<int, std::vector<std::vector<ExactInt>>> by_s;
};

RowCache& cache() {
    static RowCache c;
    return c;
}

// returns a copy of row n; C_s(n,k) = sum_{j=0..s} C_s(n-1, k-j)
std::vector<ExactInt> longitudinal_row(int s, long long n) {
    std::lock_guard<std::mutex> lock(cache().mu);
    auto& rows = cache().by_s[s];
    if (rows.empty()) rows.push_back({ExactInt(1)});
    while (static_cast<long long>(rows.size()) <= n) {
        const auto& prev = rows.back();
        long long m = static_cast<long long>(rows.size());
        std::vector<ExactInt> row(static_cast<std::size_t>(s * m + 1), ExactInt(0));
        for (long long k = 0; k <= s * m; ++k) {
            ExactInt v = 0;
            for (int j = 0; j <= s; ++j) {
                long long i = k - j;
                if (i >= 0 && i < static_cast<long long>(prev.size())) v += prev[static_cast<std::size_t>(i)];
            }
            row[static_cast<std::size_t>(k)] = std::move(v);
        }
        rows.push_back(std::move(row));
    }
    return rows[static_cast<std::size_t>(n)];
}

} // namespace

ExactInt bisnomial_by_expansion(int s, long long n, long long k) {
    check_query(s, n);
    if (k < 0 || k > s * n) return 0;
    std::vector<ExactInt> poly{ExactInt(1)};
    for (long long i = 0; i < n; ++i) {
        std::vector<ExactInt> next(poly.size() + static_cast<std::size_t>(s), ExactInt(0));
        for (std::size_t a = 0; a < poly.size(); ++a) {
            if (poly[a] == 0) continue;
            for (int j = 0; j <= s; ++j) next[a + static_cast<std::size_t>(j)] += poly[a];
        }
        poly = std::move(next);
    }
    return poly[static_cast<std::size_t>(k)];
}

ExactInt bisnomial_by_nested_sum(int s, long long n, long long k) {
    check_query(s, n);
    if (k < 0 || k > s * n) return 0;
    // sum over j_1 >= j_2 >= ... >= j_s with j_1+...+j_s = k of
    // C(n,j_1) C(j_1,j_2) ... C(j_{s-1},j_s)
    ExactInt total = 0;
    std::vector<long long> j(static_cast<std::size_t>(s), 0);
    // depth i chooses j_{i+1} <= previous, remaining indices must absorb rem
    auto rec = [&](auto&& self, int i, long long prev, long long rem, const ExactInt& prod) -> void {
        if (i == s - 1) {
            if (rem <= prev) total += prod * int_binomial(prev, rem);
            return;
        }
        long long hi = std::min(prev, rem);
        for (long long v = hi; v >= 0; --v) {
            if (rem - v > v * (s - 1 - i)) break; // descending tail cannot reach rem
            self(self, i + 1, v, rem - v, prod * int_binomial(prev, v));
        }
    };
    if (s == 1) return int_binomial(n, k);
    rec(rec, 0, n, k, ExactInt(1));
    return total;
}

ExactInt bisnomial_by_longitudinal(int s, long long n, long long k) {
    check_query(s, n);
    if (k < 0 || k > s * n) return 0;
    return longitudinal_row(s, n)[static_cast<std::size_t>(k)];
}

std::vector<ExactInt> bisnomial_row(int s, long long n) {
    check_query(s, n);
    return longitudinal_row(s, n);
}

ExactInt bisnomial_by_diagonal(int s, long long n, long long k) {
    check_query(s, n);
    if (k < 0 || k > s * n) return 0;
    if (s == 1) return int_binomial(n, k);
    // C_s(n,k) = sum_j C(n,j) C_{s-1}(j, k-j)
    ExactInt total = 0;
    for (long long j = 0; j <= n; ++j) total += int_binomial(n, j) * bisnomial_by_diagonal(s - 1, j, k - j);
    return total;
}

ExactInt bisnomial_by_demoivre(int s, long long n, long long k) {
    check_query(s, n);
    if (k < 0 || k > s * n) return 0;
    if (n == 0) return k == 0 ? 1 : 0; // row 0 is the empty product
    // alternating sum terminates once the second binomial vanishes
    long long jmax = std::min(n, (k + n - 1) / (s + 1));
    ExactInt total = 0;
    for (long long j = 0; j <= jmax; ++j) {
        ExactInt term = int_binomial(n, j) * int_binomial(k - j * (s + 1) + n - 1, n - 1);
        if (j % 2 == 0) total += term; else total -= term;
    }
    return total;
}

namespace detail {

CPoint root_of_unity_bisnomial_sum(int s, long long n, long long k) {
    const double pi = std::acos(-1.0);
    const double ang = 2.0 * pi / (s + 1);
    // compositions j_1+...+j_s = k with each part in 0..n, weighted by
    // prod C(n,j_i) and a^{-sum r*j_r} for a on the unit circle
    CPoint total(0.0, 0.0);
    auto rec = [&](auto&& self, int i, long long rem, const ExactInt& prod, long long wexp) -> void {
        if (i == s - 1) {
            if (rem < 0 || rem > n) return;
            ExactInt p = prod * int_binomial(n, rem);
            double w = static_cast<double>(p);
            total += w * std::polar(1.0, -ang * static_cast<double>(wexp + s * rem));
            return;
        }
        long long hi = std::min(n, rem);
        for (long long v = 0; v <= hi; ++v)
            self(self, i + 1, rem - v, prod * int_binomial(n, v), wexp + (i + 1) * v);
    };
    if (k < 0 || k > s * n) return total;
    rec(rec, 0, k, ExactInt(1), 0);
    if (k % 2 != 0) total = -total;
    return total;
}

double root_of_unity_bisnomial_error(int s, long long n, long long k) {
    CPoint z = root_of_unity_bisnomial_sum(s, n, k);
    double exact = static_cast<double>(bisnomial_by_expansion(s, n, k));
    return std::max(std::abs(z.real() - exact), std::abs(z.imag()));
}

} // namespace detail

bool verify_root_of_unity_bisnomial(int s, long long n, long long k, double tolerance) {
    check_query(s, n);
    if (static_cast<long long>(s) * n > 20)
        throw std::domain_error("verify_root_of_unity_bisnomial: requires s*n <= 20 (round-off grows with term count)");
    return detail::root_of_unity_bisnomial_error(s, n, k) < tolerance;
}

} // namespace qp
