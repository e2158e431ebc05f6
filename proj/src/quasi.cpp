#include "qp/quasi.hpp"

#include "qp/bisnomial.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <stdexcept>

namespace qp {

namespace {

void check_query(int s, long long n) {
    if (s < 1) throw std::invalid_argument("quasi: s must be positive");
    if (n < 0) throw std::invalid_argument("quasi: n must be nonnegative");
}

struct RowCache {
    std::mutex mu;
    std::map<int, std::vector<std::vector<ExactInt>>> by_s;
};

RowCache& cache() {
    static RowCache c;
    return c;
}

// grows the per-s triangle to row n and returns a copy of that row;
// the recurrence plus the zero conventions regenerate the boundary ones
std::vector<ExactInt> recurrence_row(int s, long long n) {
    std::lock_guard<std::mutex> lock(cache().mu);
    auto& rows = cache().by_s[s];
    if (rows.empty()) rows.push_back({ExactInt(1)});
    while (static_cast<long long>(rows.size()) <= n) {
        long long m = static_cast<long long>(rows.size());
        std::vector<ExactInt> row(static_cast<std::size_t>(m + 1), ExactInt(0));
        for (long long k = 0; k <= m; ++k) {
            ExactInt v = 0;
            if (k <= m - 1) v += rows[static_cast<std::size_t>(m - 1)][static_cast<std::size_t>(k)];
            for (int j = 1; j <= s && j <= m; ++j) {
                long long pn = m - j;
                if (k - 1 >= 0 && k - 1 <= pn) v += rows[static_cast<std::size_t>(pn)][static_cast<std::size_t>(k - 1)];
            }
            row[static_cast<std::size_t>(k)] = std::move(v);
        }
        rows.push_back(std::move(row));
    }
    return rows[static_cast<std::size_t>(n)];
}

unsigned long long count_paths(int s, long long n, long long k, long long x, long long y) {
    if (x == n && y == k) return 1;
    if (x > n || y > k) return 0;
    unsigned long long total = count_paths(s, n, k, x + 1, y);
    for (int j = 1; j <= s; ++j) total += count_paths(s, n, k, x + j, y + 1);
    return total;
}

} // namespace

ExactInt quasi_by_lattice_oracle(int s, long long n, long long k) {
    check_query(s, n);
    if (n > 18) throw std::domain_error("quasi_by_lattice_oracle: exhaustive enumeration requires n <= 18");
    if (k < 0 || k > n) return 0;
    return ExactInt(count_paths(s, n, k, 0, 0));
}

ExactInt quasi_by_recurrence(int s, long long n, long long k) {
    check_query(s, n);
    if (k < 0 || k > n) return 0;
    return recurrence_row(s, n)[static_cast<std::size_t>(k)];
}

ExactInt quasi_by_explicit_binomial(int s, long long n, long long k) {
    check_query(s, n);
    if (k < 0 || k > n) return 0;
    if (s == 1) return int_binomial(n, k);
    // chain C(k,j_1) C(j_1,j_2) ... C(j_{s-2},j_{s-1}); trailing factor C(n - sum, k)
    ExactInt total = 0;
    auto rec = [&](auto&& self, int i, long long prev, long long acc, const ExactInt& prod) -> void {
        if (i == s) {
            total += prod * int_binomial(n - acc, k);
            return;
        }
        for (long long v = 0; v <= prev; ++v)
            self(self, i + 1, v, acc + v, prod * int_binomial(prev, v));
    };
    rec(rec, 1, k, 0, ExactInt(1));
    return total;
}

ExactInt quasi_by_explicit_multinomial(int s, long long n, long long k) {
    check_query(s, n);
    if (k < 0 || k > n) return 0;
    // compositions k_1+...+k_s = k; weight index sum_i i*k_i; prune once the
    // trailing binomial's upper argument n + k - weight drops below k
    ExactInt total = 0;
    std::vector<long long> parts(static_cast<std::size_t>(s), 0);
    auto rec = [&](auto&& self, int i, long long rem, long long weight) -> void {
        if (n + k - weight < k) return;
        if (i == s - 1) {
            parts[static_cast<std::size_t>(i)] = rem;
            total += multinomial(k, parts) * int_binomial(n + k - weight - s * rem, k);
            return;
        }
        for (long long v = 0; v <= rem; ++v) {
            parts[static_cast<std::size_t>(i)] = v;
            self(self, i + 1, rem - v, weight + (i + 1) * v);
        }
    };
    rec(rec, 0, k, 0);
    return total;
}

ExactInt quasi_by_spascal_link(int s, long long n, long long k) {
    check_query(s, n);
    if (k < 0 || k > n) return 0;
    if (s == 1) return int_binomial(n, k); // the s-1 factor collapses to the i=0 term
    ExactInt total = 0;
    for (long long i = 0; i <= (s - 1) * k; ++i)
        total += int_binomial(n - i, k) * bisnomial_by_expansion(s - 1, k, i);
    return total;
}

ExactInt quasi_by_demoivre_dual(int s, long long n, long long k) {
    check_query(s, n);
    if (k < 0 || k > n) return 0;
    ExactInt total = 0;
    for (long long j = 0; j <= k; ++j) {
        ExactInt term = int_binomial(k, j) * int_binomial(n + k - s * j, 2 * k);
        if (j % 2 == 0) total += term; else total -= term;
    }
    return total;
}

namespace detail {

CPoint root_of_unity_dual_sum(int s, long long n, long long k) {
    const double pi = std::acos(-1.0);
    const double ang = 2.0 * pi / s;
    // sum_j C(n-j,k) (-1)^j sum over compositions j_1+...+j_{s-1}=j, parts <= k,
    // of prod C(k,j_i) w^{-sum r*j_r}
    CPoint total(0.0, 0.0);
    for (long long j = 0; j <= (s - 1) * k; ++j) {
        CPoint inner(0.0, 0.0);
        auto rec = [&](auto&& self, int i, long long rem, const ExactInt& prod, long long wexp) -> void {
            if (i == s - 2) {
                if (rem < 0 || rem > k) return;
                ExactInt p = prod * int_binomial(k, rem);
                inner += static_cast<double>(p) *
                         std::polar(1.0, -ang * static_cast<double>(wexp + (s - 1) * rem));
                return;
            }
            long long hi = std::min(k, rem);
            for (long long v = 0; v <= hi; ++v)
                self(self, i + 1, rem - v, prod * int_binomial(k, v), wexp + (i + 1) * v);
        };
        rec(rec, 0, j, ExactInt(1), 0);
        double outer = static_cast<double>(int_binomial(n - j, k));
        if (j % 2 != 0) outer = -outer;
        total += outer * inner;
    }
    return total;
}

double root_of_unity_dual_error(int s, long long n, long long k) {
    CPoint z = root_of_unity_dual_sum(s, n, k);
    double exact = static_cast<double>(quasi_by_recurrence(s, n, k));
    return std::max(std::abs(z.real() - exact), std::abs(z.imag()));
}

} // namespace detail

bool verify_root_of_unity_dual(int s, long long n, long long k, double tolerance) {
    check_query(s, n);
    if (s < 2) throw std::domain_error("verify_root_of_unity_dual: requires s >= 2");
    if (n > 14) throw std::domain_error("verify_root_of_unity_dual: requires n <= 14 (desk scale)");
    if (k < 0 || k > n) return true; // both sides are zero outside the triangle
    return detail::root_of_unity_dual_error(s, n, k) < tolerance;
}

bool verify_nested_rational(int s, long long n, long long k) {
    check_query(s, n);
    if (s < 2) throw std::domain_error("verify_nested_rational: requires s >= 2");
    if (k < 0 || k > n) return true;
    // chain over j_1 >= ... >= j_{s-1}: C(k,j_1) C(j_1,j_2) ... C(j_{s-2},j_{s-1})
    // with weight ((i+1)/i)^{j_i} per level; the last binomial takes only the
    // first s-2 indices off n-k and draws j_{s-1} itself
    ExactRational total = 0;
    auto rec = [&](auto&& self, int i, long long prev, long long acc, const ExactRational& prod) -> void {
        if (i == s - 1) {
            ExactRational w(s, s - 1);
            ExactRational wp = 1;
            for (long long v = 0; v <= prev; ++v) {
                if (v > 0) wp *= w;
                total += prod * wp * ExactRational(int_binomial(prev, v)) *
                         ExactRational(int_binomial(n - k - acc, v));
            }
            return;
        }
        ExactRational w(i + 1, i);
        ExactRational wp = 1;
        for (long long v = 0; v <= prev; ++v) {
            if (v > 0) wp *= w;
            self(self, i + 1, v, acc + v, prod * wp * ExactRational(int_binomial(prev, v)));
        }
    };
    if (s == 2) {
        ExactRational wp = 1;
        for (long long v = 0; v <= k; ++v) {
            if (v > 0) wp *= 2;
            total += wp * ExactRational(int_binomial(k, v)) * ExactRational(int_binomial(n - k, v));
        }
    } else {
        rec(rec, 1, k, 0, ExactRational(1));
    }
    ExactRational expect(quasi_by_recurrence(s, n, k));
    return total == expect;
}

std::vector<std::vector<ExactInt>> delannoy_table(const DelannoyParams& p, long long max_n, long long max_k) {
    if (p.m < 1) throw std::invalid_argument("delannoy_table: m must be positive");
    if (static_cast<long long>(p.weights.size()) != p.m)
        throw std::invalid_argument("delannoy_table: needs exactly m weights a_1..a_m");
    if (max_n < 0 || max_k < 0) throw std::invalid_argument("delannoy_table: negative extent");
    std::vector<std::vector<ExactInt>> d(static_cast<std::size_t>(max_n + 1),
                                         std::vector<ExactInt>(static_cast<std::size_t>(max_k + 1), ExactInt(0)));
    for (long long k = 0; k <= max_k; ++k) d[0][static_cast<std::size_t>(k)] = int_pow(p.a, static_cast<unsigned long long>(k));
    for (long long n = 0; n <= max_n; ++n) d[static_cast<std::size_t>(n)][0] = int_pow(p.weights[0], static_cast<unsigned long long>(n));
    for (long long n = 1; n <= max_n; ++n) {
        for (long long k = 1; k <= max_k; ++k) {
            ExactInt v = p.a * d[static_cast<std::size_t>(n)][static_cast<std::size_t>(k - 1)];
            for (int i = 0; i < p.m; ++i) {
                if (k - i >= 0) v += p.weights[static_cast<std::size_t>(i)] * d[static_cast<std::size_t>(n - 1)][static_cast<std::size_t>(k - i)];
            }
            d[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)] = std::move(v);
        }
    }
    return d;
}

bool verify_delannoy_correspondence(int s, long long max_n) {
    if (s < 1) throw std::invalid_argument("verify_delannoy_correspondence: s must be positive");
    DelannoyParams p;
    p.m = s;
    p.a = 1;
    p.weights.assign(static_cast<std::size_t>(s), ExactInt(1));
    auto d = delannoy_table(p, max_n, max_n);
    for (long long n = 0; n <= max_n; ++n)
        for (long long k = 0; k <= n; ++k)
            if (d[static_cast<std::size_t>(k)][static_cast<std::size_t>(n - k)] != quasi_by_recurrence(s, n, k)) return false;
    return true;
}

TriangleTable triangle_rows(int s, long long count) {
    if (count < 1) throw std::invalid_argument("triangle_rows: count must be positive");
    check_query(s, 0);
    TriangleTable t;
    t.s = s;
    t.rows.reserve(static_cast<std::size_t>(count));
    for (long long n = 0; n < count; ++n) t.rows.push_back(recurrence_row(s, n));
    return t;
}

} // namespace qp
