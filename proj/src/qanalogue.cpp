#include "qp/qanalogue.hpp"

#include "qp/exact.hpp"

#include <map>
#include <mutex>
#include <stdexcept>
#include <utility>

namespace qp {

namespace {

// p * q^e with e possibly negative; negative shifts must divide exactly
QPoly shift_q_signed(const QPoly& p, long long e) {
    if (p.is_zero()) return p;
    if (e >= 0) return shift_q(p, static_cast<std::size_t>(e));
    return qpoly_divide_exact(p, QPoly::q_power(static_cast<std::size_t>(-e)));
}

void check_sn(int s, long long n, const char* who) {
    if (s < 1) throw std::invalid_argument(std::string(who) + ": s must be >= 1");
    if (n < 0) throw std::invalid_argument(std::string(who) + ": n must be >= 0");
}

} // namespace

QXPoly::QXPoly(std::vector<QPoly> coeffs) : c_(std::move(coeffs)) { trim(); }

void QXPoly::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

QXPoly& QXPoly::operator+=(const QXPoly& o) {
    if (c_.size() < o.c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
}

QXPoly QXPoly::scale_x_by_q_power(long long e) const {
    return scale_coeffs(0, e);
}

QXPoly QXPoly::shift_x(std::size_t sh) const {
    if (c_.empty() || sh == 0) return *this;
    std::vector<QPoly> out(sh);
    out.insert(out.end(), c_.begin(), c_.end());
    return QXPoly(std::move(out));
}

QXPoly QXPoly::scale_coeffs(long long base, long long per_x) const {
    std::vector<QPoly> out(c_.size());
    for (std::size_t k = 0; k < c_.size(); ++k)
        out[k] = shift_q_signed(c_[k], base + per_x * static_cast<long long>(k));
    return QXPoly(std::move(out));
}

std::vector<ExactInt> QXPoly::at_q_one() const {
    std::vector<ExactInt> out(c_.size());
    for (std::size_t k = 0; k < c_.size(); ++k) out[k] = qpoly_eval_at_one(c_[k]);
    return out;
}

QPoly q_binomial(long long n, long long k) {
    if (n < 0) throw std::invalid_argument("q_binomial: n must be >= 0");
    if (k < 0 || k > n) return QPoly();
    auto qfact = [](long long m) {
        QPoly f(1);
        for (long long i = 1; i <= m; ++i) f = f * QPoly::bracket(static_cast<std::size_t>(i));
        return f;
    };
    QPoly gauss = qpoly_divide_exact(qfact(n), qfact(k) * qfact(n - k));
    return shift_q(gauss, static_cast<std::size_t>(k * (k - 1) / 2));
}

bool verify_q_binomial_recurrences(long long n_max) {
    if (n_max < 1) throw std::invalid_argument("verify_q_binomial_recurrences: n_max must be >= 1");
    for (long long n = 1; n <= n_max; ++n) {
        for (long long k = 0; k <= n; ++k) {
            QPoly lhs = q_binomial(n, k);
            QPoly a = q_binomial(n - 1, k)
                    + shift_q(q_binomial(n - 1, k - 1), static_cast<std::size_t>(n - 1));
            if (lhs != a) return false;
            QPoly b = shift_q(q_binomial(n - 1, k), static_cast<std::size_t>(k));
            if (k >= 1)
                b += shift_q(q_binomial(n - 1, k - 1), static_cast<std::size_t>(k - 1));
            if (lhs != b) return false;
        }
    }
    return true;
}

namespace {

std::mutex q_bis_mutex;
std::map<int, std::vector<std::vector<QPoly>>> q_bis_rows;

// row n of prod_{j=0..n-1} (1 + q^j x + ... + (q^j x)^s); entry k is the
// coefficient of x^k, indices 0..s*n
const std::vector<QPoly>& q_bis_row_locked(int s, long long n) {
    auto& rows = q_bis_rows[s];
    if (rows.empty()) rows.push_back({QPoly(1)});
    while (static_cast<long long>(rows.size()) <= n) {
        const auto& prev = rows.back();
        long long m = static_cast<long long>(rows.size()); // building row m
        std::vector<QPoly> row(static_cast<std::size_t>(s) * m + 1);
        for (std::size_t k = 0; k < row.size(); ++k) {
            QPoly acc;
            for (long long i = 0; i <= s && i <= static_cast<long long>(k); ++i) {
                std::size_t prev_k = k - static_cast<std::size_t>(i);
                if (prev_k >= prev.size()) continue;
                acc += shift_q(prev[prev_k], static_cast<std::size_t>((m - 1) * i));
            }
            row[k] = std::move(acc);
        }
        rows.push_back(std::move(row));
    }
    return rows[static_cast<std::size_t>(n)];
}

} // namespace

QPoly q_bisnomial(int s, long long n, long long k) {
    check_sn(s, n, "q_bisnomial");
    if (k < 0 || k > static_cast<long long>(s) * n) return QPoly();
    std::lock_guard<std::mutex> lock(q_bis_mutex);
    return q_bis_row_locked(s, n)[static_cast<std::size_t>(k)];
}

std::vector<QPoly> q_bisnomial_row(int s, long long n) {
    check_sn(s, n, "q_bisnomial_row");
    std::lock_guard<std::mutex> lock(q_bis_mutex);
    return q_bis_row_locked(s, n);
}

namespace {

std::mutex q_quasi_mutex;
// keyed by (s, route); row n holds entries k = 0..n
std::map<std::pair<int, int>, std::vector<std::vector<QPoly>>> q_quasi_rows;

const std::vector<QPoly>& q_quasi_row_locked(int s, long long n, QQuasiRoute route) {
    auto& rows = q_quasi_rows[{s, static_cast<int>(route)}];
    if (rows.empty()) rows.push_back({QPoly(1)});
    auto at = [&rows](long long nn, long long kk) -> QPoly {
        if (nn < 0 || kk < 0 || kk > nn) return QPoly();
        return rows[static_cast<std::size_t>(nn)][static_cast<std::size_t>(kk)];
    };
    while (static_cast<long long>(rows.size()) <= n) {
        long long m = static_cast<long long>(rows.size());
        std::vector<QPoly> row(static_cast<std::size_t>(m) + 1);
        for (long long k = 0; k <= m; ++k) {
            QPoly acc;
            if (route == QQuasiRoute::recurrence_a) {
                acc = at(m - 1, k);
                for (long long j = 1; j <= s && j <= m; ++j)
                    acc += shift_q(at(m - j, k - 1), static_cast<std::size_t>(m - j));
            } else {
                acc = shift_q(at(m - 1, k), static_cast<std::size_t>(k));
                if (k >= 1)
                    for (long long j = 1; j <= s && j <= m; ++j)
                        acc += shift_q(at(m - j, k - 1), static_cast<std::size_t>((k - 1) * j));
            }
            row[static_cast<std::size_t>(k)] = std::move(acc);
        }
        rows.push_back(std::move(row));
    }
    return rows[static_cast<std::size_t>(n)];
}

} // namespace

QPoly q_quasi(int s, long long n, long long k, QQuasiRoute route) {
    check_sn(s, n, "q_quasi");
    if (k < 0 || k > n) return QPoly();
    std::lock_guard<std::mutex> lock(q_quasi_mutex);
    return q_quasi_row_locked(s, n, route)[static_cast<std::size_t>(k)];
}

QPoly q_quasi_by_explicit(int s, long long n, long long k) {
    check_sn(s, n, "q_quasi_by_explicit");
    if (k < 0 || k > n) return QPoly();
    if (s == 1) return q_binomial(n, k);
    QPoly acc;
    for (long long j = 0; j <= static_cast<long long>(s - 1) * k && j <= n; ++j)
        acc += q_binomial(n - j, k) * q_bisnomial(s - 1, k, j);
    return acc;
}

Series<QPoly> q_quasi_gf(int s, long long k, std::size_t order) {
    check_sn(s, 0, "q_quasi_gf");
    if (k < 0) throw std::invalid_argument("q_quasi_gf: k must be >= 0");
    if (order == 0) throw std::invalid_argument("q_quasi_gf: order must be >= 1");
    // numerator: x^k q^{C(k,2)} prod_{j=0..k-1} (1 + q^j x + ... + (q^j x)^{s-1})
    std::vector<QPoly> num{shift_q(QPoly(1), static_cast<std::size_t>(k * (k - 1) / 2))};
    for (long long j = 0; j < k; ++j) {
        std::vector<QPoly> factor(static_cast<std::size_t>(s));
        for (long long i = 0; i < s; ++i)
            factor[static_cast<std::size_t>(i)] = QPoly::q_power(static_cast<std::size_t>(j * i));
        std::vector<QPoly> prod(num.size() + factor.size() - 1);
        for (std::size_t a = 0; a < num.size(); ++a)
            for (std::size_t b = 0; b < factor.size(); ++b)
                prod[a + b] += num[a] * factor[b];
        num = std::move(prod);
    }
    num.insert(num.begin(), static_cast<std::size_t>(k), QPoly());
    // denominator: prod_{j=0..k} (1 - q^j x)
    std::vector<QPoly> den{QPoly(1)};
    for (long long j = 0; j <= k; ++j) {
        std::vector<QPoly> prod(den.size() + 1);
        for (std::size_t a = 0; a < den.size(); ++a) {
            prod[a] += den[a];
            prod[a + 1] -= den[a] * QPoly::q_power(static_cast<std::size_t>(j));
        }
        den = std::move(prod);
    }
    Series<QPoly> num_s(order, num);
    Series<QPoly> den_s(order, den);
    return series_mul(num_s, series_geometric_inverse(den_s));
}

std::vector<QXPoly> q_sbonacci(int s, long long count, long long x_degree_cap) {
    if (s < 1) throw std::invalid_argument("q_sbonacci: s must be >= 1");
    if (count < 1) throw std::invalid_argument("q_sbonacci: count must be positive");
    long long needed = count >= 2 ? (count - 2) / 2 : 0;
    if (x_degree_cap < needed)
        throw std::invalid_argument("q_sbonacci: x_degree_cap too small for requested count");
    std::vector<QXPoly> t;
    t.reserve(static_cast<std::size_t>(count));
    t.emplace_back(); // T_0 = 0
    for (long long n = 0; n + 1 < count; ++n) {
        std::vector<QPoly> coeffs;
        for (long long k = 0; 2 * k <= n; ++k)
            coeffs.push_back(q_quasi(s, n - k, k));
        t.push_back(QXPoly(std::move(coeffs)));
    }
    return t;
}

bool verify_q_sbonacci_recurrences(int s, long long count) {
    if (s < 1) throw std::invalid_argument("verify_q_sbonacci_recurrences: s must be >= 1");
    if (count < 1) throw std::invalid_argument("verify_q_sbonacci_recurrences: count must be positive");
    long long cap = count >= 2 ? (count - 2) / 2 : 0;
    std::vector<QXPoly> t = q_sbonacci(s, count, cap);
    for (long long n = 1; n + 1 < count; ++n) {
        const QXPoly& lhs = t[static_cast<std::size_t>(n + 1)];
        // T_n(x) + x sum_j q^{n-j-1} T_{n-j}(x/q): the combined scaling sends
        // the x^k coefficient to q^{n-j-1-k} times itself, which stays exact
        // because the coefficient vanishes whenever the exponent is negative
        QXPoly es = t[static_cast<std::size_t>(n)];
        for (long long j = 1; j <= s && j <= n; ++j)
            es += t[static_cast<std::size_t>(n - j)].scale_coeffs(n - j - 1, -1).shift_x(1);
        if (lhs != es) return false;
        // T_n(xq) + x sum_j T_{n-j}(x q^j)
        QXPoly es1 = t[static_cast<std::size_t>(n)].scale_x_by_q_power(1);
        for (long long j = 1; j <= s && j <= n; ++j)
            es1 += t[static_cast<std::size_t>(n - j)].scale_x_by_q_power(j).shift_x(1);
        if (lhs != es1) return false;
    }
    return true;
}

} // namespace qp
