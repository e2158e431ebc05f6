#include "qp/rays.hpp"

#include "qp/bisnomial.hpp"
#include "qp/quasi.hpp"

#include <stdexcept>

namespace qp {

Direction::Direction(long long alpha_, long long beta_, long long r_)
    : alpha(alpha_), beta(beta_), r(r_) {
    if (alpha < 1) throw std::invalid_argument("Direction: constraint alpha >= 1 violated");
    if (beta < 0) throw std::invalid_argument("Direction: constraint beta >= 0 violated");
    if (beta >= alpha) throw std::invalid_argument("Direction: constraint beta < alpha violated");
    if (r + alpha <= 0) throw std::invalid_argument("Direction: constraint r + alpha > 0 violated");
}

std::vector<ExactInt> sbonacci(int s, long long count) {
    if (count < 1) throw std::invalid_argument("sbonacci: count must be positive");
    std::vector<ExactInt> t;
    t.reserve(static_cast<std::size_t>(count));
    Direction diag(1, 0, 1);
    for (long long n = 0; n < count; ++n) t.push_back(ray_sum_direct(s, diag, n));
    return t;
}

ExactInt ray_sum_direct(int s, const Direction& d, long long n) {
    if (s < 1) throw std::invalid_argument("ray_sum_direct: s must be positive");
    if (n < 0) throw std::invalid_argument("ray_sum_direct: n must be nonnegative");
    if (n == 0) return 0;
    long long np = n - 1;
    // Terms are C_[s](np - r*k, beta + alpha*k), nonzero only while
    // beta + alpha*k <= np - r*k, i.e. k <= (np - beta)/(alpha + r).
    // alpha + r > 0 by the Direction invariant, so the sum terminates: each
    // step k -> k+1 raises the column by alpha and the row by only -r < alpha,
    // and once the column overtakes the row every later term is zero too.
    ExactInt total = 0;
    for (long long k = 0; d.beta + d.alpha * k <= np - d.r * k; ++k) {
        long long row = np - d.r * k;
        total += quasi_by_recurrence(s, row, d.beta + d.alpha * k);
    }
    return total;
}

bool ray_recurrence_holds_at(int s, const Direction& d, long long n) {
    auto term = [&](long long m) -> ExactInt {
        return m >= 0 ? ray_sum_direct(s, d, m) : ExactInt(0);
    };
    ExactInt lhs = 0;
    for (long long i = 0; i <= d.alpha; ++i) {
        ExactInt t = int_binomial(d.alpha, i) * term(n - i);
        if (i % 2 == 0) lhs += t; else lhs -= t;
    }
    ExactInt rhs = 0;
    if (s == 1) {
        rhs = term(n - d.alpha - d.r); // the degenerate weight row is the single 1
    } else {
        for (long long i = 0; i <= d.alpha * (s - 1); ++i)
            rhs += bisnomial_by_expansion(s - 1, d.alpha, i) * term(n - d.alpha - d.r - i);
    }
    return lhs == rhs;
}

bool verify_ray_recurrence(int s, const Direction& d, long long n_max) {
    if (s < 1) throw std::invalid_argument("verify_ray_recurrence: s must be positive");
    long long lo = d.alpha * s + d.r;
    if (n_max < lo) throw std::invalid_argument("verify_ray_recurrence: n_max below alpha*s + r");
    for (long long n = lo; n <= n_max; ++n)
        if (!ray_recurrence_holds_at(s, d, n)) return false;
    return true;
}

bool verify_alternating_lemma(long long a, long long b, long long alpha) {
    if (alpha < 0 || a < 0 || b < 0) throw std::invalid_argument("verify_alternating_lemma: inputs must be nonnegative");
    if (alpha > a) throw std::invalid_argument("verify_alternating_lemma: requires alpha <= a");
    ExactInt lhs = 0;
    for (long long i = 0; i <= alpha; ++i) {
        ExactInt t = int_binomial(alpha, i) * int_binomial(a - i, b);
        if (i % 2 == 0) lhs += t; else lhs -= t;
    }
    return lhs == int_binomial(a - alpha, b - alpha);
}

} // namespace qp
