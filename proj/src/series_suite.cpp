#include "qp/series_suite.hpp"

#include "qp/quasi.hpp"
#include "qp/series.hpp"

#include <stdexcept>

namespace qp {

namespace {

using ISeries = Series<ExactInt>;

ISeries geometric_series(std::size_t order) { // 1/(1-x)
    return series_geometric_inverse(ISeries(order, {1, -1}));
}

ISeries poly_series(std::size_t order, std::vector<ExactInt> coeffs) {
    return ISeries(order, std::move(coeffs));
}

} // namespace

GfCheckReport check_binomial_gf(long long k, std::size_t order) {
    if (k < 0) throw std::invalid_argument("check_binomial_gf: k must be >= 0");
    if (order < static_cast<std::size_t>(k) + 1)
        throw std::invalid_argument("check_binomial_gf: order must be >= k+1");
    GfCheckReport rep;
    rep.name = "binomial_gf(k=" + std::to_string(k) + ")";
    rep.order = order;
    std::vector<ExactInt> xk(static_cast<std::size_t>(k) + 1);
    xk.back() = 1;
    ISeries num = poly_series(order, std::move(xk));
    ISeries inv = geometric_series(order);
    ISeries got = series_mul(num, series_pow(inv, static_cast<unsigned long long>(k) + 1));
    for (std::size_t n = 0; n < order; ++n) {
        ExactInt expected = int_binomial(static_cast<long long>(n), k);
        if (got[n] != expected)
            rep.mismatches.push_back({n, expected, got[n]});
    }
    return rep;
}

GfCheckReport check_quasi_gf(int s, long long k, std::size_t order) {
    if (s < 1) throw std::invalid_argument("check_quasi_gf: s must be >= 1");
    if (k < 0) throw std::invalid_argument("check_quasi_gf: k must be >= 0");
    if (order < static_cast<std::size_t>(k) + 1)
        throw std::invalid_argument("check_quasi_gf: order must be >= k+1");
    GfCheckReport rep;
    rep.name = "quasi_gf(s=" + std::to_string(s) + ",k=" + std::to_string(k) + ")";
    rep.order = order;
    std::vector<ExactInt> step(static_cast<std::size_t>(s), 1); // 1+x+...+x^{s-1}
    std::vector<ExactInt> xk(static_cast<std::size_t>(k) + 1);
    xk.back() = 1;
    ISeries num = series_mul(series_pow(poly_series(order, std::move(step)),
                                        static_cast<unsigned long long>(k)),
                             poly_series(order, std::move(xk)));
    ISeries inv = geometric_series(order);
    ISeries got = series_mul(num, series_pow(inv, static_cast<unsigned long long>(k) + 1));
    for (std::size_t n = 0; n < order; ++n) {
        ExactInt expected = quasi_by_recurrence(s, static_cast<long long>(n), k);
        if (got[n] != expected)
            rep.mismatches.push_back({n, expected, got[n]});
    }
    return rep;
}

GfCheckReport check_ray_gf(int s, const Direction& d, std::size_t order) {
    if (s < 1) throw std::invalid_argument("check_ray_gf: s must be >= 1");
    if (order < 1) throw std::invalid_argument("check_ray_gf: order must be >= 1");
    GfCheckReport rep;
    rep.name = "ray_gf(s=" + std::to_string(s) + ",alpha=" + std::to_string(d.alpha)
             + ",beta=" + std::to_string(d.beta) + ",r=" + std::to_string(d.r) + ")";
    rep.order = order;

    // beta < alpha keeps the (1-x) exponent non-negative
    ISeries one_minus_x = poly_series(order, {1, -1});
    std::vector<ExactInt> ramp(static_cast<std::size_t>(s) + 1, 1);
    ramp[0] = 0; // x + x^2 + ... + x^s
    ISeries num = series_mul(
        series_pow(one_minus_x, static_cast<unsigned long long>(d.alpha - d.beta - 1)),
        series_pow(poly_series(order, std::move(ramp)), static_cast<unsigned long long>(d.beta)));

    std::vector<ExactInt> flat(static_cast<std::size_t>(s), 1); // 1 + x + ... + x^{s-1}
    std::vector<ExactInt> shift(static_cast<std::size_t>(d.r + d.alpha) + 1);
    shift.back() = 1; // x^{r+alpha}, exponent positive by the Direction invariant
    ISeries den = series_sub(
        series_pow(one_minus_x, static_cast<unsigned long long>(d.alpha)),
        series_mul(poly_series(order, std::move(shift)),
                   series_pow(poly_series(order, std::move(flat)),
                              static_cast<unsigned long long>(d.alpha))));

    ISeries quotient = series_mul(num, series_geometric_inverse(den));
    if (series_mul(quotient, den) != num)
        throw std::logic_error("check_ray_gf: series division failed to multiply back");

    for (std::size_t n = 0; n < order; ++n) {
        ExactInt expected = ray_sum_direct(s, d, static_cast<long long>(n) + 1);
        if (quotient[n] != expected)
            rep.mismatches.push_back({n, expected, quotient[n]});
    }
    return rep;
}

} // namespace qp
