#pragma once

#include "qp/exact.hpp"
#include "qp/qpoly.hpp"

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

namespace qp {

// Unit handling per coefficient ring: unit_inverse(c, out) returns whether c
// is invertible and stores the inverse. Over the integers the units are +-1;
// over the rationals every nonzero value; QPoly units are the constants +-1.
inline bool unit_inverse(const ExactInt& c, ExactInt& out) {
    if (c == 1 || c == -1) { out = c; return true; }
    return false;
}

inline bool unit_inverse(const ExactRational& c, ExactRational& out) {
    if (c == 0) return false;
    out = 1 / c;
    return true;
}

inline bool unit_inverse(const QPoly& c, QPoly& out) {
    if (c.degree() == 0 && (c.coeff(0) == 1 || c.coeff(0) == -1)) { out = c; return true; }
    return false;
}

// Truncated formal power series: exactly `order` coefficients, index n holds
// the coefficient of x^n. Operations never mix orders implicitly.
template <class C>
class Series {
public:
    explicit Series(std::size_t order) : c_(order, C(0)) {}

    // injects polynomial coefficients; anything at or beyond `order` is dropped,
    // which is only used for building closed-form numerators and denominators
    Series(std::size_t order, std::vector<C> coeffs) : c_(order, C(0)) {
        for (std::size_t i = 0; i < coeffs.size() && i < order; ++i) c_[i] = std::move(coeffs[i]);
    }

    std::size_t order() const { return c_.size(); }
    const C& operator[](std::size_t n) const { return c_.at(n); }
    C& operator[](std::size_t n) { return c_.at(n); }

    friend bool operator==(const Series& a, const Series& b) { return a.c_ == b.c_; }

private:
    std::vector<C> c_;
};

template <class C>
Series<C> series_add(const Series<C>& a, const Series<C>& b) {
    if (a.order() != b.order()) throw std::invalid_argument("series_add: order mismatch");
    Series<C> r(a.order());
    for (std::size_t n = 0; n < a.order(); ++n) r[n] = a[n] + b[n];
    return r;
}

template <class C>
Series<C> series_sub(const Series<C>& a, const Series<C>& b) {
    if (a.order() != b.order()) throw std::invalid_argument("series_sub: order mismatch");
    Series<C> r(a.order());
    for (std::size_t n = 0; n < a.order(); ++n) r[n] = a[n] - b[n];
    return r;
}

// exact Cauchy product truncated at the common order
template <class C>
Series<C> series_mul(const Series<C>& a, const Series<C>& b) {
    if (a.order() != b.order()) throw std::invalid_argument("series_mul: order mismatch");
    Series<C> r(a.order());
    for (std::size_t i = 0; i < a.order(); ++i) {
        if (a[i] == C(0)) continue;
        for (std::size_t j = 0; i + j < b.order(); ++j) r[i + j] += a[i] * b[j];
    }
    return r;
}

template <class C>
Series<C> series_pow(const Series<C>& a, unsigned long long e) {
    Series<C> r(a.order());
    if (a.order() > 0) r[0] = C(1);
    for (; e; --e) r = series_mul(r, a);
    return r;
}

// b with a*b == 1 (mod x^order); requires the constant term to be a unit
template <class C>
Series<C> series_geometric_inverse(const Series<C>& a) {
    if (a.order() == 0) return Series<C>(0);
    C inv0(0);
    if (!unit_inverse(a[0], inv0))
        throw std::domain_error("series_geometric_inverse: constant term is not a unit");
    Series<C> b(a.order());
    b[0] = inv0;
    for (std::size_t n = 1; n < a.order(); ++n) {
        C acc(0);
        for (std::size_t i = 1; i <= n; ++i) acc += a[i] * b[n - i];
        b[n] = C(0) - inv0 * acc;
    }
    return b;
}

} // namespace qp
