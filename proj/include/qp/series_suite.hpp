#pragma once

#include "qp/exact.hpp"
#include "qp/rays.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace qp {

struct GfMismatch {
    std::size_t index;
    ExactInt expected;
    ExactInt got;
};

struct GfCheckReport {
    std::string name;
    std::size_t order = 0;
    std::vector<GfMismatch> mismatches;
    bool pass() const { return mismatches.empty(); }
};

// x^k / (1-x)^{k+1} against int_binomial(n, k); requires order >= k+1
GfCheckReport check_binomial_gf(long long k, std::size_t order);

// (1+x+...+x^{s-1})^k x^k / (1-x)^{k+1} against quasi_by_recurrence(s, n, k);
// requires order >= k+1
GfCheckReport check_quasi_gf(int s, long long k, std::size_t order);

// (1-x)^{alpha-beta-1} (x+...+x^s)^beta / ((1-x)^alpha - x^{r+alpha}(1+...+x^{s-1})^alpha)
// against ray_sum_direct(s, d, n+1), i.e. the series sum_n T_{n+1} x^n.
// The quotient is validated by multiplying back against the denominator.
GfCheckReport check_ray_gf(int s, const Direction& d, std::size_t order);

} // namespace qp
