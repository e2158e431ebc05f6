#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <complex>
#include <vector>

namespace qp {

using ExactInt = boost::multiprecision::cpp_int;
using ExactRational = boost::multiprecision::cpp_rational;
using CPoint = std::complex<double>;

// n!/(k!(n-k)!) for 0 <= k <= n, 0 otherwise. Any integer inputs accepted.
ExactInt int_binomial(long long n, long long k);

// k!/(k_1!...k_s!) when all parts are nonnegative and sum to k, 0 otherwise.
ExactInt multinomial(long long k, const std::vector<long long>& parts);

// base^exp, exact.
ExactInt int_pow(const ExactInt& base, unsigned long long exp);

} // namespace qp
