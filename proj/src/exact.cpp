#include "qp/exact.hpp"

namespace qp {

ExactInt int_binomial(long long n, long long k) {
    if (k < 0 || n < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    ExactInt r = 1;
    for (long long i = 1; i <= k; ++i) {
        r *= n - k + i;
        r /= i; // exact: r holds C(n-k+i, i) after each step
    }
    return r;
}

ExactInt multinomial(long long k, const std::vector<long long>& parts) {
    long long sum = 0;
    for (long long p : parts) {
        if (p < 0) return 0;
        sum += p;
    }
    if (sum != k) return 0;
    ExactInt r = 1;
    long long rem = k;
    for (long long p : parts) {
        r *= int_binomial(rem, p);
        rem -= p;
    }
    return r;
}

ExactInt int_pow(const ExactInt& base, unsigned long long exp) {
    ExactInt r = 1, b = base;
    while (exp) {
        if (exp & 1) r *= b;
        b *= b;
        exp >>= 1;
    }
    return r;
}

} // namespace qp
