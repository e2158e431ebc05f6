#pragma once

#include "qp/exact.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace qp {

// Dense polynomial in q with ExactInt coefficients.
// Canonical form: no trailing zeros; the zero polynomial has an empty
// coefficient vector. Index i holds the coefficient of q^i.
class QPoly {
public:
    QPoly() = default;
    explicit QPoly(long long constant);
    explicit QPoly(std::vector<ExactInt> coeffs); // trims trailing zeros

    static QPoly q_power(std::size_t e);  // q^e
    static QPoly bracket(std::size_t n);  // [n]_q = 1 + q + ... + q^{n-1}

    bool is_zero() const { return c_.empty(); }
    // degree of the zero polynomial is reported as 0
    std::size_t degree() const { return c_.empty() ? 0 : c_.size() - 1; }
    const std::vector<ExactInt>& coeffs() const { return c_; }
    ExactInt coeff(std::size_t i) const { return i < c_.size() ? c_[i] : ExactInt(0); }

    QPoly& operator+=(const QPoly& o);
    QPoly& operator-=(const QPoly& o);
    friend QPoly operator+(QPoly a, const QPoly& b) { return a += b; }
    friend QPoly operator-(QPoly a, const QPoly& b) { return a -= b; }
    friend QPoly operator*(const QPoly& a, const QPoly& b);
    QPoly operator-() const;
    friend bool operator==(const QPoly& a, const QPoly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const QPoly& a, const QPoly& b) { return !(a == b); }

private:
    void trim();
    std::vector<ExactInt> c_;
};

// p * q^e
QPoly shift_q(const QPoly& p, std::size_t e);

// sum of coefficients
ExactInt qpoly_eval_at_one(const QPoly& p);

// complex evaluation at a point (used only by numeric verifiers)
CPoint qpoly_eval(const QPoly& p, CPoint z);

// exact long division; throws std::logic_error on a nonzero remainder,
// which would indicate an implementation bug, not a user error
QPoly qpoly_divide_exact(const QPoly& a, const QPoly& b);

// ascending powers, zero terms omitted, unit coefficients elided except
// for the constant term: "2+q", "q+q^2+q^3", "0"
std::string qpoly_to_string(const QPoly& p);

} // namespace qp
