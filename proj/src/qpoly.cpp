#include "qp/qpoly.hpp"

#include <stdexcept>

namespace qp {

QPoly::QPoly(long long constant) {
    if (constant != 0) c_.push_back(ExactInt(constant));
}

QPoly::QPoly(std::vector<ExactInt> coeffs) : c_(std::move(coeffs)) { trim(); }

QPoly QPoly::q_power(std::size_t e) {
    std::vector<ExactInt> c(e + 1, ExactInt(0));
    c[e] = 1;
    return QPoly(std::move(c));
}

QPoly QPoly::bracket(std::size_t n) {
    return QPoly(std::vector<ExactInt>(n, ExactInt(1)));
}

void QPoly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

QPoly& QPoly::operator+=(const QPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), ExactInt(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
}

QPoly& QPoly::operator-=(const QPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), ExactInt(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
}

QPoly operator*(const QPoly& a, const QPoly& b) {
    if (a.is_zero() || b.is_zero()) return QPoly();
    std::vector<ExactInt> out(a.c_.size() + b.c_.size() - 1, ExactInt(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i] == 0) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
    }
    return QPoly(std::move(out));
}

QPoly QPoly::operator-() const {
    QPoly r = *this;
    for (auto& x : r.c_) x = -x;
    return r;
}

QPoly shift_q(const QPoly& p, std::size_t e) {
    if (p.is_zero() || e == 0) return p;
    std::vector<ExactInt> out(e, ExactInt(0));
    out.insert(out.end(), p.coeffs().begin(), p.coeffs().end());
    return QPoly(std::move(out));
}

ExactInt qpoly_eval_at_one(const QPoly& p) {
    ExactInt s = 0;
    for (const auto& x : p.coeffs()) s += x;
    return s;
}

CPoint qpoly_eval(const QPoly& p, CPoint z) {
    CPoint r(0.0, 0.0);
    for (std::size_t i = p.coeffs().size(); i-- > 0;)
        r = r * z + CPoint(static_cast<double>(p.coeffs()[i]), 0.0);
    return r;
}

QPoly qpoly_divide_exact(const QPoly& a, const QPoly& b) {
    if (b.is_zero()) throw std::logic_error("qpoly_divide_exact: division by zero polynomial");
    if (a.is_zero()) return QPoly();
    if (a.degree() < b.degree())
        throw std::logic_error("qpoly_divide_exact: degree of dividend below divisor");
    std::vector<ExactInt> rem = a.coeffs();
    const auto& d = b.coeffs();
    std::vector<ExactInt> quot(rem.size() - d.size() + 1, ExactInt(0));
    for (std::size_t i = quot.size(); i-- > 0;) {
        ExactInt top = rem[i + d.size() - 1];
        if (top == 0) continue;
        if (top % d.back() != 0)
            throw std::logic_error("qpoly_divide_exact: leading coefficient does not divide");
        quot[i] = top / d.back();
        for (std::size_t j = 0; j < d.size(); ++j) rem[i + j] -= quot[i] * d[j];
    }
    for (const auto& x : rem)
        if (x != 0) throw std::logic_error("qpoly_divide_exact: nonzero remainder");
    return QPoly(std::move(quot));
}

std::string qpoly_to_string(const QPoly& p) {
    if (p.is_zero()) return "0";
    std::string out;
    for (std::size_t i = 0; i < p.coeffs().size(); ++i) {
        const ExactInt& c = p.coeffs()[i];
        if (c == 0) continue;
        ExactInt a = c < 0 ? ExactInt(-c) : c;
        if (out.empty()) {
            if (c < 0) out += "-";
        } else {
            out += c < 0 ? "-" : "+";
        }
        if (i == 0) {
            out += a.str();
        } else {
            if (a != 1) out += a.str();
            out += i == 1 ? "q" : "q^" + std::to_string(i);
        }
    }
    return out;
}

} // namespace qp
