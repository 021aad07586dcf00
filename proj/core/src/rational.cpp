#include "dfig/rational.hpp"

#include "dfig/errors.hpp"

#include <cmath>
#include <cstddef>
#include <string>

namespace dfig {

namespace poly {

std::vector<double> trim(std::vector<double> c) {
    while (c.size() > 1 && c.back() == 0.0)
        c.pop_back();
    if (c.empty())
        c.push_back(0.0);
    return c;
}

std::vector<double> add(const std::vector<double>& a, const std::vector<double>& b) {
    std::vector<double> r(std::max(a.size(), b.size()), 0.0);
    for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
    return trim(std::move(r));
}

std::vector<double> sub(const std::vector<double>& a, const std::vector<double>& b) {
    std::vector<double> r(std::max(a.size(), b.size()), 0.0);
    for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
    return trim(std::move(r));
}

std::vector<double> mul(const std::vector<double>& a, const std::vector<double>& b) {
    if (is_zero(a) || is_zero(b))
        return {0.0};
    std::vector<double> r(a.size() + b.size() - 1, 0.0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            r[i + j] += a[i] * b[j];
    return trim(std::move(r));
}

std::vector<double> scale(std::vector<double> a, double k) {
    for (double& c : a) c *= k;
    return trim(std::move(a));
}

Complex eval(const std::vector<double>& c, Complex s) {
    Complex r = 0.0;
    for (std::size_t i = c.size(); i-- > 0;)
        r = r * s + c[i];
    return r;
}

bool is_zero(const std::vector<double>& c) {
    for (double v : c)
        if (v != 0.0) return false;
    return true;
}

} // namespace poly

RationalTF::RationalTF() : num_{0.0}, den_{1.0} {}

RationalTF::RationalTF(std::vector<double> num, std::vector<double> den)
    : num_(poly::trim(std::move(num))), den_(poly::trim(std::move(den))) {
    if (poly::is_zero(den_))
        throw InvalidParameterError("rational function with zero denominator");
    normalize();
}

void RationalTF::normalize() {
    const double lead = den_.back();
    if (lead != 1.0) {
        for (double& c : den_) c /= lead;
        for (double& c : num_) c /= lead;
    }
    if (poly::is_zero(num_))
        num_ = {0.0};
}

RationalTF RationalTF::constant(double value) { return RationalTF({value}, {1.0}); }

RationalTF RationalTF::s() { return RationalTF({0.0, 1.0}, {1.0}); }

RationalTF RationalTF::first_order(double k, double p) {
    return RationalTF({k}, {p, 1.0});
}

bool RationalTF::is_zero() const { return poly::is_zero(num_); }

Complex RationalTF::eval(double omega) const { return eval_s(Complex(0.0, omega)); }

Complex RationalTF::eval_s(Complex s) const {
    const Complex d = poly::eval(den_, s);
    if (std::abs(d) < 1e-300)
        throw PoleError("transfer function evaluated at a pole, omega=" +
                            std::to_string(s.imag()),
                        s.imag());
    return poly::eval(num_, s) / d;
}

RationalTF RationalTF::inverse() const {
    if (is_zero())
        throw DivisionByZeroError("inverse of the zero transfer function");
    return RationalTF(den_, num_);
}

RationalTF operator+(const RationalTF& a, const RationalTF& b) {
    return RationalTF(
        poly::add(poly::mul(a.num_, b.den_), poly::mul(b.num_, a.den_)),
        poly::mul(a.den_, b.den_));
}

RationalTF operator-(const RationalTF& a, const RationalTF& b) {
    return RationalTF(
        poly::sub(poly::mul(a.num_, b.den_), poly::mul(b.num_, a.den_)),
        poly::mul(a.den_, b.den_));
}

RationalTF operator*(const RationalTF& a, const RationalTF& b) {
    return RationalTF(poly::mul(a.num_, b.num_), poly::mul(a.den_, b.den_));
}

RationalTF operator*(double k, const RationalTF& a) {
    return RationalTF(poly::scale(a.num_, k), a.den_);
}

RationalTF RationalTF::operator-() const { return -1.0 * (*this); }

} // namespace dfig
