#include "dfig/mat2.hpp"

#include "dfig/errors.hpp"

#include <cmath>

namespace dfig {

double Mat2::frobenius() const {
    return std::sqrt(std::norm(a11) + std::norm(a12) + std::norm(a21) +
                     std::norm(a22));
}

Mat2 Mat2::operator+(const Mat2& o) const {
    return {a11 + o.a11, a12 + o.a12, a21 + o.a21, a22 + o.a22};
}

Mat2 Mat2::operator-(const Mat2& o) const {
    return {a11 - o.a11, a12 - o.a12, a21 - o.a21, a22 - o.a22};
}

Mat2 Mat2::operator*(const Mat2& o) const {
    return {a11 * o.a11 + a12 * o.a21, a11 * o.a12 + a12 * o.a22,
            a21 * o.a11 + a22 * o.a21, a21 * o.a12 + a22 * o.a22};
}

Mat2 Mat2::operator*(Complex k) const {
    return {a11 * k, a12 * k, a21 * k, a22 * k};
}

std::array<Complex, 2> Mat2::operator*(const std::array<Complex, 2>& v) const {
    return {a11 * v[0] + a12 * v[1], a21 * v[0] + a22 * v[1]};
}

Mat2 outer(const std::array<Complex, 2>& col, const std::array<Complex, 2>& row) {
    return {col[0] * row[0], col[0] * row[1], col[1] * row[0], col[1] * row[1]};
}

Mat2 mat2_inv(const Mat2& a) {
    const Complex d = a.det();
    const double scale = a.frobenius();
    if (std::abs(d) <= 1e-14 * scale * scale)
        throw SingularMatrixError("2x2 matrix numerically singular, |det|=" +
                                  std::to_string(std::abs(d)));
    return {a.a22 / d, -a.a12 / d, -a.a21 / d, a.a11 / d};
}

std::array<Complex, 2> mat2_eig(const Mat2& a) {
    const Complex tr = a.trace();
    const Complex disc = std::sqrt(tr * tr - 4.0 * a.det());
    Complex l1 = 0.5 * (tr + disc);
    Complex l2 = 0.5 * (tr - disc);
    if (std::abs(l2) > std::abs(l1))
        std::swap(l1, l2);
    return {l1, l2};
}

std::array<Complex, 2> mat2_eig(const Mat2& a, const std::array<Complex, 2>& prev) {
    auto ev = mat2_eig(a);
    const double keep = std::abs(ev[0] - prev[0]) + std::abs(ev[1] - prev[1]);
    const double swap = std::abs(ev[0] - prev[1]) + std::abs(ev[1] - prev[0]);
    if (swap < keep)
        std::swap(ev[0], ev[1]);
    return ev;
}

TFMatrix TFMatrix::identity() {
    TFMatrix m;
    m.e11 = RationalTF::constant(1.0);
    m.e22 = RationalTF::constant(1.0);
    return m;
}

Mat2 TFMatrix::eval(double omega) const {
    return {e11.eval(omega), e12.eval(omega), e21.eval(omega), e22.eval(omega)};
}

TFMatrix TFMatrix::operator+(const TFMatrix& o) const {
    return {e11 + o.e11, e12 + o.e12, e21 + o.e21, e22 + o.e22};
}

TFMatrix TFMatrix::operator-(const TFMatrix& o) const {
    return {e11 - o.e11, e12 - o.e12, e21 - o.e21, e22 - o.e22};
}

TFMatrix TFMatrix::operator*(const TFMatrix& o) const {
    return {e11 * o.e11 + e12 * o.e21, e11 * o.e12 + e12 * o.e22,
            e21 * o.e11 + e22 * o.e21, e21 * o.e12 + e22 * o.e22};
}

TFMatrix TFMatrix::inverse() const {
    const RationalTF det = e11 * e22 - e12 * e21;
    if (det.is_zero())
        throw SingularMatrixError("transfer-function matrix with zero determinant");
    const RationalTF inv_det = det.inverse();
    return {e22 * inv_det, -e12 * inv_det, -e21 * inv_det, e11 * inv_det};
}

FreqResponse::FreqResponse(std::vector<double> f, std::vector<Mat2> v)
    : freqs_hz(std::move(f)), values(std::move(v)) {
    if (freqs_hz.size() != values.size())
        throw InvalidParameterError("frequency grid and value count differ");
    for (std::size_t i = 1; i < freqs_hz.size(); ++i)
        if (!(freqs_hz[i] > freqs_hz[i - 1]))
            throw InvalidParameterError("frequency grid must be strictly increasing");
}

std::vector<double> log_grid(double f_lo, double f_hi, int n) {
    if (!(f_lo > 0.0) || !(f_hi > f_lo) || n < 2)
        throw InvalidParameterError("invalid log grid specification");
    std::vector<double> f(n);
    const double a = std::log(f_lo);
    const double b = std::log(f_hi);
    for (int i = 0; i < n; ++i)
        f[i] = std::exp(a + (b - a) * i / (n - 1));
    return f;
}

} // namespace dfig
