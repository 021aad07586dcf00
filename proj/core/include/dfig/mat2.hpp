#pragma once

#include "dfig/rational.hpp"

#include <array>
#include <vector>

namespace dfig {

/// 2x2 complex matrix, the workhorse of all frequency-domain algebra.
struct Mat2 {
    Complex a11{0.0}, a12{0.0}, a21{0.0}, a22{0.0};

    static Mat2 identity() { return {1.0, 0.0, 0.0, 1.0}; }
    static Mat2 diag(Complex d1, Complex d2) { return {d1, 0.0, 0.0, d2}; }

    Complex det() const { return a11 * a22 - a12 * a21; }
    Complex trace() const { return a11 + a22; }
    double frobenius() const;

    Mat2 operator+(const Mat2& o) const;
    Mat2 operator-(const Mat2& o) const;
    Mat2 operator*(const Mat2& o) const;
    Mat2 operator*(Complex k) const;

    /// Matrix-vector product with a 2-vector.
    std::array<Complex, 2> operator*(const std::array<Complex, 2>& v) const;
};

/// Outer product col * row of two 2-vectors.
Mat2 outer(const std::array<Complex, 2>& col, const std::array<Complex, 2>& row);

/// Closed-form adjugate inverse. Throws SingularMatrixError when
/// |det| <= 1e-14 * ||A||_F^2.
Mat2 mat2_inv(const Mat2& a);

/// Eigenvalues as the two roots of lambda^2 - tr*lambda + det,
/// ordered by descending magnitude.
std::array<Complex, 2> mat2_eig(const Mat2& a);

/// Eigenvalues ordered by nearest-distance pairing against the previous
/// point of a frequency sweep (keeps loci branches consistent).
std::array<Complex, 2> mat2_eig(const Mat2& a, const std::array<Complex, 2>& prev);

/// 2x2 matrix of rational transfer functions.
struct TFMatrix {
    RationalTF e11, e12, e21, e22;

    static TFMatrix identity();
    static TFMatrix zero() { return {}; }

    /// Entrywise evaluation at s = j*omega.
    Mat2 eval(double omega) const;

    TFMatrix operator+(const TFMatrix& o) const;
    TFMatrix operator-(const TFMatrix& o) const;
    TFMatrix operator*(const TFMatrix& o) const;

    /// Adjugate / determinant symbolic inverse.
    TFMatrix inverse() const;
};

/// Sampled 2x2 frequency response on a strictly increasing frequency grid.
/// Frequencies are in Hz and may be negative (sequence-domain work).
struct FreqResponse {
    std::vector<double> freqs_hz;
    std::vector<Mat2> values;

    FreqResponse() = default;
    FreqResponse(std::vector<double> f, std::vector<Mat2> v);

    std::size_t size() const { return freqs_hz.size(); }
};

/// Log-spaced grid between f_lo and f_hi (both > 0).
std::vector<double> log_grid(double f_lo, double f_hi, int n);

} // namespace dfig
