#pragma once

#include <complex>
#include <vector>

namespace dfig {

using Complex = std::complex<double>;

/// Dense real polynomial helpers, coefficients in ascending powers of s.
namespace poly {

std::vector<double> trim(std::vector<double> c);
std::vector<double> add(const std::vector<double>& a, const std::vector<double>& b);
std::vector<double> sub(const std::vector<double>& a, const std::vector<double>& b);
std::vector<double> mul(const std::vector<double>& a, const std::vector<double>& b);
std::vector<double> scale(std::vector<double> a, double k);
Complex eval(const std::vector<double>& c, Complex s);
bool is_zero(const std::vector<double>& c);

/// Roots via companion matrix (leading coefficient must be nonzero).
std::vector<Complex> roots(const std::vector<double>& c);

} // namespace poly

/// Real-coefficient rational function of the Laplace variable s.
///
/// Invariants: the denominator is never the zero polynomial, its leading
/// coefficient is normalized to 1, and neither coefficient sequence stores
/// trailing zeros. No symbolic pole/zero cancellation is attempted;
/// common factors are harmless for evaluation-based use.
class RationalTF {
public:
    /// The zero transfer function 0/1.
    RationalTF();
    RationalTF(std::vector<double> num, std::vector<double> den);

    static RationalTF constant(double value);
    /// The monomial s.
    static RationalTF s();
    /// k / (s + p)
    static RationalTF first_order(double k, double p);

    const std::vector<double>& num() const { return num_; }
    const std::vector<double>& den() const { return den_; }

    bool is_zero() const;
    int num_degree() const { return static_cast<int>(num_.size()) - 1; }
    int den_degree() const { return static_cast<int>(den_.size()) - 1; }

    /// Value at s = j*omega. Throws PoleError when the denominator
    /// magnitude underflows at that frequency.
    Complex eval(double omega) const;
    /// Value at an arbitrary complex s.
    Complex eval_s(Complex s) const;

    /// 1/this. Throws DivisionByZeroError on the zero function.
    RationalTF inverse() const;

    friend RationalTF operator+(const RationalTF& a, const RationalTF& b);
    friend RationalTF operator-(const RationalTF& a, const RationalTF& b);
    friend RationalTF operator*(const RationalTF& a, const RationalTF& b);
    friend RationalTF operator*(double k, const RationalTF& a);
    RationalTF operator-() const;

private:
    std::vector<double> num_;
    std::vector<double> den_;
    void normalize();
};

} // namespace dfig
