#include "eig_internal.hpp"

#include "dfig/errors.hpp"
#include "dfig/rational.hpp"

#include <lapacke.h>

namespace dfig {

namespace detail {

std::vector<Complex> real_matrix_eigenvalues(const std::vector<double>& a, int n) {
    std::vector<double> work(a);
    std::vector<double> wr(n), wi(n);
    const lapack_int info = LAPACKE_dgeev(
        LAPACK_ROW_MAJOR, 'N', 'N', n, work.data(), n, wr.data(), wi.data(),
        nullptr, 1, nullptr, 1);
    if (info != 0)
        throw NumericalError("eigenvalue computation failed (dgeev info=" +
                             std::to_string(info) + ")");
    std::vector<Complex> ev(n);
    for (int i = 0; i < n; ++i)
        ev[i] = Complex(wr[i], wi[i]);
    return ev;
}

} // namespace detail

namespace poly {

std::vector<Complex> roots(const std::vector<double>& c_in) {
    const std::vector<double> c = trim(c_in);
    if (is_zero(c))
        throw InvalidParameterError("roots of the zero polynomial");
    const int n = static_cast<int>(c.size()) - 1;
    if (n == 0)
        return {};
    // Companion matrix of the monic polynomial.
    std::vector<double> comp(static_cast<std::size_t>(n) * n, 0.0);
    const double lead = c[n];
    for (int i = 0; i < n; ++i)
        comp[static_cast<std::size_t>(i) * n + (n - 1)] = -c[i] / lead;
    for (int i = 1; i < n; ++i)
        comp[static_cast<std::size_t>(i) * n + (i - 1)] = 1.0;
    return detail::real_matrix_eigenvalues(comp, n);
}

} // namespace poly

} // namespace dfig
