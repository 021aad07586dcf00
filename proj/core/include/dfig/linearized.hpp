#pragma once

#include "dfig/mat2.hpp"
#include "dfig/params.hpp"
#include "dfig/reshape.hpp"

#include <vector>

namespace dfig {

/// Linearized state-space model of the DFIG + RSC control + PLL +
/// compensator with the PCC voltage as input and the stator current as
/// output (no grid). Provides the admittance by frequency-domain solve and
/// the open-loop poles used by the Nyquist-criterion precondition.
class LinearizedDfig {
public:
    LinearizedDfig(const MachineParams& m, const ControlParams& c,
                   const OperatingPoint& op, const ReshapeConfig& reshape);

    int num_states() const { return n_; }

    /// Admittance C (jwI - A)^{-1} B at dq frequency omega (rad/s).
    Mat2 eval(double omega_dq) const;

    /// Eigenvalues of the state matrix.
    std::vector<Complex> poles() const;

    /// True when all poles lie strictly in the left half plane (a pole
    /// pair from the PLL integrator sits at the origin only for zero
    /// gains, which is rejected by validation upstream).
    bool is_stable(double margin = 1e-9) const;

private:
    int n_ = 0;
    std::vector<double> a_;  // n x n, row-major
    std::vector<double> b_;  // n x 2
    std::vector<double> c_;  // 2 x n
};

} // namespace dfig
