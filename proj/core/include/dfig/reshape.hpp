#pragma once

#include "dfig/mat2.hpp"
#include "dfig/params.hpp"
#include "dfig/rational.hpp"

#include <vector>

namespace dfig {

enum class ReshapeMode { Off, Gz1, Gz2 };

/// Configuration of the rotor-current-dynamic compensation branch.
/// The rotor current references double as the compensator gains.
struct ReshapeConfig {
    ReshapeMode mode = ReshapeMode::Off;
    double I_rdref = 0.0;   // d-axis rotor current reference (p.u.)
    double I_rqref = 0.0;   // q-axis rotor current reference (p.u.)
    double A_inf = 1.0;     // HPF high-frequency gain
    double Q = 1.0;         // HPF quality factor
    double omega_hpf = 2.0 * 3.14159265358979323846;  // HPF corner (rad/s)

    void validate() const;
};

/// Second-order high-pass filter A_inf s^2 / (s^2 + (w/Q) s + w^2).
RationalTF hpf2(const ReshapeConfig& cfg);

/// Second-order compensator: HPF times the ideal rotor-current coupling
/// matrix, with steady-state currents replaced by references. Entries are
/// stored with the s^2 factors cancelled, so each nonzero entry is the
/// proper function A_inf*gain*(Kp s + Ki)/(s^2 + (w/Q) s + w^2).
TFMatrix build_gz1(const ReshapeConfig& cfg, const ControlParams& c);

/// First-order simplification: a pair of asymmetric low-pass filters
/// gain*Kp/(s + w), valid when Kp_pll dominates Ki_pll above ~50 Hz.
TFMatrix build_gz2(const ReshapeConfig& cfg, const ControlParams& c);

/// Active compensator matrix for the configured mode (zero when Off).
TFMatrix compensator_matrix(const ReshapeConfig& cfg, const ControlParams& c);

/// State-space realization of the active column-2 entries, driven by the
/// control-frame stator voltage q-component. Controllable canonical form
/// per entry; the output is added to the measured control-frame rotor
/// current so that the PLL-induced apparent current term cancels in the
/// linearized loop.
class CompensatorRealization {
public:
    static CompensatorRealization make(const ReshapeConfig& cfg,
                                       const ControlParams& c);

    int num_states() const { return static_cast<int>(blocks_.size()) * order_; }

    /// dx/dt for all blocks given the shared input u = v_sq^ctrl.
    void derivatives(const double* x, double u, double* dxdt) const;

    /// Compensator output (d, q) current corrections.
    void output(const double* x, double& y_d, double& y_q) const;

private:
    struct Block {
        double a0 = 0.0, a1 = 0.0;   // denominator coefficients
        double b0 = 0.0, b1 = 0.0;   // numerator coefficients
        bool to_q = false;           // output channel
    };
    std::vector<Block> blocks_;
    int order_ = 0;  // states per block (2 for Gz1, 1 for Gz2, 0 for Off)
};

} // namespace dfig
