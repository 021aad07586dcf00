#pragma once

#include "dfig/mat2.hpp"
#include "dfig/params.hpp"
#include "dfig/pll.hpp"
#include "dfig/reshape.hpp"

#include <memory>

namespace dfig {

enum class Frame { DQ, ModifiedSequence };

/// Three-part decomposition of the machine-plus-converter admittance:
/// the PLL-free part, the rotor-current PLL path (including the reshaping
/// compensator when active), and the modulation-voltage PLL path.
struct AdmittanceParts {
    Mat2 siso, i, m;
    Mat2 total() const { return siso + i + m; }
};

/// Complex-vector change of basis from d-q to the modified sequence
/// domain and back (entrywise, no frequency shift).
Mat2 seq_transform(const Mat2& dq);
Mat2 seq_transform_inverse(const Mat2& seq);

/// Exact per-frequency evaluator of the small-signal MIMO admittance of
/// the DFIG + rotor-side converter (grid-independent, motor convention:
/// positive current flows from the PCC into the machine).
class DfigAdmittance {
public:
    DfigAdmittance(const MachineParams& m, const ControlParams& c,
                   const OperatingPoint& op, const ReshapeConfig& reshape);

    /// Parts at dq-frame frequency omega (rad/s, nonzero).
    AdmittanceParts eval_dq(double omega_dq) const;

    /// Parts at stationary-frame frequency f (Hz); entry (1,1) maps a
    /// positive-sequence voltage at f to current at f, off-diagonals
    /// couple to the mirror frequency f - 2*f1.
    AdmittanceParts eval_seq(double f_hz) const;

    /// Total admittance in the modified sequence domain.
    Mat2 total_seq(double f_hz) const;

    double omega1() const { return machine_.omega1; }
    const OperatingPoint& op() const { return op_; }
    const MachineParams& machine() const { return machine_; }
    const ControlParams& control() const { return control_; }
    const ReshapeConfig& reshape() const { return reshape_; }
    const PLLModel& pll() const { return pll_; }

private:
    MachineParams machine_;
    ControlParams control_;
    OperatingPoint op_;
    ReshapeConfig reshape_;
    PLLModel pll_;
    TFMatrix gz_;
};

/// MIMO admittance with its decomposition sampled on a frequency grid.
/// The evaluator allows exact re-evaluation at arbitrary frequencies.
struct AdmittanceModel {
    Frame frame = Frame::DQ;
    FreqResponse y_siso, y_i, y_m, y_total;
    std::shared_ptr<const DfigAdmittance> evaluator;
};

/// Default sampling grid: 400 log-spaced points per sign over 1..2000 Hz.
std::vector<double> default_dq_grid();

/// Build the d-q frame admittance model. Frequencies of the sampled
/// responses are dq-frame Hz.
AdmittanceModel build_admittance_dq(const MachineParams& m,
                                    const ControlParams& c,
                                    const OperatingPoint& op,
                                    const ReshapeConfig& reshape,
                                    const std::vector<double>& freqs_dq_hz =
                                        default_dq_grid());

/// Change of frame to the modified sequence domain; sampled frequencies
/// shift from dq Hz to stationary Hz (f = f_dq + f1).
AdmittanceModel dq_to_modified_sequence(const AdmittanceModel& y_dq,
                                        double omega1);

/// Inverse frame change (diagnostic / round-trip checking).
AdmittanceModel modified_sequence_to_dq(const AdmittanceModel& y_seq,
                                        double omega1);

/// Copy a reshape config with the compensator references taken from the
/// solved operating-point rotor currents (diagnostic mode).
ReshapeConfig reshape_with_op_refs(ReshapeConfig cfg, const OperatingPoint& op);

} // namespace dfig
