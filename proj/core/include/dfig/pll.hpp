#pragma once

#include "dfig/mat2.hpp"
#include "dfig/params.hpp"
#include "dfig/rational.hpp"

namespace dfig {

/// Small-signal model of the synchronous-reference-frame PLL around a
/// locked operating point. Perturbations enter exclusively through the
/// q-component of the PCC voltage, so only second-column entries of the
/// perturbation matrices are nonzero.
struct PLLModel {
    /// Closed-loop phase transfer dtheta/dv_sq:
    /// (Kp s + Ki) / (s^2 + V_sd0 (Kp s + Ki)), gains in SI scaling.
    RationalTF h_closed;
    /// Voltage perturbation matrix: maps dv_s to the part of dv_s^ctrl
    /// removed by the frame rotation, dv^ctrl = (I - g_pll_v) dv.
    TFMatrix g_pll_v;
    /// Rotor-current perturbation matrix: the apparent current seen in the
    /// control frame is di^ctrl = di + g_pll_i_col2 * dv_sq ... with
    /// column 2 equal to [-I_rq0 h; I_rd0 h] in the error-path sign.
    TFMatrix g_pll_i;
};

/// Build the PLL linearization. Requires V_sd0 > 0 (locked d-axis).
PLLModel build_pll_model(const OperatingPoint& op, const ControlParams& c);

} // namespace dfig
