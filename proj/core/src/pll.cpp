#include "dfig/pll.hpp"

#include "dfig/errors.hpp"

namespace dfig {

PLLModel build_pll_model(const OperatingPoint& op, const ControlParams& c) {
    c.validate();
    if (!(op.V_sd0 > 0.0))
        throw InvalidOperatingPointError(
            "PLL linearization requires V_sd0 > 0");
    const double kp = c.kp_pll_si();
    const double ki = c.ki_pll_si();

    PLLModel pll;
    pll.h_closed = RationalTF({ki, kp}, {op.V_sd0 * ki, op.V_sd0 * kp, 1.0});

    pll.g_pll_v = TFMatrix::zero();
    pll.g_pll_v.e22 = op.V_sd0 * pll.h_closed;

    pll.g_pll_i = TFMatrix::zero();
    pll.g_pll_i.e12 = -op.I_rq0 * pll.h_closed;
    pll.g_pll_i.e22 = op.I_rd0 * pll.h_closed;
    return pll;
}

} // namespace dfig
