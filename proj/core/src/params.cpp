#include "dfig/params.hpp"

#include "dfig/errors.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <string>

namespace dfig {

namespace {

constexpr int kUnknowns = 8;
using Vec8 = std::array<double, kUnknowns>;
using Mat8 = std::array<std::array<double, kUnknowns>, kUnknowns>;

double norm(const Vec8& v) {
    double s = 0.0;
    for (double x : v) s += x * x;
    return std::sqrt(s);
}

/// Gaussian elimination with partial pivoting; solves A x = b in place.
Vec8 solve_dense(Mat8 a, Vec8 b) {
    for (int k = 0; k < kUnknowns; ++k) {
        int piv = k;
        for (int i = k + 1; i < kUnknowns; ++i)
            if (std::abs(a[i][k]) > std::abs(a[piv][k])) piv = i;
        if (std::abs(a[piv][k]) < 1e-14)
            throw NumericalError("singular Jacobian in steady-state solve");
        std::swap(a[k], a[piv]);
        std::swap(b[k], b[piv]);
        for (int i = k + 1; i < kUnknowns; ++i) {
            const double f = a[i][k] / a[k][k];
            for (int j = k; j < kUnknowns; ++j) a[i][j] -= f * a[k][j];
            b[i] -= f * b[k];
        }
    }
    Vec8 x{};
    for (int i = kUnknowns - 1; i >= 0; --i) {
        double s = b[i];
        for (int j = i + 1; j < kUnknowns; ++j) s -= a[i][j] * x[j];
        x[i] = s / a[i][i];
    }
    return x;
}

struct SteadyProblem {
    const MachineParams& m;
    const GridParams& g;
    double P_ref, Q_ref;
    double s_sl;   // slip, per unit
    double X_g;    // grid reactance, p.u.

    // Unknowns: x = [V_sd0, delta, I_sd, I_sq, I_rd, I_rq, V_rd, V_rq]
    Vec8 residual(const Vec8& x) const {
        const double V_sd = x[0], delta = x[1];
        const double I_sd = x[2], I_sq = x[3], I_rd = x[4], I_rq = x[5];
        const double V_rd = x[6], V_rq = x[7];
        const double psi_sd = m.L_s * I_sd + m.L_m * I_rd;
        const double psi_sq = m.L_s * I_sq + m.L_m * I_rq;
        const double psi_rd = m.L_m * I_sd + m.L_r * I_rd;
        const double psi_rq = m.L_m * I_sq + m.L_r * I_rq;
        Vec8 r;
        r[0] = m.R_s * I_sd - psi_sq - V_sd;
        r[1] = m.R_s * I_sq + psi_sd;
        r[2] = g.V_g * std::cos(delta) - g.R_g * I_sd + X_g * I_sq - V_sd;
        r[3] = -g.V_g * std::sin(delta) - g.R_g * I_sq - X_g * I_sd;
        r[4] = m.R_r * I_rd - s_sl * psi_rq - V_rd;
        r[5] = m.R_r * I_rq + s_sl * psi_rd - V_rq;
        r[6] = V_sd * I_sd - P_ref;
        r[7] = -V_sd * I_sq - Q_ref;
        return r;
    }

    Mat8 jacobian(const Vec8& x) const {
        const double V_sd = x[0], delta = x[1];
        const double I_sd = x[2], I_sq = x[3];
        Mat8 j{};
        // r0 = R_s I_sd - (L_s I_sq + L_m I_rq) - V_sd
        j[0][0] = -1.0; j[0][2] = m.R_s; j[0][3] = -m.L_s; j[0][5] = -m.L_m;
        // r1 = R_s I_sq + (L_s I_sd + L_m I_rd)
        j[1][2] = m.L_s; j[1][3] = m.R_s; j[1][4] = m.L_m;
        // r2 = V_g cos(delta) - R_g I_sd + X_g I_sq - V_sd
        j[2][0] = -1.0; j[2][1] = -g.V_g * std::sin(delta);
        j[2][2] = -g.R_g; j[2][3] = X_g;
        // r3 = -V_g sin(delta) - R_g I_sq - X_g I_sd
        j[3][1] = -g.V_g * std::cos(delta); j[3][2] = -X_g; j[3][3] = -g.R_g;
        // r4 = R_r I_rd - s_sl (L_m I_sq + L_r I_rq) - V_rd
        j[4][3] = -s_sl * m.L_m; j[4][4] = m.R_r; j[4][5] = -s_sl * m.L_r;
        j[4][6] = -1.0;
        // r5 = R_r I_rq + s_sl (L_m I_sd + L_r I_rd) - V_rq
        j[5][2] = s_sl * m.L_m; j[5][4] = s_sl * m.L_r; j[5][5] = m.R_r;
        j[5][7] = -1.0;
        // r6 = V_sd I_sd - P_ref
        j[6][0] = I_sd; j[6][2] = V_sd;
        // r7 = -V_sd I_sq - Q_ref
        j[7][0] = -I_sq; j[7][3] = -V_sd;
        return j;
    }
};

} // namespace

void MachineParams::validate() const {
    if (!(L_m > 0.0))
        throw InvalidParameterError("machine: L_m must be positive");
    if (L_s < L_m || L_r < L_m)
        throw InvalidParameterError("machine: self-inductances must not be below L_m");
    const double s = sigma();
    if (!(s > 0.0) || !(s < 1.0))
        throw InvalidParameterError("machine: leakage coefficient outside (0,1)");
    if (R_s < 0.0 || R_r < 0.0)
        throw InvalidParameterError("machine: negative resistance");
    if (!(omega1 > 0.0))
        throw InvalidParameterError("machine: omega1 must be positive");
    if (!(S_base > 0.0) || !(V_base > 0.0))
        throw InvalidParameterError("machine: base quantities must be positive");
}

void GridParams::validate(double omega1) const {
    if (!(L_g > 0.0))
        throw InvalidParameterError("grid: L_g must be positive");
    if (R_g < 0.0)
        throw InvalidParameterError("grid: negative R_g");
    if (!(V_g > 0.0))
        throw InvalidParameterError("grid: V_g must be positive");
    const double scr_check = recompute_scr(*this, omega1);
    if (std::abs(scr_check - scr) > 1e-6 * scr)
        throw InvalidParameterError(
            "grid: scr field inconsistent with R_g/L_g (expected " +
            std::to_string(scr_check) + ")");
}

GridParams grid_from_scr(double scr, double x_over_r, double V_g, double omega1) {
    if (!(scr > 0.0))
        throw InvalidParameterError("grid_from_scr: scr must be positive");
    if (!(x_over_r > 0.0))
        throw InvalidParameterError("grid_from_scr: x_over_r must be positive");
    if (!(V_g > 0.0))
        throw InvalidParameterError("grid_from_scr: V_g must be positive");
    const double z_mag = V_g * V_g / scr;
    const double theta = std::atan(x_over_r);  // pi/2 for infinite x_over_r
    GridParams g;
    g.R_g = std::isinf(x_over_r) ? 0.0 : z_mag * std::cos(theta);
    g.L_g = z_mag * std::sin(theta) / omega1;
    g.V_g = V_g;
    g.scr = scr;
    return g;
}

double recompute_scr(const GridParams& g, double omega1) {
    return g.V_g * g.V_g / std::hypot(g.R_g, omega1 * g.L_g);
}

void ControlParams::validate() const {
    if (Kp_pll < 0.0 || Ki_pll < 0.0 || Ki_i < 0.0)
        throw InvalidParameterError("control: negative gain");
    if (!(Kp_i > 0.0))
        throw InvalidParameterError("control: current loop requires Kp_i > 0");
    if (!(pll_base_p > 0.0) || !(pll_base_i > 0.0))
        throw InvalidParameterError("control: PLL base gains must be positive");
}

OperatingPoint solve_operating_point(const MachineParams& m, const GridParams& g,
                                     double P_ref, double Q_ref, double omega_r) {
    m.validate();
    g.validate(m.omega1);
    if (std::abs(P_ref) > 1.2 || std::abs(Q_ref) > 1.2)
        throw InvalidParameterError("power reference outside sanity bound 1.2 p.u.");

    const double omega_sl = m.omega1 - omega_r;
    SteadyProblem prob{m, g, P_ref, Q_ref, omega_sl / m.omega1,
                       m.omega1 * g.L_g};

    // Initial guess: stiff-grid closed form.
    Vec8 x{};
    x[0] = g.V_g;                         // V_sd0
    x[2] = P_ref / g.V_g;                 // I_sd
    x[3] = -Q_ref / g.V_g;                // I_sq
    const double psi_sd0 = -m.R_s * x[3];
    const double psi_sq0 = m.R_s * x[2] - x[0];
    x[4] = (psi_sd0 - m.L_s * x[2]) / m.L_m;  // I_rd
    x[5] = (psi_sq0 - m.L_s * x[3]) / m.L_m;  // I_rq
    x[1] = std::asin(std::clamp(
        -(g.R_g * x[3] + prob.X_g * x[2]) / g.V_g, -1.0, 1.0));
    {
        const double psi_rd = m.L_m * x[2] + m.L_r * x[4];
        const double psi_rq = m.L_m * x[3] + m.L_r * x[5];
        x[6] = m.R_r * x[4] - prob.s_sl * psi_rq;
        x[7] = m.R_r * x[5] + prob.s_sl * psi_rd;
    }

    constexpr int kMaxIter = 50;
    constexpr double kTol = 1e-10;
    Vec8 r = prob.residual(x);
    double rn = norm(r);
    for (int it = 0; it < kMaxIter && rn > kTol; ++it) {
        Vec8 rhs = r;
        for (double& v : rhs) v = -v;
        const Vec8 dx = solve_dense(prob.jacobian(x), rhs);
        double lambda = 1.0;
        bool improved = false;
        for (int half = 0; half < 12; ++half, lambda *= 0.5) {
            Vec8 xt = x;
            for (int i = 0; i < kUnknowns; ++i) xt[i] += lambda * dx[i];
            const Vec8 rt = prob.residual(xt);
            const double rtn = norm(rt);
            if (rtn < rn) {
                x = xt;
                r = rt;
                rn = rtn;
                improved = true;
                break;
            }
        }
        if (!improved)
            break;
    }
    if (!(rn <= kTol))
        throw NoEquilibriumError(
            "no steady-state equilibrium (residual " + std::to_string(rn) +
                "); grid too weak for the demanded power",
            rn);

    OperatingPoint op{};
    op.V_sd0 = x[0];
    op.V_sq0 = 0.0;
    op.I_sd0 = x[2];
    op.I_sq0 = x[3];
    op.I_rd0 = x[4];
    op.I_rq0 = x[5];
    op.V_rd0 = x[6];
    op.V_rq0 = x[7];
    op.psi_sd0 = m.L_s * op.I_sd0 + m.L_m * op.I_rd0;
    op.psi_sq0 = m.L_s * op.I_sq0 + m.L_m * op.I_rq0;
    op.psi_rd0 = m.L_m * op.I_sd0 + m.L_r * op.I_rd0;
    op.psi_rq0 = m.L_m * op.I_sq0 + m.L_r * op.I_rq0;
    op.omega_r = omega_r;
    op.omega_sl = omega_sl;
    op.P0 = op.V_sd0 * op.I_sd0;
    op.Q0 = -op.V_sd0 * op.I_sq0;
    return op;
}

double operating_point_residual(const MachineParams& m, const GridParams& g,
                                const OperatingPoint& op, double P_ref,
                                double Q_ref) {
    SteadyProblem prob{m, g, P_ref, Q_ref, op.omega_sl / m.omega1,
                       m.omega1 * g.L_g};
    // Recover the source angle implied by the Thevenin relation.
    const double v_gd = op.V_sd0 + g.R_g * op.I_sd0 - prob.X_g * op.I_sq0;
    const double v_gq = g.R_g * op.I_sq0 + prob.X_g * op.I_sd0;
    const double delta = std::atan2(-v_gq, v_gd);
    Vec8 x{op.V_sd0, delta, op.I_sd0, op.I_sq0,
           op.I_rd0, op.I_rq0, op.V_rd0, op.V_rq0};
    return norm(prob.residual(x));
}

} // namespace dfig
