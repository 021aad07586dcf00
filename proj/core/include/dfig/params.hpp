#pragma once

namespace dfig {

/// Per-unit electrical constants of the machine. Inductances are per-unit
/// reactances at the fundamental frequency (the usual nameplate form).
struct MachineParams {
    double R_s;       // stator resistance (p.u.)
    double R_r;       // rotor resistance (p.u.)
    double L_s;       // stator self-inductance (p.u.)
    double L_r;       // rotor self-inductance (p.u.)
    double L_m;       // mutual inductance (p.u.)
    double omega1;    // fundamental angular frequency (rad/s)
    double S_base;    // power base (VA)
    double V_base;    // line voltage base (V)

    /// Total leakage coefficient 1 - L_m^2/(L_s L_r).
    double sigma() const { return 1.0 - L_m * L_m / (L_s * L_r); }
    /// Rotor transient inductance L_r - L_m^2/L_s.
    double sigma_lr() const { return L_r - L_m * L_m / L_s; }
    /// Stator transient inductance L_s - L_m^2/L_r.
    double sigma_ls() const { return L_s - L_m * L_m / L_r; }

    void validate() const;
};

/// Thevenin grid equivalent. L_g is stored so that omega1*L_g is the
/// per-unit reactance at the fundamental.
struct GridParams {
    double R_g;   // grid resistance (p.u.)
    double L_g;   // grid inductance (p.u. reactance / omega1)
    double V_g;   // source voltage magnitude (p.u.)
    double scr;   // short-circuit ratio the above were derived from

    void validate(double omega1) const;
};

/// Derive the grid equivalent from a short-circuit ratio.
/// x_over_r may be +infinity for a purely inductive grid.
GridParams grid_from_scr(double scr, double x_over_r, double V_g, double omega1);

/// Recompute the short-circuit ratio implied by (R_g, L_g, V_g).
double recompute_scr(const GridParams& g, double omega1);

/// Controller constants. PLL gains are per-unit multiples of the declared
/// base gains, so the effective gains are Kp_pll*pll_base_p [rad/s per p.u.
/// voltage] and Ki_pll*pll_base_i [rad/s^2 per p.u. voltage].
struct ControlParams {
    double Kp_pll;       // PLL proportional gain (p.u. of pll_base_p)
    double Ki_pll;       // PLL integral gain (p.u. of pll_base_i)
    double Kp_i;         // rotor-current loop proportional gain
    double Ki_i;         // rotor-current loop integral gain (1/s)
    double pll_base_p;   // base value defining 1 p.u. of Kp_pll (rad/s)
    double pll_base_i;   // base value defining 1 p.u. of Ki_pll (rad/s^2)
    bool decoupling = true;  // slip cross-coupling feedforward in the RSC

    double kp_pll_si() const { return Kp_pll * pll_base_p; }
    double ki_pll_si() const { return Ki_pll * pll_base_i; }

    void validate() const;
};

/// Steady state in the PCC-voltage-aligned d-q frame (V_sq0 = 0).
/// Motor convention: positive stator current flows into the machine, so
/// rated generation corresponds to P_ref = -1 p.u.
struct OperatingPoint {
    double V_sd0, V_sq0;       // PCC voltage (p.u.)
    double I_sd0, I_sq0;       // stator current (p.u.)
    double I_rd0, I_rq0;       // rotor current (p.u.)
    double V_rd0, V_rq0;       // rotor voltage (p.u.)
    double psi_sd0, psi_sq0;   // stator flux (p.u.)
    double psi_rd0, psi_rq0;   // rotor flux (p.u.)
    double omega_r;            // rotor electrical angular frequency (rad/s)
    double omega_sl;           // slip angular frequency omega1 - omega_r (rad/s)
    double P0, Q0;             // realized stator power (p.u.)
};

/// Solve the nonlinear steady state for the demanded stator power.
/// Damped Newton with analytic Jacobian; throws NoEquilibriumError when no
/// equilibrium exists (e.g. SCR too low for the requested power).
OperatingPoint solve_operating_point(const MachineParams& m, const GridParams& g,
                                     double P_ref, double Q_ref, double omega_r);

/// Residual norm of the static machine + grid equations at a given point
/// (diagnostic; small for any converged operating point).
double operating_point_residual(const MachineParams& m, const GridParams& g,
                                const OperatingPoint& op, double P_ref,
                                double Q_ref);

} // namespace dfig
