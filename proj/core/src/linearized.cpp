#include "dfig/linearized.hpp"

#include "dfig/errors.hpp"
#include "eig_internal.hpp"

#include <cmath>

namespace dfig {

namespace {

/// Linear form over [states..., u_d, u_q]; the assembly currency.
struct LinForm {
    std::vector<double> c;
    explicit LinForm(int n) : c(n + 2, 0.0) {}
};

LinForm operator+(LinForm a, const LinForm& b) {
    for (std::size_t i = 0; i < a.c.size(); ++i) a.c[i] += b.c[i];
    return a;
}

LinForm operator-(LinForm a, const LinForm& b) {
    for (std::size_t i = 0; i < a.c.size(); ++i) a.c[i] -= b.c[i];
    return a;
}

LinForm operator*(double k, LinForm a) {
    for (double& v : a.c) v *= k;
    return a;
}

} // namespace

LinearizedDfig::LinearizedDfig(const MachineParams& m, const ControlParams& c,
                               const OperatingPoint& op,
                               const ReshapeConfig& reshape) {
    m.validate();
    c.validate();
    const CompensatorRealization comp = CompensatorRealization::make(reshape, c);
    const int nc = comp.num_states();
    // States: psi_sd, psi_sq, psi_rd, psi_rq, dtheta, x_pll, xi_d, xi_q, comp...
    n_ = 8 + nc;
    const int kComp = 8;
    const int n = n_;

    auto state = [n](int i) {
        LinForm f(n);
        f.c[i] = 1.0;
        return f;
    };
    auto input = [n](int axis) {
        LinForm f(n);
        f.c[n + axis] = 1.0;
        return f;
    };

    const double det = m.L_s * m.L_r - m.L_m * m.L_m;
    const double li_ss = m.L_r / det, li_sr = -m.L_m / det;
    const double li_rs = -m.L_m / det, li_rr = m.L_s / det;

    const LinForm i_sd = li_ss * state(0) + li_sr * state(2);
    const LinForm i_sq = li_ss * state(1) + li_sr * state(3);
    const LinForm i_rd = li_rs * state(0) + li_rr * state(2);
    const LinForm i_rq = li_rs * state(1) + li_rr * state(3);

    const LinForm v_sq_c = input(1) - op.V_sd0 * state(4);

    // Compensator output as a linear form in its states (basis probing).
    LinForm y_comp_d(n), y_comp_q(n);
    {
        std::vector<double> x(std::max(nc, 1), 0.0);
        for (int k = 0; k < nc; ++k) {
            x.assign(nc, 0.0);
            x[k] = 1.0;
            double yd = 0.0, yq = 0.0;
            comp.output(x.data(), yd, yq);
            y_comp_d.c[kComp + k] = yd;
            y_comp_q.c[kComp + k] = yq;
        }
    }

    const LinForm i_meas_d = i_rd + op.I_rq0 * state(4) + y_comp_d;
    const LinForm i_meas_q = i_rq - op.I_rd0 * state(4) + y_comp_q;

    const double w_dec =
        c.decoupling ? (op.omega_sl / m.omega1) * m.sigma_lr() : 0.0;
    const LinForm v_rc_d =
        -c.Kp_i * i_meas_d + state(6) - w_dec * i_meas_q;
    const LinForm v_rc_q =
        -c.Kp_i * i_meas_q + state(7) + w_dec * i_meas_d;
    const LinForm v_r_d = v_rc_d - op.V_rq0 * state(4);
    const LinForm v_r_q = v_rc_q + op.V_rd0 * state(4);

    std::vector<LinForm> rows(n, LinForm(n));
    const double wb = m.omega1;
    rows[0] = wb * input(0) - (wb * m.R_s) * i_sd + wb * state(1);
    rows[1] = wb * input(1) - (wb * m.R_s) * i_sq - wb * state(0);
    rows[2] = wb * v_r_d - (wb * m.R_r) * i_rd + op.omega_sl * state(3);
    rows[3] = wb * v_r_q - (wb * m.R_r) * i_rq - op.omega_sl * state(2);
    rows[4] = c.kp_pll_si() * v_sq_c + state(5);
    rows[5] = c.ki_pll_si() * v_sq_c;
    rows[6] = -c.Ki_i * i_meas_d;
    rows[7] = -c.Ki_i * i_meas_q;

    // Compensator dynamics dx = A_c x + B_c * v_sq_c via basis probing.
    if (nc > 0) {
        std::vector<double> x(nc, 0.0), dx(nc, 0.0);
        for (int k = 0; k < nc; ++k) {
            x.assign(nc, 0.0);
            x[k] = 1.0;
            comp.derivatives(x.data(), 0.0, dx.data());
            for (int r = 0; r < nc; ++r)
                rows[kComp + r].c[kComp + k] += dx[r];
        }
        x.assign(nc, 0.0);
        comp.derivatives(x.data(), 1.0, dx.data());
        for (int r = 0; r < nc; ++r)
            rows[kComp + r] = rows[kComp + r] + dx[r] * v_sq_c;
    }

    a_.assign(static_cast<std::size_t>(n) * n, 0.0);
    b_.assign(static_cast<std::size_t>(n) * 2, 0.0);
    for (int r = 0; r < n; ++r) {
        for (int j = 0; j < n; ++j)
            a_[static_cast<std::size_t>(r) * n + j] = rows[r].c[j];
        b_[static_cast<std::size_t>(r) * 2 + 0] = rows[r].c[n + 0];
        b_[static_cast<std::size_t>(r) * 2 + 1] = rows[r].c[n + 1];
    }
    c_.assign(static_cast<std::size_t>(2) * n, 0.0);
    for (int j = 0; j < n; ++j) {
        c_[j] = i_sd.c[j];
        c_[n + j] = i_sq.c[j];
    }
}

Mat2 LinearizedDfig::eval(double omega_dq) const {
    const int n = n_;
    // Solve (jwI - A) X = B for the two input columns.
    std::vector<Complex> m(static_cast<std::size_t>(n) * n);
    std::vector<Complex> rhs(static_cast<std::size_t>(n) * 2);
    for (int r = 0; r < n; ++r) {
        for (int j = 0; j < n; ++j)
            m[static_cast<std::size_t>(r) * n + j] =
                -a_[static_cast<std::size_t>(r) * n + j];
        m[static_cast<std::size_t>(r) * n + r] += Complex(0.0, omega_dq);
        rhs[static_cast<std::size_t>(r) * 2 + 0] = b_[static_cast<std::size_t>(r) * 2 + 0];
        rhs[static_cast<std::size_t>(r) * 2 + 1] = b_[static_cast<std::size_t>(r) * 2 + 1];
    }
    // Gaussian elimination with partial pivoting on the complex system.
    for (int k = 0; k < n; ++k) {
        int piv = k;
        for (int i = k + 1; i < n; ++i)
            if (std::abs(m[static_cast<std::size_t>(i) * n + k]) >
                std::abs(m[static_cast<std::size_t>(piv) * n + k]))
                piv = i;
        if (std::abs(m[static_cast<std::size_t>(piv) * n + k]) < 1e-300)
            throw PoleError("state-space evaluation at a system pole", omega_dq);
        if (piv != k) {
            for (int j = 0; j < n; ++j)
                std::swap(m[static_cast<std::size_t>(k) * n + j],
                          m[static_cast<std::size_t>(piv) * n + j]);
            for (int j = 0; j < 2; ++j)
                std::swap(rhs[static_cast<std::size_t>(k) * 2 + j],
                          rhs[static_cast<std::size_t>(piv) * 2 + j]);
        }
        for (int i = k + 1; i < n; ++i) {
            const Complex f = m[static_cast<std::size_t>(i) * n + k] /
                              m[static_cast<std::size_t>(k) * n + k];
            if (f == Complex(0.0)) continue;
            for (int j = k; j < n; ++j)
                m[static_cast<std::size_t>(i) * n + j] -=
                    f * m[static_cast<std::size_t>(k) * n + j];
            rhs[static_cast<std::size_t>(i) * 2 + 0] -= f * rhs[static_cast<std::size_t>(k) * 2 + 0];
            rhs[static_cast<std::size_t>(i) * 2 + 1] -= f * rhs[static_cast<std::size_t>(k) * 2 + 1];
        }
    }
    std::vector<Complex> x(static_cast<std::size_t>(n) * 2);
    for (int col = 0; col < 2; ++col) {
        for (int i = n - 1; i >= 0; --i) {
            Complex s = rhs[static_cast<std::size_t>(i) * 2 + col];
            for (int j = i + 1; j < n; ++j)
                s -= m[static_cast<std::size_t>(i) * n + j] *
                     x[static_cast<std::size_t>(j) * 2 + col];
            x[static_cast<std::size_t>(i) * 2 + col] =
                s / m[static_cast<std::size_t>(i) * n + i];
        }
    }
    Mat2 y;
    Complex* yrow[2][2] = {{&y.a11, &y.a12}, {&y.a21, &y.a22}};
    for (int r = 0; r < 2; ++r)
        for (int col = 0; col < 2; ++col) {
            Complex s = 0.0;
            for (int j = 0; j < n; ++j)
                s += c_[static_cast<std::size_t>(r) * n + j] *
                     x[static_cast<std::size_t>(j) * 2 + col];
            *yrow[r][col] = s;
        }
    return y;
}

std::vector<Complex> LinearizedDfig::poles() const {
    return detail::real_matrix_eigenvalues(a_, n_);
}

bool LinearizedDfig::is_stable(double margin) const {
    for (const Complex& p : poles())
        if (p.real() >= -margin)
            return false;
    return true;
}

} // namespace dfig
