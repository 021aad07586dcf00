#include "dfig/admittance.hpp"

#include "dfig/errors.hpp"

#include <algorithm>
#include <cmath>

namespace dfig {

namespace {

constexpr Complex kJ{0.0, 1.0};

Mat2 complex_structured(Complex a, Complex b) {
    // [[a, -b], [b, a]], the real-matrix image of the complex scalar a + jb.
    return {a, -b, b, a};
}

} // namespace

Mat2 seq_transform(const Mat2& m) {
    const Complex sum = m.a11 + m.a22;
    const Complex dif = m.a11 - m.a22;
    const Complex skw = m.a21 - m.a12;
    const Complex sym = m.a12 + m.a21;
    return {0.5 * (sum + kJ * skw), 0.5 * (dif + kJ * sym),
            0.5 * (dif - kJ * sym), 0.5 * (sum - kJ * skw)};
}

Mat2 seq_transform_inverse(const Mat2& m) {
    return {0.5 * (m.a11 + m.a12 + m.a21 + m.a22),
            0.5 * kJ * (m.a11 - m.a12 + m.a21 - m.a22),
            0.5 * kJ * (-m.a11 - m.a12 + m.a21 + m.a22),
            0.5 * (m.a11 - m.a12 - m.a21 + m.a22)};
}

DfigAdmittance::DfigAdmittance(const MachineParams& m, const ControlParams& c,
                               const OperatingPoint& op,
                               const ReshapeConfig& reshape)
    : machine_(m), control_(c), op_(op), reshape_(reshape),
      pll_(build_pll_model(op, c)), gz_(compensator_matrix(reshape, c)) {
    m.validate();
}

AdmittanceParts DfigAdmittance::eval_dq(double omega_dq) const {
    if (std::abs(omega_dq) < 1e-9)
        throw PoleError("admittance undefined at dq dc (current-loop integrator)",
                        omega_dq);
    const Complex s{0.0, omega_dq};
    const double wb = machine_.omega1;
    const Complex lam = s / wb;
    const double slip = op_.omega_sl / wb;

    const Mat2 a = complex_structured(machine_.R_s + lam * machine_.L_s,
                                      machine_.L_s);
    const Mat2 b = complex_structured(lam * machine_.L_m, machine_.L_m);
    const Mat2 cm = complex_structured(lam * machine_.L_m, slip * machine_.L_m);
    const Mat2 d = complex_structured(machine_.R_r + lam * machine_.L_r,
                                      slip * machine_.L_r);

    const Complex pi_gain = control_.Kp_i + control_.Ki_i / s;
    const Mat2 pi = Mat2::diag(pi_gain, pi_gain);
    const Mat2 w = control_.decoupling
                       ? complex_structured(0.0, slip * machine_.sigma_lr())
                       : Mat2{};

    const Mat2 g = d + pi - w;
    const Mat2 g_inv = mat2_inv(g);
    const Mat2 k = g_inv * cm;

    AdmittanceParts parts;
    parts.siso = mat2_inv(a - b * k);

    const Complex h_c = pll_.h_closed.eval(omega_dq);
    const Complex e_err = 1.0 - op_.V_sd0 * h_c;
    const std::array<Complex, 2> m_i{op_.I_rq0 * h_c, -op_.I_rd0 * h_c};
    const std::array<Complex, 2> m_v{-op_.V_rq0 * h_c, op_.V_rd0 * h_c};
    const std::array<Complex, 2> comp{gz_.e12.eval(omega_dq) * e_err,
                                      gz_.e22.eval(omega_dq) * e_err};

    const Mat2 w_minus_pi = w - pi;
    const std::array<Complex, 2> f_i =
        w_minus_pi * std::array<Complex, 2>{m_i[0] + comp[0], m_i[1] + comp[1]};

    const Mat2 front = parts.siso * b * g_inv;
    const auto path = [&front](const std::array<Complex, 2>& f) {
        const std::array<Complex, 2> v = front * f;
        return Mat2{0.0, -v[0], 0.0, -v[1]};
    };
    parts.i = path(f_i);
    parts.m = path(m_v);
    return parts;
}

AdmittanceParts DfigAdmittance::eval_seq(double f_hz) const {
    const double f1 = machine_.omega1 / (2.0 * M_PI);
    const AdmittanceParts dq = eval_dq(2.0 * M_PI * (f_hz - f1));
    return {seq_transform(dq.siso), seq_transform(dq.i), seq_transform(dq.m)};
}

Mat2 DfigAdmittance::total_seq(double f_hz) const {
    return eval_seq(f_hz).total();
}

std::vector<double> default_dq_grid() {
    const std::vector<double> pos = log_grid(1.0, 2000.0, 400);
    std::vector<double> f;
    f.reserve(2 * pos.size());
    for (auto it = pos.rbegin(); it != pos.rend(); ++it)
        f.push_back(-*it);
    f.insert(f.end(), pos.begin(), pos.end());
    return f;
}

AdmittanceModel build_admittance_dq(const MachineParams& m,
                                    const ControlParams& c,
                                    const OperatingPoint& op,
                                    const ReshapeConfig& reshape,
                                    const std::vector<double>& freqs_dq_hz) {
    AdmittanceModel model;
    model.frame = Frame::DQ;
    model.evaluator = std::make_shared<DfigAdmittance>(m, c, op, reshape);

    std::vector<Mat2> siso, yi, ym, tot;
    siso.reserve(freqs_dq_hz.size());
    yi.reserve(freqs_dq_hz.size());
    ym.reserve(freqs_dq_hz.size());
    tot.reserve(freqs_dq_hz.size());
    for (double f : freqs_dq_hz) {
        const AdmittanceParts p = model.evaluator->eval_dq(2.0 * M_PI * f);
        siso.push_back(p.siso);
        yi.push_back(p.i);
        ym.push_back(p.m);
        tot.push_back(p.total());
    }
    model.y_siso = FreqResponse(freqs_dq_hz, std::move(siso));
    model.y_i = FreqResponse(freqs_dq_hz, std::move(yi));
    model.y_m = FreqResponse(freqs_dq_hz, std::move(ym));
    model.y_total = FreqResponse(freqs_dq_hz, std::move(tot));
    return model;
}

namespace {

FreqResponse transform_response(const FreqResponse& in, double f_shift,
                                Mat2 (*tf)(const Mat2&)) {
    std::vector<double> f(in.freqs_hz);
    for (double& x : f) x += f_shift;
    std::vector<Mat2> v;
    v.reserve(in.values.size());
    for (const Mat2& m : in.values)
        v.push_back(tf(m));
    return FreqResponse(std::move(f), std::move(v));
}

} // namespace

AdmittanceModel dq_to_modified_sequence(const AdmittanceModel& y_dq,
                                        double omega1) {
    if (y_dq.frame != Frame::DQ)
        throw FrameMismatchError("dq_to_modified_sequence expects a dq-frame model");
    const double f1 = omega1 / (2.0 * M_PI);
    AdmittanceModel model;
    model.frame = Frame::ModifiedSequence;
    model.evaluator = y_dq.evaluator;
    model.y_siso = transform_response(y_dq.y_siso, f1, seq_transform);
    model.y_i = transform_response(y_dq.y_i, f1, seq_transform);
    model.y_m = transform_response(y_dq.y_m, f1, seq_transform);
    model.y_total = transform_response(y_dq.y_total, f1, seq_transform);
    return model;
}

AdmittanceModel modified_sequence_to_dq(const AdmittanceModel& y_seq,
                                        double omega1) {
    if (y_seq.frame != Frame::ModifiedSequence)
        throw FrameMismatchError(
            "modified_sequence_to_dq expects a sequence-frame model");
    const double f1 = omega1 / (2.0 * M_PI);
    AdmittanceModel model;
    model.frame = Frame::DQ;
    model.evaluator = y_seq.evaluator;
    model.y_siso = transform_response(y_seq.y_siso, -f1, seq_transform_inverse);
    model.y_i = transform_response(y_seq.y_i, -f1, seq_transform_inverse);
    model.y_m = transform_response(y_seq.y_m, -f1, seq_transform_inverse);
    model.y_total = transform_response(y_seq.y_total, -f1, seq_transform_inverse);
    return model;
}

ReshapeConfig reshape_with_op_refs(ReshapeConfig cfg, const OperatingPoint& op) {
    cfg.I_rdref = op.I_rd0;
    cfg.I_rqref = op.I_rq0;
    return cfg;
}

} // namespace dfig
