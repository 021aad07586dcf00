#include "dfig/reshape.hpp"

#include "dfig/errors.hpp"

namespace dfig {

void ReshapeConfig::validate() const {
    if (!(omega_hpf > 0.0))
        throw InvalidParameterError("reshape: omega_hpf must be positive");
    if (!(Q > 0.0))
        throw InvalidParameterError("reshape: Q must be positive");
    if (!(A_inf > 0.0))
        throw InvalidParameterError("reshape: A_inf must be positive");
}

RationalTF hpf2(const ReshapeConfig& cfg) {
    cfg.validate();
    const double w = cfg.omega_hpf;
    return RationalTF({0.0, 0.0, cfg.A_inf}, {w * w, w / cfg.Q, 1.0});
}

namespace {

RationalTF gz1_entry(const ReshapeConfig& cfg, const ControlParams& c, double gain) {
    const double w = cfg.omega_hpf;
    return RationalTF({cfg.A_inf * gain * c.ki_pll_si(),
                       cfg.A_inf * gain * c.kp_pll_si()},
                      {w * w, w / cfg.Q, 1.0});
}

RationalTF gz2_entry(const ReshapeConfig& cfg, const ControlParams& c, double gain) {
    return RationalTF::first_order(gain * c.kp_pll_si(), cfg.omega_hpf);
}

} // namespace

TFMatrix build_gz1(const ReshapeConfig& cfg, const ControlParams& c) {
    cfg.validate();
    if (cfg.mode != ReshapeMode::Gz1)
        throw InvalidParameterError("build_gz1 requires mode Gz1");
    TFMatrix m;
    m.e12 = gz1_entry(cfg, c, -cfg.I_rqref);
    m.e22 = gz1_entry(cfg, c, cfg.I_rdref);
    return m;
}

TFMatrix build_gz2(const ReshapeConfig& cfg, const ControlParams& c) {
    cfg.validate();
    if (cfg.mode != ReshapeMode::Gz2)
        throw InvalidParameterError("build_gz2 requires mode Gz2");
    TFMatrix m;
    m.e12 = gz2_entry(cfg, c, -cfg.I_rqref);
    m.e22 = gz2_entry(cfg, c, cfg.I_rdref);
    return m;
}

TFMatrix compensator_matrix(const ReshapeConfig& cfg, const ControlParams& c) {
    switch (cfg.mode) {
    case ReshapeMode::Off:
        cfg.validate();
        return TFMatrix::zero();
    case ReshapeMode::Gz1:
        return build_gz1(cfg, c);
    case ReshapeMode::Gz2:
        return build_gz2(cfg, c);
    }
    throw InvalidParameterError("unknown reshape mode");
}

CompensatorRealization CompensatorRealization::make(const ReshapeConfig& cfg,
                                                    const ControlParams& c) {
    cfg.validate();
    CompensatorRealization r;
    const double w = cfg.omega_hpf;
    switch (cfg.mode) {
    case ReshapeMode::Off:
        r.order_ = 0;
        break;
    case ReshapeMode::Gz1:
        r.order_ = 2;
        r.blocks_.push_back({w * w, w / cfg.Q,
                             -cfg.I_rqref * cfg.A_inf * c.ki_pll_si(),
                             -cfg.I_rqref * cfg.A_inf * c.kp_pll_si(), false});
        r.blocks_.push_back({w * w, w / cfg.Q,
                             cfg.I_rdref * cfg.A_inf * c.ki_pll_si(),
                             cfg.I_rdref * cfg.A_inf * c.kp_pll_si(), true});
        break;
    case ReshapeMode::Gz2:
        r.order_ = 1;
        r.blocks_.push_back({w, 0.0, -cfg.I_rqref * c.kp_pll_si(), 0.0, false});
        r.blocks_.push_back({w, 0.0, cfg.I_rdref * c.kp_pll_si(), 0.0, true});
        break;
    }
    return r;
}

void CompensatorRealization::derivatives(const double* x, double u,
                                         double* dxdt) const {
    int k = 0;
    for (const Block& b : blocks_) {
        if (order_ == 2) {
            dxdt[k] = x[k + 1];
            dxdt[k + 1] = -b.a0 * x[k] - b.a1 * x[k + 1] + u;
        } else {
            dxdt[k] = -b.a0 * x[k] + u;
        }
        k += order_;
    }
}

void CompensatorRealization::output(const double* x, double& y_d,
                                    double& y_q) const {
    y_d = 0.0;
    y_q = 0.0;
    int k = 0;
    for (const Block& b : blocks_) {
        const double y = (order_ == 2) ? b.b0 * x[k] + b.b1 * x[k + 1]
                                       : b.b0 * x[k];
        (b.to_q ? y_q : y_d) += y;
        k += order_;
    }
}

} // namespace dfig
