#include "aris/objective.hpp"

#include <cmath>
#include <stdexcept>

namespace aris {

double negative_p_norm(const Eigen::VectorXd& values, double p) {
    if (p >= 0.0) throw std::invalid_argument("negative_p_norm: p must be negative");
    if (values.size() == 0) throw std::invalid_argument("negative_p_norm: empty input");
    const double vmin = values.minCoeff();
    if (vmin <= 0.0)
        throw std::domain_error("negative_p_norm: values must be strictly positive");
    const double sum = ((values.array() / vmin).pow(p)).sum();
    return vmin * std::pow(sum, 1.0 / p);
}

Eigen::VectorXd compute_rates(const DecisionPoint& x, const Scenario& scenario) {
    const ChannelRealization ch = assemble_channels(scenario, x.pose());
    return all_user_rates(ch, x.phases, scenario.radio);
}

double smoothed_objective(const DecisionPoint& x, const Scenario& scenario,
                          const SmoothingParams& sp) {
    return -negative_p_norm(compute_rates(x, scenario), sp.p_exponent);
}

Eigen::VectorXd fd_gradient(const std::function<double(const Eigen::VectorXd&)>& f,
                            const Eigen::VectorXd& x, const Eigen::VectorXd& lower,
                            const Eigen::VectorXd& upper, double step) {
    Eigen::VectorXd grad = Eigen::VectorXd::Zero(x.size());
    Eigen::VectorXd probe = x;
    for (Eigen::Index i = 0; i < x.size(); ++i) {
        const double hi = std::min(x[i] + step, upper[i]);
        const double lo = std::max(x[i] - step, lower[i]);
        if (hi <= lo) continue;  // pinched coordinate
        probe[i] = hi;
        const double f_hi = f(probe);
        probe[i] = lo;
        const double f_lo = f(probe);
        probe[i] = x[i];
        grad[i] = (f_hi - f_lo) / (hi - lo);
    }
    return grad;
}

namespace {

DecisionPoint with_block(const DecisionPoint& x, int block, const Eigen::VectorXd& value) {
    DecisionPoint y = x;
    switch (block) {
        case 1: y.phases = value; break;
        case 2: y.position = value; break;
        case 3: y.orientation = Orientation::from_vec(value); break;
        default: throw std::invalid_argument("block index must be 1, 2 or 3");
    }
    return y;
}

Eigen::VectorXd block_value(const DecisionPoint& x, int block) {
    switch (block) {
        case 1: return x.phases;
        case 2: return x.position;
        case 3: return x.orientation.vec();
        default: throw std::invalid_argument("block index must be 1, 2 or 3");
    }
}

}  // namespace

Eigen::VectorXd fd_block_gradient(const DecisionPoint& x, const Scenario& scenario,
                                  const SmoothingParams& sp, int block) {
    const Box box = block == 1   ? scenario.phase_box()
                    : block == 2 ? scenario.position_box
                                 : scenario.orientation_box;
    const double step = block == 1   ? sp.phase_fd_step
                        : block == 2 ? sp.position_fd_step
                                     : sp.orientation_fd_step;
    auto f = [&](const Eigen::VectorXd& v) {
        return smoothed_objective(with_block(x, block, v), scenario, sp);
    };
    return fd_gradient(f, block_value(x, block), box.lower, box.upper, step);
}

Eigen::VectorXd analytic_phase_gradient(const DecisionPoint& x, const Scenario& scenario,
                                        const SmoothingParams& sp) {
    const ChannelRealization ch = assemble_channels(scenario, x.pose());
    const RadioParams& radio = scenario.radio;
    const Eigen::MatrixXcd v = cascade_weights(ch);  // M x K
    const Eigen::VectorXcd phasors =
        x.phases.array().cos().cast<Complex>() +
        Complex(0.0, 1.0) * x.phases.array().sin().cast<Complex>();
    const Eigen::VectorXcd c = v.transpose() * phasors;  // K cascade scalars

    const double snr_scale = radio.tx_power * radio.antenna_gain / radio.noise_power;
    const Eigen::Index users = c.size();
    Eigen::VectorXd rates(users);
    for (Eigen::Index k = 0; k < users; ++k)
        rates[k] = radio.bandwidth * std::log2(1.0 + snr_scale * std::norm(c[k]));

    const double p = sp.p_exponent;
    const double rmin = rates.minCoeff();
    if (rmin <= 0.0)
        throw std::domain_error("analytic_phase_gradient: non-positive rate");
    const Eigen::ArrayXd ratio = rates.array() / rmin;
    const double t = ratio.pow(p).sum();
    // d(-F)/dR_k in the min-factored form; scale-free in the rates.
    const Eigen::ArrayXd norm_weight = std::pow(t, 1.0 / p - 1.0) * ratio.pow(p - 1.0);

    Eigen::VectorXd grad = Eigen::VectorXd::Zero(x.phases.size());
    for (Eigen::Index k = 0; k < users; ++k) {
        const double snr = snr_scale * std::norm(c[k]);
        const double rate_factor =
            radio.bandwidth / std::log(2.0) * snr_scale / (1.0 + snr);
        const double w = norm_weight[k] * rate_factor;
        for (Eigen::Index m = 0; m < grad.size(); ++m) {
            const double dsq = -2.0 * std::imag(v(m, k) * phasors[m] * std::conj(c[k]));
            grad[m] -= w * dsq;  // objective is -(p-norm)
        }
    }
    return grad;
}

}  // namespace aris
