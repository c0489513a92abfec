#include "semigrav/dynamics.hpp"

#include <array>
#include <cmath>

#include "semigrav/constants.hpp"
#include "semigrav/errors.hpp"

namespace semigrav {

using constants::hbar;

namespace {

using Moments = std::array<double, 5>;

Moments pack(const GaussianState& s) { return {s.mean_x, s.mean_p, s.var_xx, s.cov_xp, s.var_pp}; }

GaussianState unpack(const Moments& m) { return {m[0], m[1], m[2], m[3], m[4]}; }

Moments rhs(const Moments& m, double mass, double wcm2, double wq2) {
    return {
        m[1] / mass,
        -mass * wcm2 * m[0],
        2.0 * m[3] / mass,
        m[4] / mass - mass * wq2 * m[2],
        -2.0 * mass * wq2 * m[3],
    };
}

Moments axpy(const Moments& x, double a, const Moments& k) {
    Moments out;
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = x[i] + a * k[i];
    return out;
}

Moments rk4_step(const Moments& m, double dt, double mass, double wcm2, double wq2) {
    const Moments k1 = rhs(m, mass, wcm2, wq2);
    const Moments k2 = rhs(axpy(m, 0.5 * dt, k1), mass, wcm2, wq2);
    const Moments k3 = rhs(axpy(m, 0.5 * dt, k2), mass, wcm2, wq2);
    const Moments k4 = rhs(axpy(m, dt, k3), mass, wcm2, wq2);
    Moments out;
    for (std::size_t i = 0; i < out.size(); ++i) {
        out[i] = m[i] + dt / 6.0 * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
    }
    return out;
}

GaussianState propagate_exact(const GaussianState& s0, double t, double mass, double wcm,
                              double wq) {
    GaussianState s;
    if (wcm > 0.0) {
        const double c = std::cos(wcm * t), sn = std::sin(wcm * t);
        s.mean_x = s0.mean_x * c + s0.mean_p / (mass * wcm) * sn;
        s.mean_p = -mass * wcm * s0.mean_x * sn + s0.mean_p * c;
    } else {
        s.mean_x = s0.mean_x + s0.mean_p * t / mass;
        s.mean_p = s0.mean_p;
    }
    // Sigma(t) = S Sigma0 S^T with S the symplectic flow at w_q.
    const double c = std::cos(wq * t), sn = std::sin(wq * t);
    const double a = c, b = sn / (mass * wq), d = -mass * wq * sn, e = c;
    const double vxx = s0.var_xx, cxp = s0.cov_xp, vpp = s0.var_pp;
    s.var_xx = a * a * vxx + 2.0 * a * b * cxp + b * b * vpp;
    s.cov_xp = a * d * vxx + (a * e + b * d) * cxp + b * e * vpp;
    s.var_pp = d * d * vxx + 2.0 * d * e * cxp + e * e * vpp;
    return s;
}

double slope(const std::vector<double>& t, const std::vector<double>& y) {
    const double n = static_cast<double>(t.size());
    double st = 0, sy = 0, stt = 0, sty = 0;
    for (std::size_t i = 0; i < t.size(); ++i) {
        st += t[i];
        sy += y[i];
        stt += t[i] * t[i];
        sty += t[i] * y[i];
    }
    return (n * sty - st * sy) / (n * stt - st * st);
}

std::vector<double> unwrap(const std::vector<double>& angle, double period) {
    std::vector<double> out(angle.size());
    double offset = 0.0;
    for (std::size_t i = 0; i < angle.size(); ++i) {
        if (i > 0) {
            const double jump = angle[i] + offset - out[i - 1];
            offset -= period * std::round(jump / period);
        }
        out[i] = angle[i] + offset;
    }
    return out;
}

}  // namespace

GaussianState GaussianState::coherent(double mass, double omega, double x0, double p0) {
    return {x0, p0, hbar / (2.0 * mass * omega), 0.0, hbar * mass * omega / 2.0};
}

GaussianState GaussianState::squeezed(double mass, double omega, double r, double x0, double p0) {
    return {x0, p0, hbar / (2.0 * mass * omega) * std::exp(-2.0 * r), 0.0,
            hbar * mass * omega / 2.0 * std::exp(2.0 * r)};
}

void validate(const GaussianState& s) {
    if (!(s.var_xx > 0.0) || !(s.var_pp > 0.0)) {
        throw DomainError("Gaussian state variances must be positive");
    }
    const double bound = 0.25 * hbar * hbar;
    if (s.uncertainty_product() < bound * (1.0 - 1e-9)) {
        throw DomainError("Gaussian state violates the Heisenberg bound");
    }
}

double default_time_step(const OscillatorConfig& osc) {
    return constants::two_pi / (1000.0 * osc.omega_q());
}

MomentTrajectory evolve_moments(const GaussianState& initial, const OscillatorConfig& osc,
                                double t_final, double dt, const EvolveOptions& options) {
    validate(initial);
    if (!(osc.mass > 0.0)) throw DomainError("oscillator mass must be positive");
    const double wq = osc.omega_q();
    if (!(wq > 0.0)) throw DomainError("w_q must be positive");
    if (!(dt > 0.0) || dt > constants::two_pi / (100.0 * wq)) {
        throw ConfigError("time step must satisfy 0 < dt <= 2 pi / (100 w_q)");
    }
    if (!(t_final >= 0.0)) throw ConfigError("t_final must be non-negative");
    const std::size_t stride = options.output_stride == 0 ? 1 : options.output_stride;

    const auto steps = static_cast<std::size_t>(std::llround(t_final / dt));
    const double wcm2 = osc.omega_cm * osc.omega_cm;
    const double wq2 = wq * wq;

    MomentTrajectory traj;
    const std::size_t samples = steps / stride + 1;
    traj.times.reserve(samples);
    traj.states.reserve(samples);
    traj.energy.reserve(samples);
    auto record = [&](std::size_t k, const GaussianState& s) {
        traj.times.push_back(static_cast<double>(k) * dt);
        traj.states.push_back(s);
        traj.energy.push_back(energy(s, osc));
    };

    record(0, initial);
    Moments m = pack(initial);
    for (std::size_t k = 1; k <= steps; ++k) {
        if (options.integrator == Integrator::RungeKutta4) {
            m = rk4_step(m, dt, osc.mass, wcm2, wq2);
            if (k % stride == 0) record(k, unpack(m));
        } else if (k % stride == 0) {
            record(k, propagate_exact(initial, static_cast<double>(k) * dt, osc.mass,
                                      osc.omega_cm, wq));
        }
    }
    return traj;
}

double sn_potential_expectation(const GaussianState& s, const OscillatorConfig& osc) {
    return osc.mass * osc.omega_sn * osc.omega_sn * s.var_xx;
}

namespace {
double non_gravitational(const GaussianState& s, const OscillatorConfig& osc) {
    const double p2 = s.mean_p * s.mean_p + s.var_pp;
    const double x2 = s.mean_x * s.mean_x + s.var_xx;
    return p2 / (2.0 * osc.mass) + 0.5 * osc.mass * osc.omega_cm * osc.omega_cm * x2;
}
}  // namespace

double energy(const GaussianState& s, const OscillatorConfig& osc) {
    return non_gravitational(s, osc) + 0.5 * sn_potential_expectation(s, osc);
}

double energy_without_half(const GaussianState& s, const OscillatorConfig& osc) {
    return non_gravitational(s, osc) + sn_potential_expectation(s, osc);
}

double mean_rotation_frequency(const MomentTrajectory& traj, const OscillatorConfig& osc) {
    if (osc.omega_cm <= 0.0 || traj.times.size() < 2) return 0.0;
    std::vector<double> phase;
    phase.reserve(traj.states.size());
    for (const auto& s : traj.states) {
        phase.push_back(std::atan2(-s.mean_p / (osc.mass * osc.omega_cm), s.mean_x));
    }
    return slope(traj.times, unwrap(phase, constants::two_pi));
}

double ellipse_rotation_frequency(const MomentTrajectory& traj, const OscillatorConfig& osc) {
    const double scale = osc.mass * osc.omega_q();
    std::vector<double> axis;
    axis.reserve(traj.states.size());
    for (const auto& s : traj.states) {
        const double a = s.var_xx;
        const double b = s.cov_xp / scale;
        const double d = s.var_pp / (scale * scale);
        if (std::hypot(a - d, 2.0 * b) < 1e-12 * (a + d)) return std::nan("");
        axis.push_back(0.5 * std::atan2(2.0 * b, a - d));
    }
    if (axis.size() < 2) return std::nan("");
    return -slope(traj.times, unwrap(axis, constants::pi));
}

}  // namespace semigrav
