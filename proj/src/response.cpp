#include "semigrav/response.hpp"

#include <cmath>

#include "semigrav/constants.hpp"
#include "semigrav/errors.hpp"

namespace semigrav {

using constants::hbar;
using constants::k_B;

OscillatorConfig OscillatorConfig::with_quality_factor(double mass, double omega_cm, double Q,
                                                       double temperature, double omega_sn) {
    if (!(Q > 0.0)) {
        throw DomainError("quality factor must be positive");
    }
    return {mass, omega_cm, omega_cm / Q, temperature, omega_sn};
}

double OscillatorConfig::omega_q() const {
    return std::sqrt(omega_cm * omega_cm + omega_sn * omega_sn);
}

void validate(const OscillatorConfig& osc) {
    if (!(osc.mass > 0.0)) throw DomainError("oscillator mass must be positive");
    if (!(osc.gamma_m > 0.0)) throw DomainError("damping rate must be positive");
    if (!(osc.omega_cm >= 0.0)) throw DomainError("omega_cm must be non-negative");
    if (!(osc.omega_sn >= 0.0)) throw DomainError("omega_sn must be non-negative");
    if (!(osc.temperature >= 0.0)) throw DomainError("temperature must be non-negative");
}

void validate(const OpticalConfig& opt) {
    if (!(opt.transmissivity > 0.0 && opt.transmissivity <= 1.0)) {
        throw DomainError("transmissivity must lie in (0, 1]");
    }
    if (!(opt.input_power >= 0.0)) throw DomainError("input power must be non-negative");
    if (!(opt.carrier_omega > 0.0)) throw DomainError("carrier frequency must be positive");
}

double alpha_squared(const OpticalConfig& opt) {
    validate(opt);
    const double T = opt.transmissivity;
    return (8.0 * opt.input_power / T) * (hbar * opt.carrier_omega / (constants::c * constants::c)) /
           T;
}

Complex g_c(double omega, const OscillatorConfig& osc) {
    const Complex denom{osc.omega_cm * osc.omega_cm - omega * omega, -omega * osc.gamma_m};
    return 1.0 / (osc.mass * denom);
}

Complex g_q(double omega, const OscillatorConfig& osc) {
    const double wq2 = osc.omega_cm * osc.omega_cm + osc.omega_sn * osc.omega_sn;
    const Complex denom{wq2 - omega * omega, -omega * osc.gamma_m};
    return 1.0 / (osc.mass * denom);
}

Complex delta_g(double omega, const OscillatorConfig& osc) {
    return g_c(omega, osc) - g_q(omega, osc);
}

double s_fzp(double omega, const OscillatorConfig& osc) {
    return hbar * std::abs(omega) * osc.mass * osc.gamma_m;
}

double s_fcl(double omega, const OscillatorConfig& osc) {
    if (osc.temperature <= 0.0) return 0.0;
    const double w = std::abs(omega);
    if (w == 0.0) return s_fcl_classical(osc);
    const double x = hbar * w / (k_B * osc.temperature);
    return 2.0 * hbar * w * osc.mass * osc.gamma_m / std::expm1(x);
}

double s_fcl_classical(const OscillatorConfig& osc) {
    return 2.0 * k_B * osc.temperature * osc.mass * osc.gamma_m;
}

double s_x_th(double omega, const OscillatorConfig& osc) {
    // Im[G_c]/w = M gamma_m |G_c|^2, finite at w = 0.
    return 2.0 * k_B * osc.temperature * osc.mass * osc.gamma_m * std::norm(g_c(omega, osc));
}

double beta(double alpha_sq, const OscillatorConfig& osc) {
    return alpha_sq / (osc.mass * hbar * osc.gamma_m * osc.omega_q());
}

double alpha_sq_for_beta(double beta, const OscillatorConfig& osc) {
    return beta * osc.mass * hbar * osc.gamma_m * osc.omega_q();
}

double gamma_squared(const OscillatorConfig& osc) {
    const double wq = osc.omega_q();
    const double gw2 = osc.gamma_m * osc.gamma_m * wq * wq;
    const double wsn4 = std::pow(osc.omega_sn, 4);
    return (2.0 * k_B * osc.temperature / (hbar * wq)) * gw2 / (gw2 + wsn4);
}

double gamma_squared_approx(const OscillatorConfig& osc) {
    return 2.0 * k_B * osc.temperature * osc.gamma_m * osc.gamma_m /
           (hbar * std::pow(osc.omega_sn, 3));
}

DerivedParams derive(const OscillatorConfig& osc, double alpha_sq) {
    validate(osc);
    return {alpha_sq, osc.omega_q(), beta(alpha_sq, osc), gamma_squared(osc)};
}

}  // namespace semigrav
