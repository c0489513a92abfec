#pragma once

#include <complex>

namespace semigrav {

using Complex = std::complex<double>;

/// Center-of-mass oscillator. Spectra are double-sided and even in omega.
struct OscillatorConfig {
    double mass = 0.0;         // kg
    double omega_cm = 0.0;     // rad/s, resonance without self-gravity
    double gamma_m = 0.0;      // rad/s, viscous damping rate
    double temperature = 0.0;  // K
    double omega_sn = 0.0;     // rad/s

    /// gamma_m = omega_cm / Q.
    static OscillatorConfig with_quality_factor(double mass, double omega_cm, double Q,
                                                double temperature, double omega_sn);

    double omega_q() const;
    double quality_factor() const { return omega_cm / gamma_m; }
};

void validate(const OscillatorConfig& osc);

struct OpticalConfig {
    double input_power = 0.0;     // W
    double transmissivity = 0.0;  // input-mirror power transmissivity
    double carrier_omega = 0.0;   // rad/s
};

void validate(const OpticalConfig& opt);

struct DerivedParams {
    double alpha_sq = 0.0;
    double omega_q = 0.0;
    double beta = 0.0;
    double gamma_sq = 0.0;
};

/// Optomechanical coupling (8 I/T)(hbar w_c / c^2)(1/T).
double alpha_squared(const OpticalConfig& opt);

/// Classical response 1 / (M (w_cm^2 - w (w + i gamma_m))).
Complex g_c(double omega, const OscillatorConfig& osc);

/// Response with the quantum-uncertainty resonance w_q. Uses the same
/// retarded sign convention as g_c (Im[G] * omega >= 0), so g_q == g_c
/// when omega_sn == 0.
Complex g_q(double omega, const OscillatorConfig& osc);

Complex delta_g(double omega, const OscillatorConfig& osc);

/// Zero-point thermal force spectrum hbar |w| M gamma_m.
double s_fzp(double omega, const OscillatorConfig& osc);

/// Classical thermal force spectrum, exact Bose-Einstein form
/// 2 hbar |w| M gamma_m / (exp(hbar |w| / k_B T0) - 1).
double s_fcl(double omega, const OscillatorConfig& osc);

/// High-temperature limit of s_fcl: 2 k_B T0 M gamma_m.
double s_fcl_classical(const OscillatorConfig& osc);

/// Thermal position spectrum 2 k_B T0 Im[G_c] / w (limit taken at w = 0).
double s_x_th(double omega, const OscillatorConfig& osc);

/// Measurement strength alpha^2 / (M hbar gamma_m w_q).
double beta(double alpha_sq, const OscillatorConfig& osc);

/// alpha^2 that yields a given measurement strength.
double alpha_sq_for_beta(double beta, const OscillatorConfig& osc);

/// Thermal-fluctuation strength (2 k_B T0 / hbar w_q) g^2 w_q^2 / (g^2 w_q^2 + w_sn^4).
double gamma_squared(const OscillatorConfig& osc);

/// Q >> 1 form 2 k_B T0 gamma_m^2 / (hbar w_sn^3).
double gamma_squared_approx(const OscillatorConfig& osc);

DerivedParams derive(const OscillatorConfig& osc, double alpha_sq);

}  // namespace semigrav
