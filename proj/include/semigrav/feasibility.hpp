#pragma once

#include <optional>
#include <string>
#include <vector>

#include "semigrav/response.hpp"

namespace semigrav {

/// Torsion-pendulum style experiment. Angular frequencies in rad/s.
struct ExperimentConfig {
    std::string material = "W";
    double mass = 0.2;             // kg
    double omega_cm = 0.0;         // rad/s
    double quality_factor = 0.0;
    double temperature = 0.0;      // K
    double carrier_omega = 0.0;    // rad/s
    double transmissivity = 1e-2;  // input mirror
    std::optional<double> atomic_mass;  // kg, overrides the material value
    std::optional<double> omega_sn;     // rad/s, overrides the material value
    std::optional<double> input_power;  // W; sets beta through the optics
    std::optional<double> beta;         // explicit measurement strength
    double confidence_p = 0.1;

    /// Tungsten at room temperature (peak search).
    static ExperimentConfig pre_reference();
    /// Osmium at 1 K with Q = 1e7 (dip search).
    static ExperimentConfig post_reference();

    double resolved_atomic_mass() const;
    double resolved_omega_sn() const;
    double resolved_delta_x_zp() const;
    OscillatorConfig oscillator() const;
};

void validate(const ExperimentConfig& cfg);

// Scaling laws anchored at the quoted reference values. Each is an exact
// power law in the listed parameters.

/// 1.6 h (T0/300 K)^0.73 (w_cm/2pi 10 mHz)^0.47 (184 u/m)^0.49 (200 g/M)^0.73
///   (1e4/Q)^0.47 (0.359 s^-1/w_sn)^1.96
double pre_tau_scaling(const ExperimentConfig& cfg);

/// 432 mW (1e4/Q) (m/184 u)^(2/3) (M/200 g)^2 (w_cm/2pi 10 mHz) (w_sn/0.359)^(2/3)
///   (2pi 0.2 THz/w_c) (T/1e-2)^2
double pre_power_scaling(const ExperimentConfig& cfg);

/// 8235 (Q/1e4)^2 (m/184 u)^(2/3) (M/200 g) (2pi 10 mHz/w_cm)^2 (w_sn/0.359)^(8/3) (300 K/T0)
double pre_height_scaling(const ExperimentConfig& cfg);

/// 13 d (1e7/Q) (T0/1 K) (0.488/w_sn)^3 (w_cm/2pi 4 mHz)
double post_tau_scaling(const ExperimentConfig& cfg);

/// 4.8 nW (Q/1e7) (1 K/T0)^2 (M/200 g)^2 (2pi 4 mHz/w_cm) (w_sn/0.488)^4
///   (2pi 0.2 THz/w_c) (T/1e-2)^2
double post_power_scaling(const ExperimentConfig& cfg);

struct ValidityFlags {
    bool beta_limit_respected = true;  // beta <= beta_limit / 10
    bool narrowband = true;            // feature width <= 1e-2 w_q
    bool peak_separation = true;       // |w_q - w_cm| > 10 gamma_m
    bool gamma_regime = true;          // w_cm <= w_sn / 10 (and Gamma^2 < 0.1 for post)
    bool fit_valid = true;             // h > 10, or d < 0.9
};

struct FeasibilityReport {
    std::string regime;                // "pre" or "post"
    double tau_min_scaled = 0.0;       // s, scaling law
    double input_power = 0.0;          // W, scaling law
    double feature_amplitude = 0.0;    // h from the scaling law (pre) or d at beta_used (post)
    double beta_used = 0.0;
    double beta_limit = 0.0;
    double gamma_sq = 0.0;
    double omega_q = 0.0;
    double gamma_m = 0.0;
    double closure_amplitude = 0.0;    // h or d from the spectra at beta_used
    double tau_fit = 0.0;              // s, halved fit at closure_amplitude
    double coherence_time = 0.0;       // s, 1 / feature FWHM
    double beta_band_low = 0.0;        // post only
    double beta_band_high = 0.0;       // post only
    ValidityFlags flags;
    std::vector<std::string> warnings;
};

/// Pre-selection peak. beta defaults to beta_limit / 10 unless set or implied
/// by input_power.
FeasibilityReport pre_report(const ExperimentConfig& cfg);

/// Post-selection dip. beta defaults to 0.31 / Gamma^2.
FeasibilityReport post_report(const ExperimentConfig& cfg);

struct BetaOpt {
    double beta = 0.0;
    double band_low = 0.0;
    double band_high = 0.0;
    bool in_regime = true;  // Gamma^2 < 0.1
};

/// 0.31 / Gamma^2 with the near-optimal band [0.1, 0.7] / Gamma^2.
BetaOpt post_beta_opt(double gamma_sq);

struct BetaCurve {
    double beta_opt = 0.0;
    double tau_min = 0.0;  // s
    std::vector<double> beta;
    std::vector<double> tau;   // s, halved fit of the dip at each beta
    std::vector<double> depth;
};

/// Log sweep of beta over [1e-2, 1e2] / Gamma^2. At each point the dip of
/// depth d_post(beta) and width (beta + 1) gamma_m is timed with the dip fit.
BetaCurve optimize_beta(double gamma_sq, double gamma_m, double p, std::size_t points = 801);

}  // namespace semigrav
