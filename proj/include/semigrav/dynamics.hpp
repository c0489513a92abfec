#pragma once

#include <cstddef>
#include <vector>

#include "semigrav/response.hpp"

namespace semigrav {

/// First and second moments of a Gaussian center-of-mass state.
struct GaussianState {
    double mean_x = 0.0;
    double mean_p = 0.0;
    double var_xx = 0.0;
    double cov_xp = 0.0;
    double var_pp = 0.0;

    /// Coherent state of an oscillator of frequency `omega` displaced to (x0, p0).
    static GaussianState coherent(double mass, double omega, double x0 = 0.0, double p0 = 0.0);

    /// Position-squeezed state: var_xx scaled by exp(-2 r), var_pp by exp(2 r).
    static GaussianState squeezed(double mass, double omega, double r, double x0 = 0.0,
                                  double p0 = 0.0);

    double uncertainty_product() const { return var_xx * var_pp - cov_xp * cov_xp; }
};

void validate(const GaussianState& s);

struct MomentTrajectory {
    std::vector<double> times;
    std::vector<GaussianState> states;
    std::vector<double> energy;
};

enum class Integrator { RungeKutta4, ExactPropagator };

struct EvolveOptions {
    Integrator integrator = Integrator::RungeKutta4;
    std::size_t output_stride = 1;  // record every n-th step
};

/// Default step 2 pi / (1000 w_q).
double default_time_step(const OscillatorConfig& osc);

/// Integrates the closed moment equations of the self-gravitating oscillator
/// (no damping, no light). Means follow w_cm; covariances follow w_q.
/// Throws ConfigError when dt > 2 pi / (100 w_q).
MomentTrajectory evolve_moments(const GaussianState& initial, const OscillatorConfig& osc,
                                double t_final, double dt, const EvolveOptions& options = {});

/// Expectation of the quadratic self-gravity potential on the state itself:
/// M w_sn^2 var_xx (constant part of the self-energy dropped).
double sn_potential_expectation(const GaussianState& s, const OscillatorConfig& osc);

/// Conserved energy <H_NG> + <V_SN>/2.
double energy(const GaussianState& s, const OscillatorConfig& osc);

/// <H_NG> + <V_SN>; not conserved for squeezed states.
double energy_without_half(const GaussianState& s, const OscillatorConfig& osc);

/// Rotation rate of (<x>, <p>/(M w_cm)) in phase space from the unwrapped
/// phase angle. Zero when w_cm == 0.
double mean_rotation_frequency(const MomentTrajectory& traj, const OscillatorConfig& osc);

/// Rotation rate of the uncertainty ellipse in (x, p/(M w_q)) coordinates
/// from the unwrapped principal-axis angle. NaN for a circular ellipse.
double ellipse_rotation_frequency(const MomentTrajectory& traj, const OscillatorConfig& osc);

}  // namespace semigrav
