#include "semigrav/feasibility.hpp"

#include <algorithm>
#include <cmath>

#include "semigrav/constants.hpp"
#include "semigrav/detect.hpp"
#include "semigrav/errors.hpp"
#include "semigrav/materials.hpp"
#include "semigrav/spectra.hpp"

namespace semigrav {

using constants::amu;
using constants::two_pi;

namespace {
constexpr double hour = 3600.0;
constexpr double day = 86400.0;
const double ref_carrier = two_pi * 0.2e12;
}  // namespace

ExperimentConfig ExperimentConfig::pre_reference() {
    ExperimentConfig c;
    c.material = "W";
    c.mass = 0.2;
    c.omega_cm = two_pi * 10e-3;
    c.quality_factor = 1e4;
    c.temperature = 300.0;
    c.carrier_omega = ref_carrier;
    c.transmissivity = 1e-2;
    c.atomic_mass = 184.0 * amu;
    c.omega_sn = 0.359;
    return c;
}

ExperimentConfig ExperimentConfig::post_reference() {
    ExperimentConfig c;
    c.material = "Os";
    c.mass = 0.2;
    c.omega_cm = two_pi * 4e-3;
    c.quality_factor = 1e7;
    c.temperature = 1.0;
    c.carrier_omega = ref_carrier;
    c.transmissivity = 1e-2;
    c.omega_sn = 0.488;
    return c;
}

double ExperimentConfig::resolved_atomic_mass() const {
    return atomic_mass ? *atomic_mass : lookup_material(material).spec.atomic_mass;
}

double ExperimentConfig::resolved_omega_sn() const {
    return omega_sn ? *omega_sn : lookup_material(material).derived.omega_sn;
}

double ExperimentConfig::resolved_delta_x_zp() const {
    return lookup_material(material).derived.delta_x_zp;
}

OscillatorConfig ExperimentConfig::oscillator() const {
    return OscillatorConfig::with_quality_factor(mass, omega_cm, quality_factor, temperature,
                                                 resolved_omega_sn());
}

void validate(const ExperimentConfig& cfg) {
    if (!(cfg.mass > 0.0)) throw DomainError("test mass must be positive");
    if (!(cfg.omega_cm > 0.0)) throw DomainError("omega_cm must be positive");
    if (!(cfg.quality_factor > 0.0)) throw DomainError("quality factor must be positive");
    if (!(cfg.temperature > 0.0)) throw DomainError("temperature must be positive");
    if (!(cfg.carrier_omega > 0.0)) throw DomainError("carrier frequency must be positive");
    if (!(cfg.transmissivity > 0.0 && cfg.transmissivity <= 1.0)) {
        throw DomainError("transmissivity must lie in (0, 1]");
    }
    if (cfg.atomic_mass && !(*cfg.atomic_mass > 0.0)) throw DomainError("atomic mass must be positive");
    if (cfg.omega_sn && !(*cfg.omega_sn > 0.0)) throw DomainError("omega_sn must be positive");
    if (cfg.input_power && !(*cfg.input_power > 0.0)) throw DomainError("input power must be positive");
    if (cfg.beta && !(*cfg.beta > 0.0)) throw DomainError("beta must be positive");
    if (!(cfg.confidence_p > 0.0 && cfg.confidence_p < 0.5)) {
        throw ConfigError("confidence p must lie in (0, 0.5)");
    }
    lookup_material(cfg.material);
}

double pre_tau_scaling(const ExperimentConfig& c) {
    const double m = c.resolved_atomic_mass() / amu;
    return 1.6 * hour * std::pow(c.temperature / 300.0, 0.73) *
           std::pow(c.omega_cm / (two_pi * 10e-3), 0.47) * std::pow(184.0 / m, 0.49) *
           std::pow(0.2 / c.mass, 0.73) * std::pow(1e4 / c.quality_factor, 0.47) *
           std::pow(0.359 / c.resolved_omega_sn(), 1.96);
}

double pre_power_scaling(const ExperimentConfig& c) {
    const double m = c.resolved_atomic_mass() / amu;
    const double t = c.transmissivity / 1e-2;
    return 432e-3 * (1e4 / c.quality_factor) * std::pow(m / 184.0, 2.0 / 3.0) *
           std::pow(c.mass / 0.2, 2) * (c.omega_cm / (two_pi * 10e-3)) *
           std::pow(c.resolved_omega_sn() / 0.359, 2.0 / 3.0) * (ref_carrier / c.carrier_omega) * t * t;
}

double pre_height_scaling(const ExperimentConfig& c) {
    const double m = c.resolved_atomic_mass() / amu;
    return 8235.0 * std::pow(c.quality_factor / 1e4, 2) * std::pow(m / 184.0, 2.0 / 3.0) *
           (c.mass / 0.2) * std::pow(two_pi * 10e-3 / c.omega_cm, 2) *
           std::pow(c.resolved_omega_sn() / 0.359, 8.0 / 3.0) * (300.0 / c.temperature);
}

double post_tau_scaling(const ExperimentConfig& c) {
    return 13.0 * day * (1e7 / c.quality_factor) * (c.temperature / 1.0) *
           std::pow(0.488 / c.resolved_omega_sn(), 3) * (c.omega_cm / (two_pi * 4e-3));
}

double post_power_scaling(const ExperimentConfig& c) {
    const double t = c.transmissivity / 1e-2;
    return 4.8e-9 * (c.quality_factor / 1e7) * std::pow(1.0 / c.temperature, 2) *
           std::pow(c.mass / 0.2, 2) * (two_pi * 4e-3 / c.omega_cm) *
           std::pow(c.resolved_omega_sn() / 0.488, 4) * (ref_carrier / c.carrier_omega) * t * t;
}

namespace {

double beta_from_optics(const ExperimentConfig& c, const OscillatorConfig& osc) {
    const OpticalConfig opt{*c.input_power, c.transmissivity, c.carrier_omega};
    return beta(alpha_squared(opt), osc);
}

void common_flags(FeasibilityReport& r, const OscillatorConfig& osc, double fwhm) {
    r.flags.narrowband = fwhm <= 1e-2 * r.omega_q;
    r.flags.peak_separation = well_resolved(osc);
    r.flags.gamma_regime = osc.omega_cm <= osc.omega_sn / 10.0;
    if (!r.flags.narrowband) r.warnings.push_back("feature is not narrow compared with w_q");
    if (!r.flags.peak_separation) r.warnings.push_back("thermal peak at w_cm is not separated from w_q");
    if (!r.flags.gamma_regime) r.warnings.push_back("w_cm is not small compared with w_sn");
}

}  // namespace

FeasibilityReport pre_report(const ExperimentConfig& cfg) {
    validate(cfg);
    const OscillatorConfig osc = cfg.oscillator();
    FeasibilityReport r;
    r.regime = "pre";
    r.tau_min_scaled = pre_tau_scaling(cfg);
    r.input_power = pre_power_scaling(cfg);
    r.feature_amplitude = pre_height_scaling(cfg);
    r.omega_q = osc.omega_q();
    r.gamma_m = osc.gamma_m;
    r.gamma_sq = gamma_squared(osc);
    r.beta_limit = beta_limit(osc, cfg.resolved_delta_x_zp()).limit;
    if (cfg.beta) {
        r.beta_used = *cfg.beta;
    } else if (cfg.input_power) {
        r.beta_used = beta_from_optics(cfg, osc);
    } else {
        r.beta_used = r.beta_limit / 10.0;
    }
    r.closure_amplitude = pre_height(r.beta_used, r.gamma_sq);
    r.coherence_time = 1.0 / osc.gamma_m;

    r.flags.beta_limit_respected = r.beta_used <= r.beta_limit / 10.0 * (1.0 + 1e-9);
    if (!r.flags.beta_limit_respected) {
        r.warnings.push_back("beta exceeds one tenth of the linearization limit");
    }
    common_flags(r, osc, osc.gamma_m);
    r.flags.fit_valid = r.feature_amplitude > 10.0;
    if (!r.flags.fit_valid) r.warnings.push_back("peak height below about 10; fit not valid");
    const auto fit = fit_prediction(BasebandKind::Peak, r.closure_amplitude, osc.gamma_m, 0.1);
    r.tau_fit = fit.halved;
    return r;
}

BetaOpt post_beta_opt(double gamma_sq) {
    if (!(gamma_sq > 0.0)) throw DomainError("Gamma^2 must be positive");
    return {0.31 / gamma_sq, 0.1 / gamma_sq, 0.7 / gamma_sq, gamma_sq < 0.1};
}

FeasibilityReport post_report(const ExperimentConfig& cfg) {
    validate(cfg);
    const OscillatorConfig osc = cfg.oscillator();
    FeasibilityReport r;
    r.regime = "post";
    r.tau_min_scaled = post_tau_scaling(cfg);
    r.input_power = post_power_scaling(cfg);
    r.omega_q = osc.omega_q();
    r.gamma_m = osc.gamma_m;
    r.gamma_sq = gamma_squared(osc);
    r.beta_limit = beta_limit(osc, cfg.resolved_delta_x_zp()).limit;
    const BetaOpt opt = post_beta_opt(r.gamma_sq);
    r.beta_band_low = opt.band_low;
    r.beta_band_high = opt.band_high;
    if (cfg.beta) {
        r.beta_used = *cfg.beta;
    } else if (cfg.input_power) {
        r.beta_used = beta_from_optics(cfg, osc);
    } else {
        r.beta_used = opt.beta;
    }
    r.feature_amplitude = post_depth(r.beta_used, r.gamma_sq);
    r.closure_amplitude = r.feature_amplitude;
    const double fwhm = (r.beta_used + 1.0) * osc.gamma_m;
    r.coherence_time = 1.0 / fwhm;

    common_flags(r, osc, fwhm);
    if (!opt.in_regime) {
        r.flags.gamma_regime = false;
        r.warnings.push_back("Gamma^2 is not below 0.1");
    }
    r.flags.beta_limit_respected = r.beta_used <= r.beta_limit / 10.0 * (1.0 + 1e-9);
    r.flags.fit_valid = r.feature_amplitude < 0.9;
    if (!r.flags.fit_valid) r.warnings.push_back("dip depth close to 1; fit not valid");
    const auto fit = fit_prediction(BasebandKind::Dip, r.feature_amplitude, fwhm, cfg.confidence_p);
    r.tau_fit = fit.halved;
    return r;
}

BetaCurve optimize_beta(double gamma_sq, double gamma_m, double p, std::size_t points) {
    if (!(gamma_sq > 0.0)) throw DomainError("Gamma^2 must be positive");
    if (!(gamma_m > 0.0)) throw DomainError("gamma_m must be positive");
    if (points < 3) throw ConfigError("beta sweep needs at least 3 points");
    BetaCurve c;
    c.beta.reserve(points);
    c.tau.reserve(points);
    c.depth.reserve(points);
    const double lo = std::log(1e-2 / gamma_sq), hi = std::log(1e2 / gamma_sq);
    c.tau_min = INFINITY;
    for (std::size_t i = 0; i < points; ++i) {
        const double b = std::exp(lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(points - 1));
        const double d = post_depth(b, gamma_sq);
        const double t = fit_prediction(BasebandKind::Dip, d, (b + 1.0) * gamma_m, p).halved;
        c.beta.push_back(b);
        c.depth.push_back(d);
        c.tau.push_back(t);
        if (t < c.tau_min) {
            c.tau_min = t;
            c.beta_opt = b;
        }
    }
    return c;
}

}  // namespace semigrav
