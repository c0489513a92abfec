#include <doctest.h>

#include "approx.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "semigrav/constants.hpp"
#include "semigrav/detect.hpp"
#include "semigrav/errors.hpp"
#include "semigrav/feasibility.hpp"
#include "semigrav/spectra.hpp"

using namespace semigrav;
namespace k = semigrav::constants;

namespace {
constexpr double hour = 3600.0;
constexpr double day = 86400.0;
}  // namespace

TEST_CASE("pre-selection anchors") {
    const ExperimentConfig c = ExperimentConfig::pre_reference();
    CHECK(pre_tau_scaling(c) == approx(1.6 * hour).epsilon(1e-12));
    CHECK(pre_power_scaling(c) == approx(432e-3).epsilon(1e-12));
    CHECK(pre_height_scaling(c) == approx(8235.0).epsilon(1e-12));
    const FeasibilityReport r = pre_report(c);
    CHECK(r.tau_min_scaled == approx(1.6 * hour).epsilon(0.01));
    CHECK(r.input_power == approx(0.432).epsilon(0.01));
    CHECK(r.feature_amplitude == approx(8235.0).epsilon(0.01));
    CHECK(r.regime == "pre");
    CHECK(r.beta_used == approx(r.beta_limit / 10.0).epsilon(1e-12));
    CHECK(r.flags.beta_limit_respected);
    CHECK(r.flags.fit_valid);
    CHECK(r.flags.peak_separation);
    CHECK(r.coherence_time == approx(1.0 / r.gamma_m));
}

TEST_CASE("pre-selection exponents") {
    const ExperimentConfig c = ExperimentConfig::pre_reference();
    ExperimentConfig q = c;
    q.quality_factor *= 100.0;
    CHECK(pre_height_scaling(q) / pre_height_scaling(c) == approx(1e4).epsilon(1e-12));
    ExperimentConfig t = c;
    t.temperature /= 2.0;
    CHECK(pre_tau_scaling(t) / pre_tau_scaling(c) == approx(std::pow(0.5, 0.73)).epsilon(1e-12));
    ExperimentConfig w = c;
    w.omega_sn = 2.0 * 0.359;
    CHECK(pre_tau_scaling(w) / pre_tau_scaling(c) == approx(std::pow(2.0, -1.96)).epsilon(1e-12));
    ExperimentConfig m = c;
    m.mass = 0.8;
    CHECK(pre_power_scaling(m) / pre_power_scaling(c) == approx(16.0).epsilon(1e-12));
    CHECK(pre_tau_scaling(m) / pre_tau_scaling(c) == approx(std::pow(4.0, -0.73)).epsilon(1e-12));
    ExperimentConfig tr = c;
    tr.transmissivity = 2e-2;
    CHECK(pre_power_scaling(tr) / pre_power_scaling(c) == approx(4.0).epsilon(1e-12));
}

TEST_CASE("beta limit flag") {
    ExperimentConfig c = ExperimentConfig::pre_reference();
    const double limit = pre_report(c).beta_limit;
    c.beta = 0.2 * limit;
    const FeasibilityReport over = pre_report(c);
    CHECK_FALSE(over.flags.beta_limit_respected);
    CHECK_FALSE(over.warnings.empty());
    c.beta = 0.05 * limit;
    CHECK(pre_report(c).flags.beta_limit_respected);

    // Regime flags: w_cm comparable to w_sn.
    ExperimentConfig fast = ExperimentConfig::pre_reference();
    fast.omega_cm = 0.2;
    CHECK_FALSE(pre_report(fast).flags.gamma_regime);
    ExperimentConfig low = ExperimentConfig::pre_reference();
    low.quality_factor = 10.0;
    CHECK_FALSE(pre_report(low).flags.fit_valid);
}

TEST_CASE("post-selection anchors") {
    const ExperimentConfig c = ExperimentConfig::post_reference();
    CHECK(post_tau_scaling(c) == approx(13.0 * day).epsilon(1e-12));
    CHECK(post_power_scaling(c) == approx(4.8e-9).epsilon(1e-12));
    const FeasibilityReport r = post_report(c);
    CHECK(r.tau_min_scaled == approx(13.0 * day).epsilon(0.05));
    CHECK(r.input_power == approx(4.8e-9).epsilon(0.05));
    CHECK(r.coherence_time == approx(5.0 * hour).epsilon(0.05));
    CHECK(r.gamma_sq < 0.1);
    CHECK(r.beta_used == approx(0.31 / r.gamma_sq).epsilon(1e-12));
    CHECK(r.feature_amplitude == approx(0.62).epsilon(0.02 / 0.62));
    CHECK(r.beta_band_low == approx(0.1 / r.gamma_sq));
    CHECK(r.beta_band_high == approx(0.7 / r.gamma_sq));
    CHECK(r.flags.gamma_regime);
    CHECK(r.flags.narrowband);

    ExperimentConfig q = c;
    q.quality_factor *= 10.0;
    CHECK(post_tau_scaling(q) / post_tau_scaling(c) == approx(0.1).epsilon(1e-12));
    ExperimentConfig w = c;
    w.omega_sn = 2.0 * 0.488;
    CHECK(post_tau_scaling(w) / post_tau_scaling(c) == approx(1.0 / 8.0).epsilon(1e-12));
}

TEST_CASE("optimal measurement strength") {
    CHECK(post_beta_opt(0.031).beta == approx(10.0).epsilon(1e-12));
    CHECK_FALSE(post_beta_opt(0.2).in_regime);
    CHECK(post_beta_opt(0.05).in_regime);
    CHECK_THROWS_AS(post_beta_opt(0.0), DomainError);
    for (double g2 : {1e-3, 1e-5, 1e-7}) {
        CHECK(post_depth(post_beta_opt(g2).beta, g2) == approx(0.62).epsilon(0.02 / 0.62));
    }
    // Through the full spectra at a narrowband configuration.
    const ExperimentConfig c = ExperimentConfig::post_reference();
    const OscillatorConfig osc = c.oscillator();
    const SpectrumParams p = SpectrumParams::from_beta(osc, post_beta_opt(gamma_squared(osc)).beta);
    CHECK(post_feature(p).amplitude == approx(0.62).epsilon(0.02 / 0.62));

    // Minimum time at beta_opt through the dip fit: about 200 Gamma^2 / gamma_m.
    const double gm = osc.gamma_m, g2 = gamma_squared(osc);
    const double b = post_beta_opt(g2).beta;
    const double t = fit_prediction(BasebandKind::Dip, post_depth(b, g2), (b + 1.0) * gm, 0.1).halved;
    CHECK(t == approx(200.0 * g2 / gm).epsilon(0.15));
}

TEST_CASE("beta sweep") {
    const double gm = 1e-6;
    for (double g2 : {0.01, 0.05}) {
        const BetaCurve c = optimize_beta(g2, gm, 0.1);
        CHECK(c.beta_opt >= 0.1 / g2);
        CHECK(c.beta_opt <= 0.7 / g2);
        CHECK(c.tau_min <= 225.0 * g2 / gm);
        CHECK(c.beta.front() == approx(1e-2 / g2));
        CHECK(c.beta.back() == approx(1e2 / g2));
        // Unimodal in log beta: decreasing then increasing.
        const auto it = std::min_element(c.tau.begin(), c.tau.end());
        for (auto p = c.tau.begin(); p + 1 <= it; ++p) CHECK(*(p + 1) <= *p);
        for (auto p = it; p + 1 != c.tau.end(); ++p) CHECK(*(p + 1) >= *p);
        // Soft minimum: the near-optimal band stays within a factor 1.6 of the minimum.
        for (std::size_t i = 0; i < c.beta.size(); ++i) {
            if (c.beta[i] >= 0.1 / g2 && c.beta[i] <= 0.7 / g2) CHECK(c.tau[i] <= 1.6 * c.tau_min);
        }
    }
    const double ratio = optimize_beta(0.05, gm, 0.1).tau_min / optimize_beta(0.025, gm, 0.1).tau_min;
    CHECK(ratio == approx(2.0).epsilon(0.05));
    CHECK_THROWS_AS(optimize_beta(0.01, gm, 0.1, 2), ConfigError);
}

TEST_CASE("scaling law and fit agree across the regime") {
    std::mt19937_64 rng(12);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    int tested = 0;
    for (int i = 0; i < 200; ++i) {
        ExperimentConfig c = ExperimentConfig::post_reference();
        c.quality_factor = std::pow(10.0, 6.0 + 2.0 * u(rng));
        c.temperature = std::pow(10.0, -1.0 + 1.5 * u(rng));
        c.omega_sn = 0.2 + 0.4 * u(rng);
        c.omega_cm = k::two_pi * (1e-3 + 5e-3 * u(rng));
        const OscillatorConfig osc = c.oscillator();
        if (gamma_squared(osc) >= 0.1 || osc.omega_cm > osc.omega_sn / 10.0) continue;
        const FeasibilityReport r = post_report(c);
        const double fwhm = (r.beta_used + 1.0) * osc.gamma_m;
        const double fit = fit_prediction(BasebandKind::Dip, post_depth(r.beta_used, r.gamma_sq), fwhm, 0.1).halved;
        CHECK(r.tau_min_scaled == approx(fit).epsilon(0.20));
        CHECK(r.tau_fit == approx(fit).epsilon(1e-12));
        ++tested;
    }
    CHECK(tested > 100);
}

TEST_CASE("configuration validation") {
    ExperimentConfig c = ExperimentConfig::pre_reference();
    c.mass = 0.0;
    CHECK_THROWS_AS(pre_report(c), DomainError);
    c = ExperimentConfig::pre_reference();
    c.material = "Xx";
    CHECK_THROWS_AS(pre_report(c), NotFoundError);
    c = ExperimentConfig::post_reference();
    c.confidence_p = 0.7;
    CHECK_THROWS_AS(post_report(c), ConfigError);
    c = ExperimentConfig::post_reference();
    c.input_power = 4.8e-9;
    c.carrier_omega = k::two_pi * 200e12;
    // Optics route at the 200 THz carrier lands near the optimal strength.
    const FeasibilityReport r = post_report(c);
    CHECK(r.beta_used == approx(0.31 / r.gamma_sq).epsilon(0.05));
}
