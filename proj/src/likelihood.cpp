#include "semigrav/likelihood.hpp"

#include <cmath>

#include "semigrav/constants.hpp"
#include "semigrav/errors.hpp"
#include "semigrav/fft.hpp"

namespace semigrav {

namespace {
const double log_two_pi = std::log(constants::two_pi);
}

GaussianLikelihood::GaussianLikelihood(const BasebandModel& model, double dt)
    : model_(model), dt_(dt) {
    validate(model);
    if (!(dt > 0.0)) throw ConfigError("dt must be positive");
    phi_ = model.kind == BasebandKind::Flat ? 0.0 : std::exp(-model.fwhm * dt / 2.0);
    weight_ = lorentzian_autocovariance(model, 0.0);
}

double GaussianLikelihood::operator()(const std::vector<double>& x) const {
    if (weight_ == 0.0) return log_likelihood_flat(x, dt_);
    const double r = 1.0 / dt_;
    const double phi2 = phi_ * phi_;
    double mean = 0.0;
    double var = weight_;
    double ll = 0.0;
    for (const double xi : x) {
        const double f = var + r;
        if (!(f > 0.0)) throw DomainError("covariance is not positive definite");
        const double e = xi - mean;
        ll -= 0.5 * (log_two_pi + std::log(f) + e * e / f);
        const double gain = var / f;
        mean += gain * e;
        var -= gain * var;
        mean *= phi_;
        var = phi2 * var + weight_ * (1.0 - phi2);
    }
    return ll;
}

double GaussianLikelihood::evaluate(const BasebandSeries& s) const {
    if (std::abs(s.dt - dt_) > 1e-12 * dt_) {
        throw ConfigError("series dt does not match the likelihood dt");
    }
    return (*this)(s.samples);
}

double log_likelihood(const BasebandSeries& s, const BasebandModel& model) {
    return GaussianLikelihood(model, s.dt).evaluate(s);
}

double log_likelihood_flat(const std::vector<double>& x, double dt) {
    double ss = 0.0;
    for (const double v : x) ss += v * v;
    const double n = static_cast<double>(x.size());
    return -0.5 * n * std::log(constants::two_pi / dt) - 0.5 * dt * ss;
}

double log_likelihood_levinson(const std::vector<double>& x, const std::vector<double>& acov) {
    const std::size_t n = x.size();
    if (acov.size() < n) throw ConfigError("autocovariance shorter than the record");
    if (n == 0) return 0.0;
    std::vector<double> phi(n, 0.0), prev(n, 0.0);
    double v = acov[0];
    double ll = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
        if (!(v > 0.0)) throw DomainError("covariance is not positive definite");
        double pred = 0.0;
        for (std::size_t j = 1; j <= k; ++j) pred += phi[j] * x[k - j];
        const double e = x[k] - pred;
        ll -= 0.5 * (log_two_pi + std::log(v) + e * e / v);
        if (k + 1 == n) break;
        // Extend the predictor to order k + 1.
        double num = acov[k + 1];
        for (std::size_t j = 1; j <= k; ++j) num -= phi[j] * acov[k + 1 - j];
        const double refl = num / v;
        prev = phi;
        phi[k + 1] = refl;
        for (std::size_t j = 1; j <= k; ++j) phi[j] = prev[j] - refl * prev[k + 1 - j];
        v *= 1.0 - refl * refl;
    }
    return ll;
}

double log_likelihood_whittle(const std::vector<double>& x, const BasebandModel& model, double dt) {
    validate(model);
    const std::size_t n = x.size();
    if (n == 0) return 0.0;
    const std::vector<std::complex<double>> c(x.begin(), x.end());
    const auto spec = fft_forward(c);
    const double weight = lorentzian_autocovariance(model, 0.0);
    const double phi = model.kind == BasebandKind::Flat ? 0.0 : std::exp(-model.fwhm * dt / 2.0);
    double ll = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
        const double theta = constants::two_pi * static_cast<double>(k) / static_cast<double>(n);
        // Spectral density of the sampled covariance sequence.
        const double denom = 1.0 - 2.0 * phi * std::cos(theta) + phi * phi;
        const double f = 1.0 / dt + weight * (1.0 - phi * phi) / denom;
        if (!(f > 0.0)) throw DomainError("spectrum is not positive");
        const double per = std::norm(spec[k]) / static_cast<double>(n);
        ll -= 0.5 * (log_two_pi + std::log(f) + per / f);
    }
    return ll;
}

}  // namespace semigrav
