#pragma once

#include <vector>

#include "semigrav/synth.hpp"

namespace semigrav {

/// Exact zero-mean Gaussian log-likelihood of a record sampled at dt under a
/// baseband model. The covariance is white (1/dt) plus an exponential
/// Lorentzian part, i.e. an AR(1) state observed in white noise, so the exact
/// value follows from a scalar Kalman recursion in O(n). The recursion stays
/// exact for the negative Lorentzian weight of a dip because only the
/// innovation variances have to be positive.
class GaussianLikelihood {
public:
    GaussianLikelihood(const BasebandModel& model, double dt);

    const BasebandModel& model() const { return model_; }
    double dt() const { return dt_; }

    double operator()(const std::vector<double>& x) const;

    /// Checks that the series was sampled at this dt (ConfigError otherwise).
    double evaluate(const BasebandSeries& s) const;

private:
    BasebandModel model_;
    double dt_;
    double phi_;     // exp(-fwhm dt / 2)
    double weight_;  // +-a fwhm / 4
};

double log_likelihood(const BasebandSeries& s, const BasebandModel& model);

/// Closed form for the flat model: -(n/2) ln(2 pi / dt) - (dt/2) sum x^2.
double log_likelihood_flat(const std::vector<double>& x, double dt);

/// Generic route for any symmetric Toeplitz covariance (first row `acov`)
/// through the Durbin-Levinson recursion; O(n^2).
double log_likelihood_levinson(const std::vector<double>& x, const std::vector<double>& acov);

/// Whittle approximation on the n Fourier frequencies of the record.
double log_likelihood_whittle(const std::vector<double>& x, const BasebandModel& model, double dt);

}  // namespace semigrav
