#pragma once

#include <complex>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace semigrav {

enum class BasebandKind { Flat, Peak, Dip };

BasebandKind parse_baseband_kind(std::string_view text);
std::string_view to_string(BasebandKind k);

/// Double-sided baseband spectrum S(w) = 1 +- amplitude / (1 + 4 w^2 / fwhm^2).
struct BasebandModel {
    BasebandKind kind = BasebandKind::Flat;
    double amplitude = 0.0;  // h for a peak, d for a dip
    double fwhm = 1.0;       // rad/s

    static BasebandModel flat() { return {}; }
    static BasebandModel peak(double h, double fwhm) { return {BasebandKind::Peak, h, fwhm}; }
    static BasebandModel dip(double d, double fwhm) { return {BasebandKind::Dip, d, fwhm}; }

    /// +h, -d or 0.
    double signed_amplitude() const;
    double spectrum(double omega) const;
    std::string tag() const;
};

/// Throws DomainError for a negative amplitude, a dip with d >= 1 or a
/// non-positive width.
void validate(const BasebandModel& m);

/// Lorentzian part of the autocovariance, +-(a fwhm / 4) exp(-fwhm |lag| / 2).
double lorentzian_autocovariance(const BasebandModel& m, double lag);

/// Sampled autocovariance: the white part contributes 1/dt at zero lag.
double target_autocovariance(const BasebandModel& m, double lag, double dt);

/// First row of the n x n Toeplitz covariance of a record sampled at dt.
std::vector<double> toeplitz_autocovariance(const BasebandModel& m, std::size_t n, double dt);

struct BasebandSeries {
    double dt = 0.0;
    std::vector<double> samples;
    std::uint64_t seed = 0;
    std::string model_tag;
};

/// Exact sampler for a fixed (model, n, dt) by circulant embedding of the
/// Toeplitz covariance (Davies-Harte) with a real Hermitian spectrum. The
/// embedding eigenvalues are computed once; generate() is const and may be
/// called from several threads.
class BasebandGenerator {
public:
    BasebandGenerator(const BasebandModel& model, std::size_t n, double dt);

    std::size_t size() const { return n_; }
    double dt() const { return dt_; }
    const BasebandModel& model() const { return model_; }

    BasebandSeries generate(std::uint64_t seed) const;
    void generate_into(std::uint64_t seed, std::vector<double>& out) const;

private:
    BasebandModel model_;
    std::size_t n_;
    double dt_;
    std::size_t m_ = 0;          // embedding size
    std::vector<double> scale_;  // per Hermitian bin of the embedding
};

/// Number of samples for a record: max(2, round(duration / dt)).
std::size_t sample_count(double duration, double dt);

/// Seeded record with the resolution preconditions dt * fwhm <= 0.5 and
/// duration >= 10 / fwhm (not applied to the flat model). Violations throw
/// ConfigError.
BasebandSeries gen_baseband(const BasebandModel& model, double duration, double dt,
                            std::uint64_t seed);

/// Cross-check sampler: dense Cholesky factor of the Toeplitz covariance.
/// Limited to n <= 4000.
BasebandSeries gen_baseband_dense(const BasebandModel& model, std::size_t n, double dt,
                                  std::uint64_t seed);

/// Real record of n samples with an arbitrary even double-sided spectrum,
/// synthesized from independent Fourier bins (periodic in n dt).
std::vector<double> gen_from_spectrum(const std::function<double(double)>& spectrum,
                                      std::size_t n, double dt, std::uint64_t seed);

/// Band [center - halfwidth, center + halfwidth] kept during demodulation.
struct DemodConfig {
    double center = 0.0;     // rad/s, normally w_q
    double halfwidth = 0.0;  // rad/s
};

/// Requires 0 < halfwidth and center - halfwidth > guard_low.
void validate(const DemodConfig& cfg, double guard_low = 0.0);

/// min(20 fwhm, (w_q - w_cm) / 4).
double default_demod_halfwidth(double feature_fwhm, double omega_q, double omega_cm);

/// Shifts the positive-frequency band to baseband:
///   xi(t) = sqrt(2) exp(-i center t) * (inverse transform of the band).
/// The sqrt(2) makes each quadrature carry the original spectral level.
/// Throws ConfigError if the band crosses zero or the Nyquist frequency.
std::vector<std::complex<double>> demodulate(const std::vector<double>& record, double dt,
                                             const DemodConfig& cfg);

/// Real and imaginary parts of a complex baseband record.
std::pair<BasebandSeries, BasebandSeries> quadratures(
    const std::vector<std::complex<double>>& xi, double dt, std::uint64_t seed = 0,
    const std::string& tag = "");

/// Empirical autocovariance (biased, divided by n) for lags 0..max_lag.
std::vector<double> empirical_autocovariance(const std::vector<double>& x, std::size_t max_lag);

struct Periodogram {
    std::vector<double> omega;  // rad/s
    std::vector<double> power;  // double-sided density estimate
};

/// dt / n |X_k|^2 at the non-negative frequencies of a real record.
Periodogram periodogram(const std::vector<double>& x, double dt);

/// Same for a complex record, all n bins ordered by signed frequency.
Periodogram periodogram(const std::vector<std::complex<double>>& x, double dt);

/// Average of periodograms over non-overlapping segments of length `segment`.
Periodogram welch(const std::vector<double>& x, double dt, std::size_t segment);

}  // namespace semigrav
