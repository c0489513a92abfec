#pragma once

#include <string_view>
#include <vector>

#include "semigrav/response.hpp"

namespace semigrav {

/// Oscillator plus optical coupling; everything the output spectra depend on.
struct SpectrumParams {
    OscillatorConfig osc;
    double alpha_sq = 0.0;

    static SpectrumParams from_beta(const OscillatorConfig& osc, double beta);
    double beta() const;
    double gamma_sq() const;
};

enum class Prescription { QM, Pre, Post };

Prescription parse_prescription(std::string_view text);
std::string_view to_string(Prescription p);

// Output phase-quadrature spectra, normalized so that shot noise is 1/2.

/// Standard quantum mechanics: shot noise, radiation pressure, zero-point and
/// classical thermal motion, all through G_c.
double s_qm(double omega, const SpectrumParams& p);

/// Spectrum of the linear quantum part of the output, through G_q.
double s_aa(double omega, const SpectrumParams& p);

double s_pre_total(double omega, const SpectrumParams& p);

/// Wiener projection K = S_BA / S_AA of the nonlinear part onto the linear part.
Complex k_filter(double omega, const SpectrumParams& p);

double s_post_total(double omega, const SpectrumParams& p);

double spectrum(Prescription prescription, double omega, const SpectrumParams& p);

enum class FeatureKind { Peak, Dip };

std::string_view to_string(FeatureKind k);

/// Narrowband Lorentzian signature relative to the local baseline:
/// S ~ baseline * (1 +- amplitude / (1 + 4 (w - center)^2 / fwhm^2)).
struct LorentzianFeature {
    FeatureKind kind = FeatureKind::Peak;
    double center = 0.0;
    double amplitude = 0.0;
    double fwhm = 0.0;
    double baseline = 0.0;
};

double pre_height(double beta, double gamma_sq);
double post_depth(double beta, double gamma_sq);

LorentzianFeature pre_feature(const SpectrumParams& p);
LorentzianFeature post_feature(const SpectrumParams& p);

/// Steady-state center-of-mass spread over the input vacuum.
double delta_x_cm(const SpectrumParams& p);

struct BetaLimit {
    double limit = 0.0;        // 2 dx_zp^2 / (hbar / 2 M w_q)
    double recommended = 0.0;  // limit / 10
};

BetaLimit beta_limit(const OscillatorConfig& osc, double delta_x_zp);

/// Thermal peak at w_cm separated from the signatures at w_q by more than 10 gamma_m.
bool well_resolved(const OscillatorConfig& osc);

struct OutputSpectrum {
    Prescription prescription = Prescription::QM;
    std::vector<double> grid;
    std::vector<double> values;
    bool well_resolved = false;
};

OutputSpectrum evaluate(Prescription prescription, const std::vector<double>& grid,
                        const SpectrumParams& p);

/// Log grid spanning 1e-3..1e3 w_q with dense linear refinement of +-20 FWHM
/// around w_cm and w_q.
std::vector<double> default_grid(const SpectrumParams& p, std::size_t base_count = 2000,
                                 std::size_t refine_count = 801);

/// Feature measured directly on the full spectrum as the relative excess
/// s(w) / s_qm(w) - 1 near w_q.
struct ExtractedFeature {
    bool found = false;
    double center = 0.0;
    double amplitude = 0.0;  // |excess| at the extremum
    double fwhm = 0.0;
};

ExtractedFeature extract_feature(Prescription prescription, const SpectrumParams& p,
                                 double search_half_width);

/// Search window wide enough for the expected feature width (25 FWHM).
double default_search_half_width(Prescription prescription, const SpectrumParams& p);

}  // namespace semigrav
