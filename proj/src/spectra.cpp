#include "semigrav/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "semigrav/constants.hpp"
#include "semigrav/errors.hpp"
#include "semigrav/grid.hpp"

namespace semigrav {

using constants::hbar;

namespace {

constexpr double hbar_sq = hbar * hbar;

// Force-noise weight of the quantum drive (alpha a1 + f_zp): alpha^4/2 + alpha^2 S_fzp.
double quantum_drive(double omega, const SpectrumParams& p) {
    return 0.5 * p.alpha_sq * p.alpha_sq + p.alpha_sq * s_fzp(omega, p.osc);
}

double thermal_term(double omega, const SpectrumParams& p) {
    return p.alpha_sq / hbar_sq * s_x_th(omega, p.osc);
}

double excess(Prescription prescription, double omega, const SpectrumParams& p) {
    return spectrum(prescription, omega, p) / s_qm(omega, p) - 1.0;
}

}  // namespace

SpectrumParams SpectrumParams::from_beta(const OscillatorConfig& osc, double b) {
    return {osc, alpha_sq_for_beta(b, osc)};
}

double SpectrumParams::beta() const { return semigrav::beta(alpha_sq, osc); }

double SpectrumParams::gamma_sq() const { return gamma_squared(osc); }

Prescription parse_prescription(std::string_view text) {
    if (text == "qm" || text == "QM") return Prescription::QM;
    if (text == "pre" || text == "PRE") return Prescription::Pre;
    if (text == "post" || text == "POST") return Prescription::Post;
    throw NotFoundError("unknown prescription '" + std::string(text) + "'");
}

std::string_view to_string(Prescription p) {
    switch (p) {
        case Prescription::QM: return "qm";
        case Prescription::Pre: return "pre";
        case Prescription::Post: return "post";
    }
    return "?";
}

std::string_view to_string(FeatureKind k) { return k == FeatureKind::Peak ? "peak" : "dip"; }

double s_qm(double omega, const SpectrumParams& p) {
    return 0.5 + std::norm(g_c(omega, p.osc)) * quantum_drive(omega, p) / hbar_sq +
           thermal_term(omega, p);
}

double s_aa(double omega, const SpectrumParams& p) {
    return 0.5 + std::norm(g_q(omega, p.osc)) * quantum_drive(omega, p) / hbar_sq;
}

double s_pre_total(double omega, const SpectrumParams& p) {
    return s_aa(omega, p) + thermal_term(omega, p);
}

Complex k_filter(double omega, const SpectrumParams& p) {
    const Complex gq = g_q(omega, p.osc);
    const Complex s_ba = delta_g(omega, p.osc) * std::conj(gq) * quantum_drive(omega, p) / hbar_sq;
    return s_ba / s_aa(omega, p);
}

double s_post_total(double omega, const SpectrumParams& p) {
    // 1 + K = (S_AA + S_BA) / S_AA with S_AA + S_BA = 1/2 + conj(G_q) G_c W / hbar^2;
    // the combined numerator avoids cancellation in 1 + K when K ~ -1.
    const Complex gq = g_q(omega, p.osc);
    const double saa = s_aa(omega, p);
    const Complex numer = 0.5 + std::conj(gq) * g_c(omega, p.osc) * quantum_drive(omega, p) / hbar_sq;
    return std::norm(numer) / saa + thermal_term(omega, p);
}

double spectrum(Prescription prescription, double omega, const SpectrumParams& p) {
    switch (prescription) {
        case Prescription::QM: return s_qm(omega, p);
        case Prescription::Pre: return s_pre_total(omega, p);
        case Prescription::Post: return s_post_total(omega, p);
    }
    return s_qm(omega, p);
}

double pre_height(double beta, double gamma_sq) {
    return beta * (beta + 2.0) / (2.0 * (0.5 + beta * gamma_sq));
}

double post_depth(double beta, double gamma_sq) {
    return beta * (beta + 2.0) / (2.0 * (0.5 + beta * gamma_sq) * (beta + 1.0) * (beta + 1.0));
}

LorentzianFeature pre_feature(const SpectrumParams& p) {
    const double b = p.beta();
    const double g2 = p.gamma_sq();
    return {FeatureKind::Peak, p.osc.omega_q(), pre_height(b, g2), p.osc.gamma_m, 0.5 + b * g2};
}

LorentzianFeature post_feature(const SpectrumParams& p) {
    const double b = p.beta();
    const double g2 = p.gamma_sq();
    return {FeatureKind::Dip, p.osc.omega_q(), post_depth(b, g2), (b + 1.0) * p.osc.gamma_m,
            0.5 + b * g2};
}

double delta_x_cm(const SpectrumParams& p) {
    const double b = p.beta();
    return std::sqrt((b + 2.0) / 2.0 * hbar / (2.0 * p.osc.mass * p.osc.omega_q()));
}

BetaLimit beta_limit(const OscillatorConfig& osc, double dx_zp) {
    const double ground = hbar / (2.0 * osc.mass * osc.omega_q());
    const double limit = 2.0 * dx_zp * dx_zp / ground;
    return {limit, limit / 10.0};
}

bool well_resolved(const OscillatorConfig& osc) {
    return std::abs(osc.omega_q() - osc.omega_cm) > 10.0 * osc.gamma_m;
}

OutputSpectrum evaluate(Prescription prescription, const std::vector<double>& grid,
                        const SpectrumParams& p) {
    validate(p.osc);
    OutputSpectrum out{prescription, grid, {}, well_resolved(p.osc)};
    out.values.reserve(grid.size());
    for (double w : grid) out.values.push_back(spectrum(prescription, w, p));
    return out;
}

std::vector<double> default_grid(const SpectrumParams& p, std::size_t base_count,
                                 std::size_t refine_count) {
    const double wq = p.osc.omega_q();
    auto grid = make_grid({1e-3 * wq, 1e3 * wq, base_count, Spacing::Log});
    const double gm = p.osc.gamma_m;
    const double post_fwhm = (p.beta() + 1.0) * gm;
    if (p.osc.omega_cm > 0.0) refine_around(grid, p.osc.omega_cm, 20.0 * gm, refine_count);
    refine_around(grid, wq, 20.0 * gm, refine_count);
    refine_around(grid, wq, 20.0 * post_fwhm, refine_count);
    return grid;
}

double default_search_half_width(Prescription prescription, const SpectrumParams& p) {
    const double fwhm = prescription == Prescription::Post ? (p.beta() + 1.0) * p.osc.gamma_m
                                                           : p.osc.gamma_m;
    return 25.0 * fwhm;
}

ExtractedFeature extract_feature(Prescription prescription, const SpectrumParams& p,
                                 double half_width) {
    const double wq = p.osc.omega_q();
    const double lo = std::max(wq - half_width, 1e-6 * wq);
    const double hi = wq + half_width;
    constexpr std::size_t n = 4001;
    const double step = (hi - lo) / static_cast<double>(n - 1);

    auto mag = [&](double w) { return std::abs(excess(prescription, w, p)); };

    std::size_t best = 0;
    double best_val = -1.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double v = mag(lo + step * static_cast<double>(i));
        if (v > best_val) {
            best_val = v;
            best = i;
        }
    }
    if (best == 0 || best == n - 1 || !(best_val > 0.0)) return {};

    // Golden-section refinement of the extremum between the neighbouring samples.
    double a = lo + step * static_cast<double>(best - 1);
    double b = lo + step * static_cast<double>(best + 1);
    const double invphi = (std::sqrt(5.0) - 1.0) / 2.0;
    double c = b - invphi * (b - a);
    double d = a + invphi * (b - a);
    double fc = mag(c), fd = mag(d);
    for (int it = 0; it < 200 && (b - a) > 1e-14 * wq; ++it) {
        if (fc > fd) {
            b = d; d = c; fd = fc;
            c = b - invphi * (b - a); fc = mag(c);
        } else {
            a = c; c = d; fc = fd;
            d = a + invphi * (b - a); fd = mag(d);
        }
    }
    const double center = 0.5 * (a + b);
    const double amp = mag(center);
    const double half = 0.5 * amp;

    auto crossing = [&](double dir) -> double {
        double inside = center;
        double outside = center;
        double probe = step;
        while (true) {
            outside = center + dir * probe;
            if (outside <= lo - step || outside >= hi + step) return std::nan("");
            if (mag(outside) < half) break;
            inside = outside;
            probe *= 1.5;
        }
        for (int it = 0; it < 200 && std::abs(outside - inside) > 1e-14 * wq; ++it) {
            const double mid = 0.5 * (inside + outside);
            (mag(mid) >= half ? inside : outside) = mid;
        }
        return 0.5 * (inside + outside);
    };

    const double left = crossing(-1.0);
    const double right = crossing(+1.0);
    if (std::isnan(left) || std::isnan(right)) return {};
    return {true, center, amp, right - left};
}

}  // namespace semigrav
