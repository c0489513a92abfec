#include "semigrav/synth.hpp"

#include <Eigen/Cholesky>
#include <Eigen/Dense>
#include <algorithm>
#include <cctype>
#include <cmath>
#include <memory>
#include <sstream>

#include "semigrav/constants.hpp"
#include "semigrav/errors.hpp"
#include "semigrav/fft.hpp"
#include "semigrav/rng.hpp"

namespace semigrav {

using cplx = std::complex<double>;

BasebandKind parse_baseband_kind(std::string_view text) {
    std::string s(text);
    std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return std::tolower(c); });
    if (s == "flat" || s == "white") return BasebandKind::Flat;
    if (s == "peak") return BasebandKind::Peak;
    if (s == "dip") return BasebandKind::Dip;
    throw ConfigError("unknown baseband model '" + std::string(text) + "' (flat|peak|dip)");
}

std::string_view to_string(BasebandKind k) {
    switch (k) {
        case BasebandKind::Flat: return "flat";
        case BasebandKind::Peak: return "peak";
        case BasebandKind::Dip: return "dip";
    }
    return "?";
}

double BasebandModel::signed_amplitude() const {
    switch (kind) {
        case BasebandKind::Flat: return 0.0;
        case BasebandKind::Peak: return amplitude;
        case BasebandKind::Dip: return -amplitude;
    }
    return 0.0;
}

double BasebandModel::spectrum(double omega) const {
    const double u = 2.0 * omega / fwhm;
    return 1.0 + signed_amplitude() / (1.0 + u * u);
}

std::string BasebandModel::tag() const {
    std::ostringstream os;
    os << to_string(kind);
    if (kind != BasebandKind::Flat) os << "(a=" << amplitude << ",fwhm=" << fwhm << ")";
    return os.str();
}

void validate(const BasebandModel& m) {
    if (!(m.amplitude >= 0.0)) throw DomainError("baseband amplitude must be non-negative");
    if (m.kind == BasebandKind::Flat) return;
    if (!(m.fwhm > 0.0)) throw DomainError("baseband fwhm must be positive");
    if (m.kind == BasebandKind::Dip && m.amplitude >= 1.0) {
        throw DomainError("dip depth must be below 1; the spectrum would not be positive");
    }
}

double lorentzian_autocovariance(const BasebandModel& m, double lag) {
    if (m.kind == BasebandKind::Flat) return 0.0;
    return m.signed_amplitude() * m.fwhm / 4.0 * std::exp(-m.fwhm * std::abs(lag) / 2.0);
}

double target_autocovariance(const BasebandModel& m, double lag, double dt) {
    const double white = std::abs(lag) < 0.5 * dt ? 1.0 / dt : 0.0;
    return white + lorentzian_autocovariance(m, lag);
}

std::vector<double> toeplitz_autocovariance(const BasebandModel& m, std::size_t n, double dt) {
    std::vector<double> c(n);
    for (std::size_t k = 0; k < n; ++k) c[k] = lorentzian_autocovariance(m, static_cast<double>(k) * dt);
    if (n > 0) c[0] += 1.0 / dt;
    return c;
}

BasebandGenerator::BasebandGenerator(const BasebandModel& model, std::size_t n, double dt)
    : model_(model), n_(n), dt_(dt) {
    validate(model);
    if (n < 2) throw ConfigError("a baseband record needs at least 2 samples");
    if (!(dt > 0.0)) throw ConfigError("dt must be positive");
    // Even, FFT-friendly embedding size m >= 2 (n - 1); the circulant row uses
    // the true covariance out to lag m / 2, so the leading n x n block is exact.
    std::size_t m = next_fast_size(2 * (n - 1));
    while (m % 2 != 0) m = next_fast_size(m + 1);
    std::vector<cplx> row(m);
    for (std::size_t k = 0; k < m; ++k) {
        const std::size_t lag = std::min(k, m - k);
        row[k] = target_autocovariance(model, static_cast<double>(lag) * dt, dt);
    }
    const auto lambda = fft_forward(row);
    double lmax = 0.0;
    for (const auto& l : lambda) lmax = std::max(lmax, l.real());
    m_ = m;
    scale_.resize(m / 2 + 1);
    for (std::size_t k = 0; k <= m / 2; ++k) {
        const double l = lambda[k].real();
        if (l < -1e-10 * lmax) {
            throw DomainError("circulant embedding is not non-negative definite");
        }
        const bool self_conjugate = k == 0 || k == m / 2;
        scale_[k] = std::sqrt(std::max(l, 0.0) / (self_conjugate ? m : 2.0 * m));
    }
}

void BasebandGenerator::generate_into(std::uint64_t seed, std::vector<double>& out) const {
    // One plan per thread, rebuilt only when the size changes.
    thread_local std::unique_ptr<HermitianPlan> plan;
    if (!plan || plan->size() != m_) plan = std::make_unique<HermitianPlan>(m_);
    NormalStream rng(seed);
    cplx* in = plan->input();
    const std::size_t half = m_ / 2;
    in[0] = cplx(scale_[0] * rng.next(), 0.0);
    for (std::size_t k = 1; k < half; ++k) {
        const double re = rng.next();
        const double im = rng.next();
        in[k] = cplx(re, im) * scale_[k];
    }
    in[half] = cplx(scale_[half] * rng.next(), 0.0);
    plan->execute();
    out.assign(plan->output(), plan->output() + n_);
}

BasebandSeries BasebandGenerator::generate(std::uint64_t seed) const {
    BasebandSeries s;
    s.dt = dt_;
    s.seed = seed;
    s.model_tag = model_.tag();
    generate_into(seed, s.samples);
    return s;
}

std::size_t sample_count(double duration, double dt) {
    if (!(dt > 0.0)) throw ConfigError("dt must be positive");
    if (!(duration > 0.0)) throw ConfigError("duration must be positive");
    return std::max<std::size_t>(2, static_cast<std::size_t>(std::llround(duration / dt)));
}

BasebandSeries gen_baseband(const BasebandModel& model, double duration, double dt,
                            std::uint64_t seed) {
    validate(model);
    if (model.kind != BasebandKind::Flat) {
        if (dt * model.fwhm > 0.5) throw ConfigError("dt * fwhm must not exceed 0.5");
        if (duration * model.fwhm < 10.0) throw ConfigError("duration must be at least 10 / fwhm");
    }
    return BasebandGenerator(model, sample_count(duration, dt), dt).generate(seed);
}

BasebandSeries gen_baseband_dense(const BasebandModel& model, std::size_t n, double dt,
                                  std::uint64_t seed) {
    validate(model);
    if (n < 2 || n > 4000) throw ConfigError("dense sampler supports 2 <= n <= 4000");
    const auto c = toeplitz_autocovariance(model, n, dt);
    Eigen::MatrixXd cov(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) cov(i, j) = c[i > j ? i - j : j - i];
    Eigen::LLT<Eigen::MatrixXd> llt(cov);
    if (llt.info() != Eigen::Success) throw DomainError("covariance is not positive definite");
    Eigen::VectorXd z(n);
    NormalStream rng(seed);
    for (std::size_t i = 0; i < n; ++i) z[i] = rng.next();
    const Eigen::VectorXd x = llt.matrixL() * z;
    BasebandSeries s;
    s.dt = dt;
    s.seed = seed;
    s.model_tag = model.tag();
    s.samples.assign(x.data(), x.data() + n);
    return s;
}

namespace {
double bin_omega(std::size_t k, std::size_t n, double dt) {
    const double kk = k <= n / 2 ? static_cast<double>(k) : static_cast<double>(k) - static_cast<double>(n);
    return constants::two_pi * kk / (static_cast<double>(n) * dt);
}
}  // namespace

std::vector<double> gen_from_spectrum(const std::function<double(double)>& spectrum,
                                      std::size_t n, double dt, std::uint64_t seed) {
    if (n < 2) throw ConfigError("a record needs at least 2 samples");
    if (!(dt > 0.0)) throw ConfigError("dt must be positive");
    FftPlan plan(n, FftPlan::Direction::Forward);
    NormalStream rng(seed);
    const double norm = 1.0 / (static_cast<double>(n) * dt);
    for (std::size_t k = 0; k < n; ++k) {
        const double s = spectrum(bin_omega(k, n, dt));
        if (!(s >= 0.0)) throw DomainError("spectrum must be non-negative");
        const double re = rng.next();
        const double im = rng.next();
        plan.data()[k] = cplx(re, im) * std::sqrt(s * norm);
    }
    plan.execute();
    std::vector<double> x(n);
    for (std::size_t j = 0; j < n; ++j) x[j] = plan.data()[j].real();
    return x;
}

void validate(const DemodConfig& cfg, double guard_low) {
    if (!(cfg.halfwidth > 0.0)) throw ConfigError("demodulation half-width must be positive");
    if (!(cfg.center - cfg.halfwidth > guard_low)) {
        throw ConfigError("demodulation band reaches below the guard frequency");
    }
}

double default_demod_halfwidth(double feature_fwhm, double omega_q, double omega_cm) {
    return std::min(20.0 * feature_fwhm, (omega_q - omega_cm) / 4.0);
}

std::vector<cplx> demodulate(const std::vector<double>& record, double dt, const DemodConfig& cfg) {
    validate(cfg);
    const double nyquist = constants::pi / dt;
    if (cfg.center + cfg.halfwidth >= nyquist) {
        throw ConfigError("demodulation band exceeds the Nyquist frequency");
    }
    const std::size_t n = record.size();
    if (n < 2) throw ConfigError("a record needs at least 2 samples");
    std::vector<cplx> spec(record.begin(), record.end());
    spec = fft_forward(spec);
    for (std::size_t k = 0; k < n; ++k) {
        const double w = bin_omega(k, n, dt);
        if (w < cfg.center - cfg.halfwidth || w > cfg.center + cfg.halfwidth) spec[k] = 0.0;
    }
    auto y = fft_backward(spec);
    const double scale = std::sqrt(2.0) / static_cast<double>(n);
    for (std::size_t j = 0; j < n; ++j) {
        const double t = static_cast<double>(j) * dt;
        y[j] *= scale * std::polar(1.0, -cfg.center * t);
    }
    return y;
}

std::pair<BasebandSeries, BasebandSeries> quadratures(const std::vector<cplx>& xi, double dt,
                                                      std::uint64_t seed, const std::string& tag) {
    BasebandSeries c{dt, {}, seed, tag.empty() ? "xi_c" : tag + ":c"};
    BasebandSeries s{dt, {}, seed, tag.empty() ? "xi_s" : tag + ":s"};
    c.samples.reserve(xi.size());
    s.samples.reserve(xi.size());
    for (const auto& z : xi) {
        c.samples.push_back(z.real());
        s.samples.push_back(z.imag());
    }
    return {std::move(c), std::move(s)};
}

std::vector<double> empirical_autocovariance(const std::vector<double>& x, std::size_t max_lag) {
    const std::size_t n = x.size();
    std::vector<double> out(std::min(max_lag + 1, n), 0.0);
    for (std::size_t k = 0; k < out.size(); ++k) {
        double acc = 0.0;
        for (std::size_t j = 0; j + k < n; ++j) acc += x[j] * x[j + k];
        out[k] = acc / static_cast<double>(n);
    }
    return out;
}

Periodogram periodogram(const std::vector<double>& x, double dt) {
    const std::size_t n = x.size();
    const auto spec = rfft(x);
    Periodogram p;
    p.omega.resize(spec.size());
    p.power.resize(spec.size());
    for (std::size_t k = 0; k < spec.size(); ++k) {
        p.omega[k] = constants::two_pi * static_cast<double>(k) / (static_cast<double>(n) * dt);
        p.power[k] = dt / static_cast<double>(n) * std::norm(spec[k]);
    }
    return p;
}

Periodogram periodogram(const std::vector<cplx>& x, double dt) {
    const std::size_t n = x.size();
    const auto spec = fft_forward(x);
    Periodogram p;
    p.omega.reserve(n);
    p.power.reserve(n);
    // Negative frequencies first.
    for (std::size_t i = 0; i < n; ++i) {
        const std::size_t k = (i + n / 2 + 1) % n;
        p.omega.push_back(bin_omega(k, n, dt));
        p.power.push_back(dt / static_cast<double>(n) * std::norm(spec[k]));
    }
    return p;
}

Periodogram welch(const std::vector<double>& x, double dt, std::size_t segment) {
    if (segment < 2 || segment > x.size()) throw ConfigError("invalid Welch segment length");
    const std::size_t count = x.size() / segment;
    Periodogram avg;
    for (std::size_t s = 0; s < count; ++s) {
        std::vector<double> part(x.begin() + static_cast<std::ptrdiff_t>(s * segment),
                                 x.begin() + static_cast<std::ptrdiff_t>((s + 1) * segment));
        auto p = periodogram(part, dt);
        if (s == 0) {
            avg = std::move(p);
        } else {
            for (std::size_t k = 0; k < p.power.size(); ++k) avg.power[k] += p.power[k];
        }
    }
    for (auto& v : avg.power) v /= static_cast<double>(count);
    return avg;
}

}  // namespace semigrav
