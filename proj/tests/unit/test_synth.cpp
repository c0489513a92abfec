#include <doctest.h>

#include "approx.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numeric>
#include <vector>

#include "semigrav/constants.hpp"
#include "semigrav/errors.hpp"
#include "semigrav/rng.hpp"
#include "semigrav/synth.hpp"

using namespace semigrav;
using cplx = std::complex<double>;
namespace k = semigrav::constants;

namespace {

struct Stats {
    double mean = 0.0;
    double sem = 0.0;  // standard error of the mean
};

Stats stats(const std::vector<double>& v) {
    const double n = static_cast<double>(v.size());
    const double mean = std::accumulate(v.begin(), v.end(), 0.0) / n;
    double ss = 0.0;
    for (double x : v) ss += (x - mean) * (x - mean);
    return {mean, std::sqrt(ss / (n - 1.0) / n)};
}

// Kolmogorov-Smirnov statistic of standardized samples against N(0, 1),
// scaled so that 1.628 is the asymptotic 1% critical value.
double ks_scaled(std::vector<double> z) {
    std::sort(z.begin(), z.end());
    const double n = static_cast<double>(z.size());
    double d = 0.0;
    for (std::size_t i = 0; i < z.size(); ++i) {
        const double f = 0.5 * std::erfc(-z[i] / std::sqrt(2.0));
        d = std::max({d, std::abs(f - static_cast<double>(i) / n), std::abs(static_cast<double>(i + 1) / n - f)});
    }
    return d * (std::sqrt(n) + 0.12 + 0.11 / std::sqrt(n));
}

constexpr double ks_critical_1pct = 1.628;

}  // namespace

TEST_CASE("baseband models") {
    CHECK(parse_baseband_kind("dip") == BasebandKind::Dip);
    CHECK_THROWS(parse_baseband_kind("notch"));
    const BasebandModel p = BasebandModel::peak(10.0, 2.0);
    CHECK(p.spectrum(0.0) == approx(11.0));
    CHECK(p.spectrum(1.0) == approx(6.0));
    CHECK(BasebandModel::dip(0.62, 1.0).spectrum(0.0) == approx(0.38));
    CHECK(BasebandModel::dip(0.62, 1.0).signed_amplitude() == -0.62);
    CHECK_THROWS_AS(validate(BasebandModel::dip(1.0, 1.0)), DomainError);
    CHECK_THROWS_AS(validate(BasebandModel::peak(-1.0, 1.0)), DomainError);
    CHECK_THROWS_AS(validate(BasebandModel::peak(1.0, 0.0)), DomainError);
    CHECK_NOTHROW(validate(BasebandModel::dip(0.999, 1.0)));
}

TEST_CASE("target autocovariance") {
    const BasebandModel flat = BasebandModel::flat();
    CHECK(target_autocovariance(flat, 0.3, 0.1) == 0.0);
    CHECK(target_autocovariance(flat, 0.0, 0.1) == approx(10.0));

    const double h = 7.0, g = 1.3;
    const BasebandModel peak = BasebandModel::peak(h, g);
    // Continuous part at zero lag against direct quadrature of the Lorentzian.
    double integral = 0.0;
    const double du = 1e-3;
    for (double u = -2e3; u < 2e3; u += du) integral += h / (1.0 + 4.0 * u * u / (g * g)) * du;
    integral += 2.0 * h * g * g / (4.0 * 2e3);  // tails beyond |w| = 2e3
    CHECK(lorentzian_autocovariance(peak, 0.0) == approx(integral / k::two_pi).epsilon(1e-5));
    CHECK(lorentzian_autocovariance(peak, 0.0) == approx(h * g / 4.0).epsilon(1e-14));
    for (double tau : {0.0, 0.4, 3.0}) {
        CHECK(lorentzian_autocovariance(peak, tau + 2.0 / g) / lorentzian_autocovariance(peak, tau) ==
              approx(std::exp(-1.0)).epsilon(1e-12));
        CHECK(lorentzian_autocovariance(peak, -tau) == lorentzian_autocovariance(peak, tau));
    }
    CHECK(lorentzian_autocovariance(BasebandModel::dip(0.5, g), 0.0) == approx(-0.5 * g / 4.0));
    const auto row = toeplitz_autocovariance(peak, 5, 0.1);
    CHECK(row[0] == approx(10.0 + h * g / 4.0));
    CHECK(row[3] == approx(h * g / 4.0 * std::exp(-g * 0.3 / 2.0)));
}

TEST_CASE("seed derivation") {
    // SplitMix64 reference values for a stream started at 0.
    CHECK(derive_seed(0, 0) == 0xE220A8397B1DCDAFULL);
    CHECK(derive_seed(0, 1) == 0x6E789E6AA1B965F4ULL);
    CHECK(derive_seed(1234567, 0) == 0x599ED017FB08FC85ULL);
    CHECK(derive_seed(7, 3) != derive_seed(7, 4));
    NormalStream a(99), b(99);
    for (int i = 0; i < 100; ++i) CHECK(a.next() == b.next());
}

TEST_CASE("generation preconditions") {
    const BasebandModel peak = BasebandModel::peak(10.0, 1.0);
    CHECK_THROWS_AS(gen_baseband(peak, 200.0, 0.6, 1), ConfigError);
    CHECK_THROWS_AS(gen_baseband(peak, 5.0, 0.14, 1), ConfigError);
    CHECK_THROWS_AS(gen_baseband(BasebandModel::dip(1.2, 1.0), 200.0, 0.14, 1), DomainError);
    CHECK_NOTHROW(gen_baseband(BasebandModel::flat(), 1.0, 0.14, 1));
    CHECK(sample_count(200.0, 0.14) == 1429);
    CHECK(sample_count(0.1, 0.14) == 2);
    const BasebandSeries s = gen_baseband(peak, 200.0, 0.14, 5);
    CHECK(s.samples.size() == 1429);
    CHECK(s.dt == 0.14);
    CHECK(s.seed == 5);
    CHECK(s.model_tag == peak.tag());
    for (double x : s.samples) CHECK(std::isfinite(x));
}

TEST_CASE("determinism") {
    const BasebandModel dip = BasebandModel::dip(0.62, 1.0);
    const auto a = gen_baseband(dip, 200.0, 0.14, 42);
    const auto b = gen_baseband(dip, 200.0, 0.14, 42);
    const auto c = gen_baseband(dip, 200.0, 0.14, 43);
    CHECK(a.samples == b.samples);
    CHECK(a.samples != c.samples);
    const BasebandGenerator gen(dip, a.samples.size(), 0.14);
    std::vector<double> into;
    gen.generate_into(42, into);
    CHECK(into == a.samples);
}

TEST_CASE("zero-lag variance over realizations") {
    const double a = 10.0, g = 1.0, dt = 0.14;
    const BasebandModel peak = BasebandModel::peak(a, g);
    const BasebandGenerator gen(peak, sample_count(200.0, dt), dt);
    std::vector<double> est;
    std::vector<double> x;
    for (std::uint64_t i = 0; i < 10000; ++i) {
        gen.generate_into(derive_seed(11, i), x);
        double ss = 0.0;
        for (double v : x) ss += v * v;
        est.push_back(ss / static_cast<double>(x.size()));
    }
    const Stats s = stats(est);
    CHECK(std::abs(s.mean - (1.0 / dt + a * g / 4.0)) <= 3.0 * s.sem);
}

TEST_CASE("flat records are uncorrelated") {
    const BasebandGenerator gen(BasebandModel::flat(), 1429, 0.14);
    std::vector<double> r1;
    std::vector<double> x;
    for (std::uint64_t i = 0; i < 2000; ++i) {
        gen.generate_into(derive_seed(3, i), x);
        const auto c = empirical_autocovariance(x, 1);
        r1.push_back(c[1] / c[0]);
    }
    const Stats s = stats(r1);
    CHECK(std::abs(s.mean) <= 3.0 * s.sem);
    // Single record: lag-1 correlation within 3 / sqrt(n) of zero.
    CHECK(std::abs(r1.front()) <= 3.0 / std::sqrt(1429.0));
}

TEST_CASE("embedding and dense factor agree on the covariance") {
    const double dt = 0.14;
    const std::size_t n = 400, lags = 30, reps = 4000;
    for (const BasebandModel& m : {BasebandModel::peak(10.0, 1.0), BasebandModel::dip(0.62, 1.0)}) {
        const BasebandGenerator gen(m, n, dt);
        std::vector<double> fast(lags + 1, 0.0), dense(lags + 1, 0.0);
        std::vector<double> x;
        for (std::uint64_t i = 0; i < reps; ++i) {
            gen.generate_into(derive_seed(21, i), x);
            const auto cf = empirical_autocovariance(x, lags);
            const auto cd = empirical_autocovariance(gen_baseband_dense(m, n, dt, derive_seed(22, i)).samples, lags);
            for (std::size_t l = 0; l <= lags; ++l) {
                // Undo the 1 - l/n taper of the biased estimator.
                const double w = static_cast<double>(n) / static_cast<double>(n - l);
                fast[l] += cf[l] * w / reps;
                dense[l] += cd[l] * w / reps;
            }
        }
        const double c0 = target_autocovariance(m, 0.0, dt);
        for (std::size_t l = 0; l <= lags; ++l) {
            const double target = target_autocovariance(m, static_cast<double>(l) * dt, dt);
            CHECK(std::abs(fast[l] - dense[l]) <= 0.01 * c0);
            CHECK(std::abs(fast[l] - target) <= 0.01 * c0);
            CHECK(std::abs(dense[l] - target) <= 0.01 * c0);
        }
    }
    CHECK_THROWS_AS(gen_baseband_dense(BasebandModel::flat(), 5000, dt, 1), ConfigError);
}

TEST_CASE("marginal normality") {
    const double dt = 0.14;
    const auto flat = gen_baseband(BasebandModel::flat(), 10000 * dt, dt, 77).samples;
    std::vector<double> z;
    for (double v : flat) z.push_back(v * std::sqrt(dt));
    CHECK(ks_scaled(z) < ks_critical_1pct);

    // Peak model thinned to one sample per 7 correlation times.
    const BasebandModel peak = BasebandModel::peak(10.0, 1.0);
    const BasebandGenerator gen(peak, 1000000, dt);
    const auto x = gen.generate(78).samples;
    const double sd = std::sqrt(target_autocovariance(peak, 0.0, dt));
    z.clear();
    for (std::size_t i = 0; i < x.size(); i += 100) z.push_back(x[i] / sd);
    CHECK(z.size() == 10000);
    CHECK(ks_scaled(z) < ks_critical_1pct);
}

TEST_CASE("averaged periodogram matches the model spectrum") {
    const double dt = 0.14, g = 1.0;
    for (const BasebandModel& m : {BasebandModel::peak(10.0, g), BasebandModel::dip(0.62, g)}) {
        const std::size_t n = sample_count(200.0 / g, dt);
        const BasebandGenerator gen(m, n, dt);
        std::vector<double> x;
        Periodogram avg;
        const int reps = 10000;
        for (int i = 0; i < reps; ++i) {
            gen.generate_into(derive_seed(31, static_cast<std::uint64_t>(i)), x);
            auto p = periodogram(x, dt);
            if (i == 0) {
                avg = std::move(p);
            } else {
                for (std::size_t b = 0; b < p.power.size(); ++b) avg.power[b] += p.power[b];
            }
        }
        for (std::size_t b = 0; b < avg.omega.size() && avg.omega[b] <= 5.0 * g; ++b) {
            CHECK(avg.power[b] / reps == approx(m.spectrum(avg.omega[b])).epsilon(0.05));
        }
    }
    // Welch on one long record.
    const BasebandModel peak = BasebandModel::peak(10.0, g);
    const auto x = BasebandGenerator(peak, 1429 * 4000, dt).generate(5).samples;
    const Periodogram w = welch(x, dt, 1429);
    for (std::size_t b = 0; b < w.omega.size() && w.omega[b] <= 5.0 * g; ++b) {
        CHECK(w.power[b] == approx(peak.spectrum(w.omega[b])).epsilon(0.05));
    }
}

TEST_CASE("arbitrary spectrum synthesis") {
    const std::size_t n = 4096;
    const double dt = 0.5;
    std::vector<double> var;
    for (std::uint64_t i = 0; i < 2000; ++i) {
        const auto x = gen_from_spectrum([](double) { return 1.0; }, n, dt, derive_seed(41, i));
        double ss = 0.0;
        for (double v : x) ss += v * v;
        var.push_back(ss / n);
    }
    const Stats s = stats(var);
    CHECK(std::abs(s.mean - 1.0 / dt) <= 3.0 * s.sem);
    CHECK_THROWS_AS(gen_from_spectrum([](double) { return -1.0; }, n, dt, 1), DomainError);
}

TEST_CASE("demodulation of tones") {
    const std::size_t n = 4096;
    const double dt = 0.25;
    const double bin = k::two_pi / (n * dt);
    const double wq = 600.0 * bin;
    const DemodConfig cfg{wq, 40.0 * bin};
    std::vector<double> x(n);
    for (std::size_t j = 0; j < n; ++j) x[j] = std::cos(wq * j * dt);
    const auto xi = demodulate(x, dt, cfg);
    for (const auto& z : xi) CHECK(std::abs(z - cplx(1.0 / std::sqrt(2.0), 0.0)) < 1e-6);

    const double delta = 7.0 * bin;
    for (std::size_t j = 0; j < n; ++j) x[j] = std::cos((wq + delta) * j * dt + 0.3);
    const auto shifted = demodulate(x, dt, cfg);
    for (std::size_t j = 0; j < n; ++j) {
        CHECK(std::abs(shifted[j] - std::polar(1.0 / std::sqrt(2.0), delta * j * dt + 0.3)) < 1e-6);
    }

    // A tone outside the band is removed.
    for (std::size_t j = 0; j < n; ++j) x[j] = std::cos((wq + 60.0 * bin) * j * dt);
    for (const auto& z : demodulate(x, dt, cfg)) CHECK(std::abs(z) < 1e-9);

    const double nyquist = k::pi / dt;
    CHECK_THROWS_AS(demodulate(x, dt, {nyquist - 10.0 * bin, 20.0 * bin}), ConfigError);
    CHECK_THROWS_AS(demodulate(x, dt, {wq, 0.0}), ConfigError);
    CHECK_THROWS_AS(demodulate(x, dt, {wq, 2.0 * wq}), ConfigError);
    CHECK_THROWS_AS(validate(DemodConfig{1.0, 0.5}, 0.6), ConfigError);
    CHECK(default_demod_halfwidth(0.01, 1.0, 0.3) == approx(0.175));
    CHECK(default_demod_halfwidth(0.001, 1.0, 0.3) == approx(0.02));
}

TEST_CASE("quadratures") {
    const std::vector<cplx> real_input = {1.0, -2.0, 0.5};
    const auto [c, s] = quadratures(real_input, 0.1);
    CHECK(c.samples == std::vector<double>{1.0, -2.0, 0.5});
    for (double v : s.samples) CHECK(v == 0.0);

    const std::vector<cplx> z = {{1.0, 2.0}, {-0.5, 0.25}, {3.0, -1.0}};
    const auto [zc, zs] = quadratures(z, 0.1);
    double lhs = 0.0, rhs = 0.0;
    for (std::size_t i = 0; i < z.size(); ++i) {
        lhs += zc.samples[i] * zc.samples[i] + zs.samples[i] * zs.samples[i];
        rhs += std::norm(z[i]);
        CHECK(zc.samples[i] == approx(((z[i] + std::conj(z[i])) / 2.0).real()));
        CHECK(zs.samples[i] == approx(((z[i] - std::conj(z[i])) / cplx(0.0, 2.0)).real()));
    }
    CHECK(lhs == approx(rhs).epsilon(1e-15));
}

TEST_CASE("quadratures of a demodulated Lorentzian are uncorrelated") {
    const std::size_t n = 4096, reps = 1000;
    const double dt = 1.0, wq = 1.0, g = 0.05;
    const auto spectrum = [&](double w) {
        const double u = 2.0 * (std::abs(w) - wq) / g;
        return 1.0 + 20.0 / (1.0 + u * u);
    };
    const DemodConfig cfg{wq, 10.0 * g};
    const auto max_lag = static_cast<std::size_t>(10.0 / g / dt);
    std::vector<std::vector<double>> cross(2 * max_lag + 1);
    for (std::uint64_t r = 0; r < reps; ++r) {
        const auto xi = demodulate(gen_from_spectrum(spectrum, n, dt, derive_seed(51, r)), dt, cfg);
        const auto [c, s] = quadratures(xi, dt);
        for (std::size_t i = 0; i < cross.size(); ++i) {
            const long lag = static_cast<long>(i) - static_cast<long>(max_lag);
            double acc = 0.0;
            for (long j = 0; j < static_cast<long>(n); ++j) {
                const long m = j + lag;
                if (m < 0 || m >= static_cast<long>(n)) continue;
                acc += c.samples[static_cast<std::size_t>(j)] * s.samples[static_cast<std::size_t>(m)];
            }
            cross[i].push_back(acc / static_cast<double>(n));
        }
    }
    int outside = 0;
    for (const auto& v : cross) {
        const Stats st = stats(v);
        if (std::abs(st.mean) > 3.0 * st.sem) ++outside;
    }
    CHECK(outside == 0);
}

TEST_CASE("demodulated pre-selection record reproduces the baseband peak") {
    // Shot-noise floor, thermal peak at w_cm and the signature at w_q.
    const std::size_t n = 65536;
    const double dt = 1.0, wq = 1.0, wcm = 0.3, g = 0.01, h = 30.0;
    const auto lorentz = [](double w, double c, double a, double fw) {
        const double u = 2.0 * (std::abs(w) - c) / fw;
        return a / (1.0 + u * u);
    };
    const auto full = [&](double w) { return 1.0 + lorentz(w, wcm, 500.0, g) + lorentz(w, wq, h, g); };
    const double sigma = default_demod_halfwidth(g, wq, wcm);
    const DemodConfig cfg{wq, sigma};
    validate(cfg, wcm + 10.0 * g);

    const int reps = 40;
    std::vector<double> power;
    std::vector<double> omega;
    for (int r = 0; r < reps; ++r) {
        const auto xi = demodulate(gen_from_spectrum(full, n, dt, derive_seed(61, static_cast<std::uint64_t>(r))), dt, cfg);
        const Periodogram p = periodogram(xi, dt);
        if (r == 0) {
            omega = p.omega;
            power.assign(p.power.size(), 0.0);
        }
        for (std::size_t b = 0; b < p.power.size(); ++b) power[b] += p.power[b] / reps;
    }
    // Each quadrature carries the original level, the complex record twice it.
    const BasebandModel model = BasebandModel::peak(h, g);
    const std::size_t block = 64;
    std::size_t compared = 0;
    for (std::size_t b = 0; b + block <= omega.size(); b += block) {
        double w = 0.0, p = 0.0, s = 0.0;
        for (std::size_t i = b; i < b + block; ++i) {
            w += omega[i] / block;
            p += power[i] / 2.0 / block;
            s += model.spectrum(omega[i]) / block;
        }
        if (std::abs(omega[b]) > 5.0 * g || std::abs(omega[b + block - 1]) > 5.0 * g) continue;
        CHECK(p == approx(s).epsilon(0.10));
        ++compared;
    }
    CHECK(compared > 10);

    // Parseval between the time record and its periodogram.
    const auto xi = demodulate(gen_from_spectrum(full, n, dt, 9), dt, cfg);
    double time_power = 0.0;
    for (const auto& z : xi) time_power += std::norm(z);
    const Periodogram p = periodogram(xi, dt);
    const double freq_power = std::accumulate(p.power.begin(), p.power.end(), 0.0) / dt;
    CHECK(freq_power == approx(time_power).epsilon(1e-10));
}
