#include "semigrav/detect.hpp"

#include <algorithm>
#include <boost/math/special_functions/erf.hpp>
#include <cmath>
#include <exception>
#include <mutex>
#include <sstream>
#include <thread>

#include "semigrav/errors.hpp"
#include "semigrav/rng.hpp"

namespace semigrav {

void validate(const HypothesisPair& pair) {
    validate(pair.null_model);
    validate(pair.alt_model);
    if (pair.null_model.kind != BasebandKind::Flat) throw ConfigError("null model must be flat");
    if (pair.alt_model.kind == BasebandKind::Flat || !(pair.alt_model.amplitude > 0.0)) {
        throw ConfigError("alternative model needs a positive peak height or dip depth");
    }
}

std::string_view to_string(Decision d) {
    switch (d) {
        case Decision::QM: return "QM";
        case Decision::SN: return "SN";
        case Decision::None: return "none";
    }
    return "?";
}

double estimator_y(const BasebandSeries& s, const HypothesisPair& pair) {
    return log_likelihood(s, pair.null_model) - log_likelihood(s, pair.alt_model);
}

Decision decide(double y, double y_th) {
    if (!(y_th >= 0.0)) throw ConfigError("decision threshold must be non-negative");
    if (y > y_th) return Decision::QM;
    if (y < -y_th) return Decision::SN;
    return Decision::None;
}

std::uint64_t stream_seed(std::uint64_t master_seed, BasebandKind truth) {
    return derive_seed(master_seed, static_cast<std::uint64_t>(truth));
}

std::vector<double> sample_y(const BasebandModel& truth, const HypothesisPair& pair,
                             std::size_t n_samples, double dt, const MonteCarlo& mc) {
    const BasebandGenerator gen(truth, n_samples, dt);
    const GaussianLikelihood ll_null(pair.null_model, dt);
    const GaussianLikelihood ll_alt(pair.alt_model, dt);
    const std::uint64_t base = stream_seed(mc.master_seed, truth.kind);

    std::vector<double> y(mc.n_trials);
    unsigned jobs = mc.jobs == 0 ? std::max(1u, std::thread::hardware_concurrency()) : mc.jobs;
    jobs = static_cast<unsigned>(std::min<std::size_t>(jobs, std::max<std::size_t>(mc.n_trials, 1)));

    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto work = [&](unsigned w) {
        try {
            std::vector<double> x;
            for (std::size_t i = w; i < mc.n_trials; i += jobs) {
                gen.generate_into(derive_seed(base, i), x);
                y[i] = ll_null(x) - ll_alt(x);
            }
        } catch (...) {
            std::lock_guard<std::mutex> lock(failure_mutex);
            if (!failure) failure = std::current_exception();
        }
    };
    if (jobs <= 1) {
        work(0);
    } else {
        std::vector<std::thread> pool;
        for (unsigned w = 0; w < jobs; ++w) pool.emplace_back(work, w);
        for (auto& t : pool) t.join();
    }
    if (failure) std::rethrow_exception(failure);
    return y;
}

DecisionReport outcome_probs(const BasebandModel& truth, const HypothesisPair& pair,
                             double duration, double dt, double y_th, const MonteCarlo& mc) {
    validate(pair);
    validate(truth);
    if (!(y_th >= 0.0)) throw ConfigError("decision threshold must be non-negative");
    if (mc.n_trials == 0) throw ConfigError("n_trials must be positive");

    DecisionReport r;
    r.truth = truth;
    r.pair = pair;
    r.duration = duration;
    r.dt = dt;
    r.y_th = y_th;
    r.n_trials = mc.n_trials;
    r.master_seed = mc.master_seed;

    const auto y = sample_y(truth, pair, sample_count(duration, dt), dt, mc);
    const Decision correct = truth.kind == BasebandKind::Flat ? Decision::QM : Decision::SN;
    double sum = 0.0, sum2 = 0.0;
    for (const double v : y) {
        const Decision d = decide(v, y_th);
        if (d == Decision::None) {
            ++r.n_indecision;
        } else if (d == correct) {
            ++r.n_correct;
        } else {
            ++r.n_wrong;
        }
        sum += v;
        sum2 += v * v;
    }
    const double n = static_cast<double>(mc.n_trials);
    r.p_correct = static_cast<double>(r.n_correct) / n;
    r.p_wrong = static_cast<double>(r.n_wrong) / n;
    r.p_indecision = static_cast<double>(r.n_indecision) / n;
    r.y_mean = sum / n;
    r.y_std = mc.n_trials > 1 ? std::sqrt(std::max(0.0, (sum2 - n * r.y_mean * r.y_mean) / (n - 1.0))) : 0.0;
    return r;
}

ThresholdChoice best_threshold(const std::vector<double>& y_null, const std::vector<double>& y_alt) {
    if (y_null.empty() || y_alt.empty()) throw ConfigError("empty Y sample");
    std::vector<double> a = y_null, b = y_alt;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    const double na = static_cast<double>(a.size()), nb = static_cast<double>(b.size());

    auto count_below = [](const std::vector<double>& v, double x) {  // #(v < x)
        return static_cast<double>(std::lower_bound(v.begin(), v.end(), x) - v.begin());
    };
    auto count_at_most = [](const std::vector<double>& v, double x) {  // #(v <= x)
        return static_cast<double>(std::upper_bound(v.begin(), v.end(), x) - v.begin());
    };

    std::vector<double> candidates;
    candidates.reserve(a.size() + b.size() + 1);
    candidates.push_back(0.0);
    for (const double v : a) candidates.push_back(std::abs(v));
    for (const double v : b) candidates.push_back(std::abs(v));
    std::sort(candidates.begin(), candidates.end());
    candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());

    ThresholdChoice best;
    best.worst = 2.0;
    for (const double y : candidates) {
        ThresholdChoice c;
        c.y_th = y;
        c.p_wrong_null = count_below(a, -y) / na;
        c.p_indecision_null = (count_at_most(a, y) - count_below(a, -y)) / na;
        c.p_wrong_alt = (nb - count_at_most(b, y)) / nb;
        c.p_indecision_alt = (count_at_most(b, y) - count_below(b, -y)) / nb;
        c.worst = std::max({c.p_wrong_null, c.p_indecision_null, c.p_wrong_alt, c.p_indecision_alt});
        if (c.worst <= best.worst) best = c;
    }
    return best;
}

namespace {
double confidence_fit(double p) {
    const double v = 2.94 - 7.38 * boost::math::erfc_inv(p);
    return v * v;
}
}  // namespace

FitPrediction fit_prediction(BasebandKind kind, double amplitude, double gamma, double p) {
    if (!(gamma > 0.0)) throw ConfigError("fwhm must be positive");
    if (!(p > 0.0 && p < 0.5)) throw ConfigError("confidence p must lie in (0, 0.5)");
    FitPrediction f;
    f.coherence_time = 2.0 / gamma;
    const bool reference_p = std::abs(p - 0.1) < 1e-12;
    switch (kind) {
        case BasebandKind::Flat:
            throw ConfigError("no fit exists for a flat alternative");
        case BasebandKind::Peak:
            if (!(amplitude > 0.0)) throw ConfigError("peak height must be positive");
            f.halved_coherence = 13.5 / std::pow(amplitude, 0.73);
            if (amplitude <= 10.0) f.warnings.push_back("peak fit breaks down for heights below about 10");
            if (!reference_p) f.warnings.push_back("peak fit exists only for p = 10%; value given for p = 10%");
            break;
        case BasebandKind::Dip:
            if (!(amplitude > 0.0 && amplitude < 1.0)) throw ConfigError("dip depth must lie in (0, 1)");
            f.halved_coherence = 18.3 / (amplitude * amplitude) - 10.7 / amplitude;
            if (!reference_p) {
                f.halved_coherence *= confidence_fit(p) / confidence_fit(0.1);
                if (std::abs(amplitude - 0.62) > 0.01) {
                    f.warnings.push_back("confidence dependence was fitted at d = 0.62 only");
                }
            }
            if (amplitude >= 0.9) f.warnings.push_back("dip fit is unreliable for depths close to 1");
            break;
    }
    f.halved = f.halved_coherence * f.coherence_time;
    f.unhalved = 2.0 * f.halved;
    return f;
}

SweepPoint evaluate_duration(const HypothesisPair& pair, double duration, double dt,
                             const MonteCarlo& mc) {
    const std::size_t n = sample_count(duration, dt);
    const auto y0 = sample_y(pair.null_model, pair, n, dt, mc);
    const auto ya = sample_y(pair.alt_model, pair, n, dt, mc);
    return {duration, best_threshold(y0, ya)};
}

TauMinResult tau_min(const HypothesisPair& pair, double p, double dt, const TauMinOptions& opt) {
    validate(pair);
    if (!(p > 0.0 && p < 0.5)) throw ConfigError("confidence p must lie in (0, 0.5)");
    if (!(dt > 0.0)) throw ConfigError("dt must be positive");
    if (opt.mc.n_trials < 10) throw ConfigError("tau_min needs at least 10 trials per hypothesis");
    const double gamma = pair.alt_model.fwhm;

    TauMinResult r;
    r.confidence_p = p;
    r.n_trials = opt.mc.n_trials;
    r.master_seed = opt.mc.master_seed;
    r.fit = fit_prediction(pair.alt_model.kind, pair.alt_model.amplitude, gamma, p);

    const double cap = opt.max_duration > 0.0 ? opt.max_duration : 1e5 / gamma;
    const double floor = 2.0 * dt;
    double start = opt.start_duration > 0.0 ? opt.start_duration : r.fit.unhalved;
    start = std::clamp(start, floor, cap);

    SweepPoint pass_point;
    auto passes = [&](double duration) {
        ++r.evaluations;
        const SweepPoint s = evaluate_duration(pair, duration, dt, opt.mc);
        r.history.push_back(s);
        const bool ok = s.choice.worst <= p;
        if (ok) pass_point = s;
        return std::pair<bool, SweepPoint>(ok, s);
    };

    double lo = 0.0, hi = 0.0;
    auto first = passes(start);
    if (first.first) {
        hi = start;
        while (true) {
            const double t = hi / 2.0;
            if (t < floor) break;
            if (passes(t).first) {
                hi = t;
            } else {
                lo = t;
                break;
            }
        }
    } else {
        lo = start;
        SweepPoint last = first.second;
        while (true) {
            const double t = 2.0 * lo;
            if (t > cap) {
                std::ostringstream os;
                os << "no threshold reaches p = " << p << " below the duration cap " << cap
                   << " s; best worst-case probability " << last.choice.worst << " at duration "
                   << last.duration << " s (y_th = " << last.choice.y_th << ")";
                throw SearchError(os.str());
            }
            auto res = passes(t);
            if (res.first) {
                hi = t;
                break;
            }
            lo = t;
            last = res.second;
        }
    }
    while (lo > 0.0 && hi / lo > 1.0 + opt.tolerance) {
        const double mid = std::sqrt(hi * lo);
        const std::size_t n_mid = sample_count(mid, dt);
        if (n_mid == sample_count(hi, dt) || n_mid == sample_count(lo, dt)) break;
        if (passes(mid).first) {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    // pass_point may belong to a larger duration if the last pass was not hi.
    if (std::abs(pass_point.duration - hi) > 1e-12 * hi) pass_point = evaluate_duration(pair, hi, dt, opt.mc);

    r.tau_min = hi;
    r.tau_min_halved = hi / 2.0;
    r.tau_min_coherence = r.tau_min_halved * gamma / 2.0;
    r.lower_bound = lo;
    r.y_th_used = pass_point.choice.y_th;
    r.worst_probability = pass_point.choice.worst;
    return r;
}

}  // namespace semigrav
