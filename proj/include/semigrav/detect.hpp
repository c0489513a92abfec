#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "semigrav/likelihood.hpp"
#include "semigrav/synth.hpp"

namespace semigrav {

/// Null hypothesis (flat, standard quantum mechanics) against a Lorentzian
/// alternative (semiclassical gravity).
struct HypothesisPair {
    BasebandModel null_model = BasebandModel::flat();
    BasebandModel alt_model;

    static HypothesisPair against(const BasebandModel& alt) { return {BasebandModel::flat(), alt}; }
};

void validate(const HypothesisPair& pair);

enum class Decision { QM, SN, None };

std::string_view to_string(Decision d);

/// Y = ln L(flat) - ln L(alt).
double estimator_y(const BasebandSeries& s, const HypothesisPair& pair);

/// Y > y_th -> QM, Y < -y_th -> SN, otherwise None. y_th < 0 is a ConfigError.
Decision decide(double y, double y_th);

/// Monte Carlo settings shared by outcome_probs and tau_min.
struct MonteCarlo {
    std::size_t n_trials = 10000;
    std::uint64_t master_seed = 1;
    unsigned jobs = 1;
};

/// Y for n_trials records drawn under `truth`. Trial i uses
/// derive_seed(stream_seed(master_seed, truth.kind), i), so the result does
/// not depend on the number of jobs.
std::vector<double> sample_y(const BasebandModel& truth, const HypothesisPair& pair,
                             std::size_t n_samples, double dt, const MonteCarlo& mc);

/// Seed of the per-truth trial stream; flat, peak and dip truths draw from
/// distinct streams.
std::uint64_t stream_seed(std::uint64_t master_seed, BasebandKind truth);

struct DecisionReport {
    BasebandModel truth;
    HypothesisPair pair;
    double duration = 0.0;
    double dt = 0.0;
    double y_th = 0.0;
    std::size_t n_trials = 0;
    std::uint64_t master_seed = 0;
    std::size_t n_correct = 0;
    std::size_t n_wrong = 0;
    std::size_t n_indecision = 0;
    double p_correct = 0.0;
    double p_wrong = 0.0;
    double p_indecision = 0.0;
    double y_mean = 0.0;
    double y_std = 0.0;
};

/// Tally of decisions under `truth`. QM is the correct call for a flat truth
/// and SN for any Lorentzian truth.
DecisionReport outcome_probs(const BasebandModel& truth, const HypothesisPair& pair,
                             double duration, double dt, double y_th, const MonteCarlo& mc);

/// Best threshold for two empirical Y samples (flat truth, alternative truth).
struct ThresholdChoice {
    double y_th = 0.0;
    double worst = 1.0;  // max of the four error / indecision probabilities
    double p_wrong_null = 0.0;
    double p_indecision_null = 0.0;
    double p_wrong_alt = 0.0;
    double p_indecision_alt = 0.0;
};

/// Sweeps y_th over 0 and every |Y| value; among minimizers of the worst
/// probability the largest y_th wins.
ThresholdChoice best_threshold(const std::vector<double>& y_null, const std::vector<double>& y_alt);

/// One point of a duration sweep.
struct SweepPoint {
    double duration = 0.0;
    ThresholdChoice choice;
};

struct FitPrediction {
    double halved = 0.0;                // s, two-quadrature value
    double unhalved = 0.0;              // s, single quadrature
    double coherence_time = 0.0;        // s, 2 / fwhm
    double halved_coherence = 0.0;      // halved in coherence times
    std::vector<std::string> warnings;  // validity of the empirical fits
};

/// Empirical fits for the minimum measurement time at fwhm `gamma`:
/// peak 13.5 / h^0.73 (halved, 27 / h^0.73 single quadrature) coherence times;
/// dip 18.3 / d^2 - 10.7 / d; the confidence dependence
/// (2.94 - 7.38 erfc^-1(p))^2 was fitted at d = 0.62 and is applied to other
/// depths as a ratio. Peaks at p != 0.1 return the p = 0.1 fit with a warning.
FitPrediction fit_prediction(BasebandKind kind, double amplitude, double gamma, double p);

struct TauMinOptions {
    MonteCarlo mc;
    double tolerance = 0.05;      // relative bracket width at termination
    double max_duration = 0.0;    // s; 0 selects 1e5 / gamma
    double start_duration = 0.0;  // s; 0 selects the fit prediction
};

struct TauMinResult {
    double tau_min = 0.0;         // s, single quadrature, smallest verified passing duration
    double tau_min_halved = 0.0;  // s, two independent quadratures
    double tau_min_coherence = 0.0;  // halved, in coherence times 2 / gamma
    double lower_bound = 0.0;     // s, largest verified failing duration (0 if none)
    double y_th_used = 0.0;
    double worst_probability = 0.0;
    double confidence_p = 0.0;
    std::size_t n_trials = 0;
    std::uint64_t master_seed = 0;
    std::size_t evaluations = 0;
    FitPrediction fit;
    std::vector<SweepPoint> history;  // every evaluated duration, in order
};

/// Shortest duration for which some threshold keeps all four error and
/// indecision probabilities at or below p. Geometric bracketing then
/// bisection; every duration reuses the same seeds. Throws SearchError when
/// the cap is reached.
TauMinResult tau_min(const HypothesisPair& pair, double p, double dt, const TauMinOptions& opt);

SweepPoint evaluate_duration(const HypothesisPair& pair, double duration, double dt,
                             const MonteCarlo& mc);

}  // namespace semigrav
