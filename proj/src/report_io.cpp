#include "semigrav/report_io.hpp"

#include <charconv>
#include <istream>
#include <ostream>
#include <sstream>

#include "semigrav/constants.hpp"
#include "semigrav/errors.hpp"

namespace semigrav {

std::string version_tag() { return std::string("semigrav ") + SEMIGRAV_VERSION; }

std::string format_double(double v) {
    char buf[64];
    const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    if (ec != std::errc()) return std::to_string(v);
    return std::string(buf, ptr);
}

Json to_json(const MaterialRow& row) {
    return {{"element", row.spec.name},
            {"symbol", row.spec.symbol},
            {"atomic_mass_amu", row.spec.atomic_mass / constants::amu},
            {"debye_waller_B_A2", row.spec.debye_waller_B / (constants::angstrom * constants::angstrom)},
            {"density_kg_m3", row.spec.density},
            {"delta_x_zp_m", row.derived.delta_x_zp},
            {"omega_sn_s1", row.derived.omega_sn}};
}

Json to_json(const BasebandModel& m) {
    return {{"kind", std::string(to_string(m.kind))}, {"amplitude", m.amplitude}, {"fwhm", m.fwhm}};
}

Json to_json(const LorentzianFeature& f) {
    return {{"kind", std::string(to_string(f.kind))},
            {"center_rad_s", f.center},
            {"amplitude", f.amplitude},
            {"fwhm_rad_s", f.fwhm},
            {"baseline", f.baseline}};
}

Json to_json(const ExtractedFeature& f) {
    return {{"found", f.found},
            {"center_rad_s", f.center},
            {"amplitude", f.amplitude},
            {"fwhm_rad_s", f.fwhm}};
}

Json to_json(const DecisionReport& r) {
    return {{"truth", to_json(r.truth)},
            {"null_model", to_json(r.pair.null_model)},
            {"alt_model", to_json(r.pair.alt_model)},
            {"duration", r.duration},
            {"dt", r.dt},
            {"y_th", r.y_th},
            {"n_trials", r.n_trials},
            {"master_seed", r.master_seed},
            {"p_correct", r.p_correct},
            {"p_wrong", r.p_wrong},
            {"p_indecision", r.p_indecision},
            {"n_correct", r.n_correct},
            {"n_wrong", r.n_wrong},
            {"n_indecision", r.n_indecision},
            {"y_mean", r.y_mean},
            {"y_std", r.y_std}};
}

Json to_json(const FitPrediction& f) {
    return {{"halved_s", f.halved},
            {"unhalved_s", f.unhalved},
            {"coherence_time_s", f.coherence_time},
            {"halved_coherence_times", f.halved_coherence},
            {"warnings", f.warnings}};
}

Json to_json(const TauMinResult& r) {
    Json history = Json::array();
    for (const auto& p : r.history) {
        history.push_back({{"duration", p.duration}, {"y_th", p.choice.y_th}, {"worst", p.choice.worst}});
    }
    return {{"tau_min", r.tau_min},
            {"tau_min_halved", r.tau_min_halved},
            {"tau_min_halved_coherence_times", r.tau_min_coherence},
            {"lower_bound", r.lower_bound},
            {"y_th_used", r.y_th_used},
            {"worst_probability", r.worst_probability},
            {"confidence_p", r.confidence_p},
            {"n_trials", r.n_trials},
            {"master_seed", r.master_seed},
            {"evaluations", r.evaluations},
            {"fit_prediction", to_json(r.fit)},
            {"history", history}};
}

Json to_json(const FeasibilityReport& r) {
    Json j = {{"regime", r.regime},
              {"tau_min_scaled_s", r.tau_min_scaled},
              {"tau_min_scaled_h", r.tau_min_scaled / 3600.0},
              {"input_power_W", r.input_power},
              {"feature_amplitude", r.feature_amplitude},
              {"beta_used", r.beta_used},
              {"beta_limit", r.beta_limit},
              {"gamma_sq", r.gamma_sq},
              {"omega_q", r.omega_q},
              {"gamma_m", r.gamma_m},
              {"closure_amplitude", r.closure_amplitude},
              {"tau_fit_s", r.tau_fit},
              {"coherence_time_s", r.coherence_time}};
    if (r.regime == "post") {
        j["beta_band"] = {r.beta_band_low, r.beta_band_high};
    }
    j["flags"] = {{"beta_limit_respected", r.flags.beta_limit_respected},
                  {"narrowband", r.flags.narrowband},
                  {"peak_separation", r.flags.peak_separation},
                  {"gamma_regime", r.flags.gamma_regime},
                  {"fit_valid", r.flags.fit_valid}};
    j["warnings"] = r.warnings;
    return j;
}

void write_series_csv(std::ostream& os, const BasebandSeries& s) {
    os << "# dt = " << format_double(s.dt) << '\n'
       << "# n = " << s.samples.size() << '\n'
       << "# seed = " << s.seed << '\n'
       << "# model = " << s.model_tag << '\n'
       << "i,x\n";
    for (std::size_t i = 0; i < s.samples.size(); ++i) os << i << ',' << format_double(s.samples[i]) << '\n';
}

BasebandSeries read_series_csv(std::istream& is) {
    BasebandSeries s;
    std::string line;
    std::size_t expected = 0;
    bool have_n = false;
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        if (line[0] == '#') {
            const auto eq = line.find('=');
            if (eq == std::string::npos) continue;
            std::string key = line.substr(1, eq - 1);
            std::string value = line.substr(eq + 1);
            key.erase(0, key.find_first_not_of(' '));
            key.erase(key.find_last_not_of(' ') + 1);
            value.erase(0, value.find_first_not_of(' '));
            if (key == "dt") s.dt = std::stod(value);
            if (key == "n") {
                expected = std::stoull(value);
                have_n = true;
            }
            if (key == "seed") s.seed = std::stoull(value);
            if (key == "model") s.model_tag = value;
            continue;
        }
        if (line == "i,x") continue;
        const auto comma = line.find(',');
        if (comma == std::string::npos) throw ConfigError("malformed series row: " + line);
        s.samples.push_back(std::stod(line.substr(comma + 1)));
    }
    if (have_n && expected != s.samples.size()) throw ConfigError("series length does not match header");
    if (!(s.dt > 0.0)) throw ConfigError("series header lacks a positive dt");
    return s;
}

void write_trajectory_csv(std::ostream& os, const MomentTrajectory& traj) {
    os << "t,mean_x,mean_p,var_xx,cov_xp,var_pp,energy\n";
    for (std::size_t i = 0; i < traj.times.size(); ++i) {
        const auto& s = traj.states[i];
        os << format_double(traj.times[i]) << ',' << format_double(s.mean_x) << ','
           << format_double(s.mean_p) << ',' << format_double(s.var_xx) << ','
           << format_double(s.cov_xp) << ',' << format_double(s.var_pp) << ','
           << format_double(traj.energy[i]) << '\n';
    }
}

void write_sweep_csv(std::ostream& os, const std::vector<SweepPoint>& points) {
    os << "duration,y_th,p_wrong_null,p_indecision_null,p_wrong_alt,p_indecision_alt,worst\n";
    for (const auto& p : points) {
        os << format_double(p.duration) << ',' << format_double(p.choice.y_th) << ','
           << format_double(p.choice.p_wrong_null) << ',' << format_double(p.choice.p_indecision_null)
           << ',' << format_double(p.choice.p_wrong_alt) << ','
           << format_double(p.choice.p_indecision_alt) << ',' << format_double(p.choice.worst) << '\n';
    }
}

}  // namespace semigrav
