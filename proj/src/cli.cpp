#include "semigrav/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <ostream>
#include <set>
#include <sstream>

#include "semigrav/config.hpp"
#include "semigrav/constants.hpp"
#include "semigrav/detect.hpp"
#include "semigrav/dynamics.hpp"
#include "semigrav/errors.hpp"
#include "semigrav/feasibility.hpp"
#include "semigrav/grid.hpp"
#include "semigrav/materials.hpp"
#include "semigrav/report_io.hpp"
#include "semigrav/spectra.hpp"
#include "semigrav/synth.hpp"

namespace semigrav::cli {

namespace fs = std::filesystem;

namespace {

struct Param {
    std::string key;
    std::string help;
};

const std::vector<Param> experiment_params = {
    {"preset", "reference experiment: pre (tungsten, 300 K) or post (osmium, 1 K)"},
    {"material", "element symbol or name"},
    {"mass", "test mass, e.g. 200 g"},
    {"omega_cm", "pendulum resonance, e.g. 10 mHz (Hz suffixes are cyclic)"},
    {"q", "mechanical quality factor"},
    {"temperature", "bath temperature, e.g. 300 K"},
    {"omega_sn", "override of the material w_sn, rad/s"},
    {"atomic_mass", "override of the material atomic mass, e.g. 184 amu"},
    {"carrier", "optical carrier, e.g. 200 THz"},
    {"transmissivity", "input mirror power transmissivity"},
    {"power", "input optical power, e.g. 5 nW"},
    {"beta", "measurement strength (overrides power)"},
};

/// Per-run state: merged input, resolved values and output location.
class Context {
public:
    Context(std::string command, ConfigDocument doc, fs::path out_dir, unsigned jobs, std::ostream& out)
        : command_(std::move(command)), doc_(std::move(doc)), out_dir_(std::move(out_dir)), jobs_(jobs),
          out_(out) {}

    const ConfigDocument& input() const { return doc_; }
    std::ostream& out() { return out_; }
    unsigned jobs() const { return jobs_; }
    const std::string& command() const { return command_; }

    std::string text(const std::string& key, const std::string& fallback) {
        const std::string v = doc_.text(key, fallback);
        resolved_.set(key, v);
        return v;
    }

    double quantity(const std::string& key, Quantity q, double fallback) {
        if (q == Quantity::Percent) {
            const std::string raw = doc_.text(key, format_double(fallback * 100.0));
            resolved_.set(key, raw);
            return parse_quantity(raw, q);
        }
        const double v = doc_.quantity(key, q, fallback);
        resolved_.set(key, format_double(v));
        return v;
    }

    std::optional<double> optional_quantity(const std::string& key, Quantity q) {
        const auto v = doc_.optional_quantity(key, q);
        if (v) resolved_.set(key, format_double(*v));
        return v;
    }

    std::uint64_t integer(const std::string& key, std::uint64_t fallback) {
        const auto v = doc_.integer(key, fallback);
        resolved_.set(key, std::to_string(v));
        return v;
    }

    void record(const std::string& key, double v) { resolved_.set(key, format_double(v)); }

    void require(const std::string& key) {
        if (!doc_.has(key)) {
            std::string flag = key;
            std::replace(flag.begin(), flag.end(), '_', '-');
            throw ConfigError("missing required option --" + flag);
        }
    }

    std::uint64_t seed() const { return seed_; }
    void set_seed(std::uint64_t s) { seed_ = s; }

    Json envelope() const {
        Json cfg = Json::object();
        for (const auto& [k, v] : resolved_.entries()) cfg[k] = v;
        return {{"schema_version", schema_version},
                {"version", version_tag()},
                {"command", command_},
                {"master_seed", seed_},
                {"config", cfg}};
    }

    std::string file_name(const std::string& suffix, const std::string& ext) const {
        return command_ + "_seed" + std::to_string(seed_) + suffix + "." + ext;
    }

    fs::path write(const std::string& name, const std::string& content) {
        fs::create_directories(out_dir_);
        const fs::path path = out_dir_ / name;
        std::ofstream f(path, std::ios::binary);
        if (!f) throw std::runtime_error("cannot write " + path.string());
        f << content;
        return path;
    }

    /// Writes the resolved config next to the outputs; it re-runs the command.
    void write_config() {
        std::ostringstream os;
        os << "# " << version_tag() << " " << command_ << "\n";
        resolved_.write(os);
        write(file_name("", "conf"), os.str());
    }

    void emit_json(const Json& j, const std::string& suffix = "") {
        const std::string text = j.dump(2) + "\n";
        write(file_name(suffix, "json"), text);
        out_ << text;
    }

private:
    std::string command_;
    ConfigDocument doc_;
    ConfigDocument resolved_;
    fs::path out_dir_;
    unsigned jobs_;
    std::ostream& out_;
    std::uint64_t seed_ = 0;
};

ExperimentConfig resolve_experiment(Context& c, const std::string& default_preset) {
    const std::string preset = c.text("preset", default_preset);
    ExperimentConfig e;
    if (preset == "pre") {
        e = ExperimentConfig::pre_reference();
    } else if (preset == "post") {
        e = ExperimentConfig::post_reference();
    } else {
        throw ConfigError("preset must be pre or post");
    }
    const std::string preset_material = e.material;
    e.material = c.text("material", e.material);
    lookup_material(e.material);
    if (lookup_material(e.material).spec.symbol != lookup_material(preset_material).spec.symbol) {
        // The preset's rounded material constants belong to its own element.
        e.atomic_mass.reset();
        e.omega_sn.reset();
    }
    e.mass = c.quantity("mass", Quantity::Mass, e.mass);
    e.omega_cm = c.quantity("omega_cm", Quantity::AngularFrequency, e.omega_cm);
    e.quality_factor = c.quantity("q", Quantity::Dimensionless, e.quality_factor);
    e.temperature = c.quantity("temperature", Quantity::Temperature, e.temperature);
    e.carrier_omega = c.quantity("carrier", Quantity::AngularFrequency, e.carrier_omega);
    e.transmissivity = c.quantity("transmissivity", Quantity::Dimensionless, e.transmissivity);
    if (auto v = c.optional_quantity("atomic_mass", Quantity::Mass)) e.atomic_mass = v;
    if (auto v = c.optional_quantity("omega_sn", Quantity::AngularFrequency)) e.omega_sn = v;
    if (e.atomic_mass) c.record("atomic_mass", *e.atomic_mass);
    if (e.omega_sn) c.record("omega_sn", *e.omega_sn);
    e.input_power = c.optional_quantity("power", Quantity::Power);
    e.beta = c.optional_quantity("beta", Quantity::Dimensionless);
    return e;
}

// ---- commands ---------------------------------------------------------------

void cmd_spectrum(Context& c) {
    const Prescription pres = parse_prescription(c.text("prescription", "pre"));
    ExperimentConfig e = resolve_experiment(c, pres == Prescription::Post ? "post" : "pre");
    c.set_seed(c.integer("seed", 1));
    const OscillatorConfig osc = e.oscillator();
    validate(osc);
    const double beta = pres == Prescription::Post ? post_report(e).beta_used : pre_report(e).beta_used;
    c.record("beta", beta);
    const SpectrumParams p = SpectrumParams::from_beta(osc, beta);

    std::vector<double> grid;
    const auto& in = c.input();
    if (in.has("grid_start") || in.has("grid_stop") || in.has("grid_points") || in.has("grid_spacing")) {
        GridSpec g;
        g.start = c.quantity("grid_start", Quantity::AngularFrequency, 1e-3 * osc.omega_q());
        g.stop = c.quantity("grid_stop", Quantity::AngularFrequency, 1e3 * osc.omega_q());
        g.count = c.integer("grid_points", 2000);
        g.spacing = parse_spacing(c.text("grid_spacing", "log"));
        grid = make_grid(g);
    } else {
        grid = default_grid(p);
    }
    const OutputSpectrum qm = evaluate(Prescription::QM, grid, p);
    const OutputSpectrum sel = evaluate(pres, grid, p);

    std::ostringstream csv;
    csv << "omega_rad_s,s_qm,s_" << to_string(pres) << "\n";
    for (std::size_t i = 0; i < grid.size(); ++i) {
        csv << format_double(grid[i]) << ',' << format_double(qm.values[i]) << ','
            << format_double(sel.values[i]) << '\n';
    }
    c.write(c.file_name("", "csv"), csv.str());

    Json j = c.envelope();
    j["prescription"] = std::string(to_string(pres));
    j["omega_q"] = osc.omega_q();
    j["beta"] = beta;
    j["gamma_sq"] = p.gamma_sq();
    j["well_resolved"] = sel.well_resolved;
    Json feature = Json::object();
    if (pres == Prescription::QM) {
        double dev = 0.0;
        const double base = s_qm(osc.omega_q(), p);
        for (int k = -100; k <= 100; ++k) {
            const double w = osc.omega_q() + 10.0 * osc.gamma_m * k / 100.0;
            dev = std::max(dev, std::abs(s_qm(w, p) / base - 1.0));
        }
        feature["expected"] = nullptr;
        feature["max_relative_deviation_10_gamma"] = dev;
    } else {
        feature["expected"] = to_json(pres == Prescription::Pre ? pre_feature(p) : post_feature(p));
    }
    feature["extracted"] = to_json(extract_feature(pres, p, default_search_half_width(pres, p)));
    j["feature"] = feature;
    c.write_config();
    c.emit_json(j);
}

void cmd_dynamics(Context& c) {
    ExperimentConfig e = resolve_experiment(c, "pre");
    c.set_seed(c.integer("seed", 1));
    OscillatorConfig osc;
    osc.mass = e.mass;
    osc.omega_cm = e.omega_cm;
    osc.omega_sn = e.resolved_omega_sn();
    const double wq = osc.omega_q();
    if (!(wq > 0.0)) throw ConfigError("w_cm and w_sn are both zero");
    const double w_ref = osc.omega_cm > 0.0 ? osc.omega_cm : wq;
    const double t_final = c.quantity("t_final", Quantity::Time, 100.0 * constants::two_pi / w_ref);
    const double dt = c.quantity("dt", Quantity::Time, default_time_step(osc));
    const std::string integ = c.text("integrator", "rk4");
    EvolveOptions opt;
    if (integ == "rk4") {
        opt.integrator = Integrator::RungeKutta4;
    } else if (integ == "exact") {
        opt.integrator = Integrator::ExactPropagator;
    } else {
        throw ConfigError("integrator must be rk4 or exact");
    }
    const double steps = std::round(t_final / dt);
    opt.output_stride = c.integer("stride", static_cast<std::uint64_t>(std::max(1.0, std::ceil(steps / 20000.0))));
    const double zp = std::sqrt(constants::hbar / (2.0 * osc.mass * w_ref));
    const double x0 = c.quantity("x0", Quantity::Dimensionless, 10.0 * zp);
    const double p0 = c.quantity("p0", Quantity::Dimensionless, 0.0);
    const double r = c.quantity("squeeze", Quantity::Dimensionless, 0.0);
    const GaussianState s0 = GaussianState::squeezed(osc.mass, w_ref, r, x0, p0);

    const MomentTrajectory traj = evolve_moments(s0, osc, t_final, dt, opt);
    std::ostringstream csv;
    write_trajectory_csv(csv, traj);
    c.write(c.file_name("", "csv"), csv.str());

    double drift = 0.0, drift_no_half = 0.0;
    const double e0 = traj.energy.front();
    const double f0 = energy_without_half(traj.states.front(), osc);
    for (std::size_t i = 0; i < traj.states.size(); ++i) {
        drift = std::max(drift, std::abs(traj.energy[i] / e0 - 1.0));
        drift_no_half = std::max(drift_no_half, std::abs(energy_without_half(traj.states[i], osc) / f0 - 1.0));
    }
    Json j = c.envelope();
    j["omega_cm"] = osc.omega_cm;
    j["omega_sn"] = osc.omega_sn;
    j["omega_q"] = wq;
    j["samples"] = traj.times.size();
    j["mean_rotation_frequency"] = mean_rotation_frequency(traj, osc);
    const double ell = ellipse_rotation_frequency(traj, osc);
    j["ellipse_rotation_frequency"] = std::isfinite(ell) ? Json(ell) : Json(nullptr);
    j["energy_relative_drift"] = drift;
    j["energy_without_half_relative_drift"] = drift_no_half;
    c.write_config();
    c.emit_json(j);
}

BasebandModel resolve_model(Context& c, const std::string& kind_key, const std::string& default_kind) {
    BasebandModel m;
    m.kind = parse_baseband_kind(c.text(kind_key, default_kind));
    m.amplitude = m.kind == BasebandKind::Flat ? 0.0 : c.quantity("amp", Quantity::Dimensionless, 0.62);
    m.fwhm = c.quantity("fwhm", Quantity::AngularFrequency, 1.0);
    validate(m);
    return m;
}

void cmd_synth(Context& c) {
    const BasebandModel m = resolve_model(c, "model", "flat");
    const double duration = c.quantity("duration", Quantity::Time, 200.0);
    const double dt = c.quantity("dt", Quantity::Time, 0.14);
    c.set_seed(c.integer("seed", 1));
    const BasebandSeries s = gen_baseband(m, duration, dt, c.seed());
    std::ostringstream csv;
    write_series_csv(csv, s);
    c.write(c.file_name("", "csv"), csv.str());
    double var = 0.0;
    for (const double v : s.samples) var += v * v;
    var /= static_cast<double>(s.samples.size());
    Json j = c.envelope();
    j["model"] = to_json(m);
    j["n"] = s.samples.size();
    j["dt"] = dt;
    j["sample_variance"] = var;
    j["target_variance"] = target_autocovariance(m, 0.0, dt);
    c.write_config();
    c.emit_json(j);
}

void cmd_detect(Context& c) {
    c.require("amp");
    const std::string truth = c.text("truth", "both");
    const std::string default_kind = (truth == "peak" || truth == "dip") ? truth : "dip";
    const BasebandModel alt = resolve_model(c, "kind", default_kind);
    if (alt.kind == BasebandKind::Flat) throw ConfigError("alternative model must be peak or dip");
    if (truth != "both" && truth != "flat" && parse_baseband_kind(truth) != alt.kind) {
        throw ConfigError("truth must be flat, both or the alternative kind");
    }
    const double duration = c.quantity("duration", Quantity::Time, 200.0);
    const double dt = c.quantity("dt", Quantity::Time, 0.14);
    const double y_th = c.quantity("yth", Quantity::Dimensionless, 2.0);
    MonteCarlo mc;
    mc.n_trials = c.integer("n", 10000);
    mc.master_seed = c.integer("seed", 1);
    mc.jobs = c.jobs();
    c.set_seed(mc.master_seed);
    const HypothesisPair pair = HypothesisPair::against(alt);

    Json reports = Json::array();
    if (truth == "both" || truth != "flat") reports.push_back(to_json(outcome_probs(alt, pair, duration, dt, y_th, mc)));
    if (truth == "both" || truth == "flat") {
        reports.push_back(to_json(outcome_probs(BasebandModel::flat(), pair, duration, dt, y_th, mc)));
    }
    Json j = c.envelope();
    j["reports"] = reports;
    c.write_config();
    c.emit_json(j);
}

void cmd_taumin(Context& c) {
    c.require("kind");
    c.require("amp");
    const BasebandModel alt = resolve_model(c, "kind", "dip");
    if (alt.kind == BasebandKind::Flat) throw ConfigError("kind must be peak or dip");
    const double p = c.quantity("p", Quantity::Percent, 0.1);
    const double dt = c.quantity("dt", Quantity::Time, 0.14);
    TauMinOptions opt;
    opt.mc.n_trials = c.integer("n", 10000);
    opt.mc.master_seed = c.integer("seed", 1);
    opt.mc.jobs = c.jobs();
    opt.tolerance = c.quantity("tolerance", Quantity::Dimensionless, 0.05);
    opt.max_duration = c.quantity("cap", Quantity::Time, 1e5 / alt.fwhm);
    if (auto s = c.optional_quantity("start", Quantity::Time)) opt.start_duration = *s;
    c.set_seed(opt.mc.master_seed);

    const TauMinResult r = tau_min(HypothesisPair::against(alt), p, dt, opt);
    std::ostringstream csv;
    write_sweep_csv(csv, r.history);
    c.write(c.file_name("_sweep", "csv"), csv.str());
    Json j = c.envelope();
    j["alt_model"] = to_json(alt);
    j["result"] = to_json(r);
    c.write_config();
    c.emit_json(j);
}

void cmd_feasibility(Context& c) {
    const std::string regime = c.text("regime", "pre");
    if (regime != "pre" && regime != "post") throw ConfigError("regime must be pre or post");
    ExperimentConfig e = resolve_experiment(c, regime);
    e.confidence_p = c.quantity("p", Quantity::Percent, 0.1);
    c.set_seed(c.integer("seed", 1));
    const FeasibilityReport r = regime == "pre" ? pre_report(e) : post_report(e);
    Json j = c.envelope();
    j["report"] = to_json(r);
    if (regime == "post") {
        const auto points = c.integer("beta_points", 801);
        const BetaCurve curve = optimize_beta(r.gamma_sq, r.gamma_m, e.confidence_p, points);
        std::ostringstream csv;
        csv << "beta,depth,tau_s\n";
        for (std::size_t i = 0; i < curve.beta.size(); ++i) {
            csv << format_double(curve.beta[i]) << ',' << format_double(curve.depth[i]) << ','
                << format_double(curve.tau[i]) << '\n';
        }
        c.write(c.file_name("_beta", "csv"), csv.str());
        j["optimize_beta"] = {{"beta_opt", curve.beta_opt},
                              {"tau_min_s", curve.tau_min},
                              {"beta_opt_times_gamma_sq", curve.beta_opt * r.gamma_sq}};
    }
    c.write_config();
    c.emit_json(j);
}

void cmd_material(const std::vector<std::string>& names, bool all, const std::string& format,
                  std::ostream& out) {
    std::vector<MaterialRow> rows;
    if (all) {
        rows = builtin_table();
    } else {
        if (names.empty()) throw ConfigError("give an element or --all");
        for (const auto& n : names) rows.push_back(lookup_material(n));
    }
    if (format == "json") {
        Json j = Json::array();
        for (const auto& r : rows) j.push_back(to_json(r));
        out << j.dump(2) << "\n";
    } else if (format == "csv") {
        out << "element,symbol,B_A2,delta_x_zp_m,omega_sn_s1\n";
        for (const auto& r : rows) {
            out << r.spec.name << ',' << r.spec.symbol << ','
                << format_double(r.spec.debye_waller_B / (constants::angstrom * constants::angstrom)) << ','
                << format_double(r.derived.delta_x_zp) << ',' << format_double(r.derived.omega_sn) << '\n';
        }
    } else {
        throw ConfigError("format must be csv or json");
    }
}

struct CommandDef {
    std::string name;
    std::string help;
    std::vector<Param> params;
    bool uses_jobs = false;
    std::function<void(Context&)> action;
};

std::vector<Param> with_experiment(std::vector<Param> extra) {
    std::vector<Param> all = experiment_params;
    all.insert(all.end(), extra.begin(), extra.end());
    return all;
}

std::vector<CommandDef> command_table() {
    const Param seed{"seed", "master seed"};
    return {
        {"spectrum", "output spectra and the signature at w_q",
         with_experiment({{"prescription", "qm, pre or post"},
                          {"grid_start", "first frequency"},
                          {"grid_stop", "last frequency"},
                          {"grid_points", "number of grid points"},
                          {"grid_spacing", "lin or log"},
                          seed}),
         false, cmd_spectrum},
        {"dynamics", "moment evolution of a Gaussian state under self-gravity",
         with_experiment({{"t_final", "evolution time, e.g. 3 h"},
                          {"dt", "time step"},
                          {"integrator", "rk4 or exact"},
                          {"stride", "record every n-th step"},
                          {"x0", "initial mean position, m"},
                          {"p0", "initial mean momentum, kg m/s"},
                          {"squeeze", "squeezing parameter r of the initial state"},
                          seed}),
         false, cmd_dynamics},
        {"synth", "seeded baseband record",
         {{"model", "flat, peak or dip"},
          {"amp", "peak height or dip depth"},
          {"fwhm", "feature width, rad/s"},
          {"duration", "record length, s"},
          {"dt", "sampling step, s"},
          seed},
         false, cmd_synth},
        {"detect", "Monte Carlo outcome probabilities of the likelihood-ratio test",
         {{"truth", "flat, peak, dip or both"},
          {"kind", "alternative model: peak or dip"},
          {"amp", "peak height or dip depth"},
          {"fwhm", "feature width, rad/s"},
          {"duration", "record length, s"},
          {"dt", "sampling step, s"},
          {"yth", "decision threshold"},
          {"n", "trials per hypothesis"},
          seed},
         true, cmd_detect},
        {"taumin", "minimum measurement time search",
         {{"kind", "peak or dip"},
          {"amp", "peak height or dip depth"},
          {"fwhm", "feature width, rad/s"},
          {"p", "confidence level in percent"},
          {"dt", "sampling step, s"},
          {"n", "trials per hypothesis and duration"},
          {"tolerance", "relative duration tolerance"},
          {"cap", "largest duration tried, s"},
          {"start", "first duration tried, s"},
          seed},
         true, cmd_taumin},
        {"feasibility", "scaling-law estimates for an experiment",
         with_experiment({{"regime", "pre or post"},
                          {"p", "confidence level in percent"},
                          {"beta_points", "points of the beta sweep"},
                          seed}),
         false, cmd_feasibility},
    };
}

std::string flag_name(const std::string& key) {
    std::string f = key;
    std::replace(f.begin(), f.end(), '_', '-');
    return "--" + f;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Signatures of semiclassical gravity in torsion-pendulum experiments"};
    app.name("semigrav");
    app.set_version_flag("--version", version_tag());
    app.require_subcommand(1);

    // material
    auto* mat = app.add_subcommand("material", "self-gravity frequency of crystalline materials");
    std::vector<std::string> mat_names;
    bool mat_all = false;
    std::string mat_format = "csv";
    mat->add_option("element", mat_names, "element symbols or names");
    mat->add_flag("--all", mat_all, "all built-in materials");
    mat->add_option("--format", mat_format, "csv or json");

    // Config-driven commands share the same option plumbing.
    const auto commands = command_table();
    std::map<std::string, std::map<std::string, std::string>> values;
    std::map<std::string, CLI::App*> subs;
    std::string config_path;
    std::string output_dir;
    unsigned jobs = 0;
    for (const auto& cmd : commands) {
        auto* sub = app.add_subcommand(cmd.name, cmd.help);
        subs[cmd.name] = sub;
        auto& vals = values[cmd.name];
        for (const auto& p : cmd.params) {
            sub->add_option(flag_name(p.key), vals[p.key], p.help);
        }
        sub->add_option("--config", config_path, "key = value file; flags override it");
        sub->add_option("--output-dir", output_dir, std::string("output directory (default $") + output_dir_env + " or .)");
        if (cmd.uses_jobs) sub->add_option("--jobs", jobs, "Monte Carlo worker threads (0 = all cores)");
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            app.exit(e, out, err);
            return exit_ok;
        }
        err << "error: " << e.what() << "\n";
        const CLI::App* failed = &app;
        for (auto* s : app.get_subcommands()) failed = s;
        err << failed->help();
        return exit_usage;
    }

    CLI::App* active = nullptr;
    try {
        if (mat->parsed()) {
            active = mat;
            cmd_material(mat_names, mat_all, mat_format, out);
            return exit_ok;
        }
        for (const auto& cmd : commands) {
            CLI::App* sub = subs[cmd.name];
            if (!sub->parsed()) continue;
            active = sub;
            ConfigDocument doc;
            if (!config_path.empty()) doc = ConfigDocument::load(config_path);
            for (const auto& p : cmd.params) {
                if (sub->count(flag_name(p.key)) > 0) doc.set(p.key, values[cmd.name][p.key]);
            }
            std::set<std::string> known;
            for (const auto& p : cmd.params) known.insert(p.key);
            doc.require_known(known);

            fs::path dir = output_dir;
            if (dir.empty()) {
                const char* env = std::getenv(output_dir_env);
                dir = env && *env ? fs::path(env) : fs::path(".");
            }
            Context ctx(cmd.name, std::move(doc), dir, jobs, out);
            cmd.action(ctx);
            return exit_ok;
        }
    } catch (const ConfigError& e) {
        err << "error: " << e.what() << "\n";
        if (active) err << active->help();
        return exit_usage;
    } catch (const NotFoundError& e) {
        err << "error: " << e.what() << "\n";
        return exit_usage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return exit_runtime;
    }
    return exit_usage;
}

}  // namespace semigrav::cli
