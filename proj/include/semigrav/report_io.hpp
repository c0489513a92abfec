#pragma once

#include <iosfwd>
#include <string>

#include <json.hpp>

#include "semigrav/detect.hpp"
#include "semigrav/dynamics.hpp"
#include "semigrav/feasibility.hpp"
#include "semigrav/materials.hpp"
#include "semigrav/spectra.hpp"
#include "semigrav/synth.hpp"

namespace semigrav {

using Json = nlohmann::ordered_json;

/// Version of the JSON/CSV layouts written below.
inline constexpr int schema_version = 1;

std::string version_tag();

Json to_json(const MaterialRow& row);
Json to_json(const BasebandModel& m);
Json to_json(const LorentzianFeature& f);
Json to_json(const ExtractedFeature& f);
Json to_json(const DecisionReport& r);
Json to_json(const FitPrediction& f);
Json to_json(const TauMinResult& r);
Json to_json(const FeasibilityReport& r);

/// Header lines "# dt = ...", "# n = ...", "# seed = ...", "# model = ...",
/// then "i,x" rows.
void write_series_csv(std::ostream& os, const BasebandSeries& s);
BasebandSeries read_series_csv(std::istream& is);

/// t,mean_x,mean_p,var_xx,cov_xp,var_pp,energy
void write_trajectory_csv(std::ostream& os, const MomentTrajectory& traj);

/// duration,y_th,p_wrong_null,p_indecision_null,p_wrong_alt,p_indecision_alt,worst
void write_sweep_csv(std::ostream& os, const std::vector<SweepPoint>& points);

/// Shortest round-trip decimal form.
std::string format_double(double v);

}  // namespace semigrav
