#pragma once

#include <filesystem>
#include <optional>
#include <vector>

#include "attractorlab/adiabatic.hpp"
#include "attractorlab/config.hpp"
#include "attractorlab/diagnostics.hpp"
#include "attractorlab/integrator.hpp"
#include "attractorlab/lamb.hpp"
#include "attractorlab/solitons.hpp"

// Turning a RunConfig into a model, grid and initial state, and running it
// with the standard output layout.
namespace alab::experiment {

struct Setup {
  ModelSpec model;
  Grid1D grid;
  StepperConfig stepper;
  FieldState initial;
  std::optional<solitons::Profile> profile;  // soliton initial data
};

/// Throws config::ConfigError when the initial data cannot be built
/// (no soliton or orbit at the requested frequency, bad init file).
Setup build(const config::RunConfig& cfg);

/// Closed-form initial data of a gaussian init block, for the d'Alembert
/// oracle and the reduced Lamb equation.
lamb::InitialData analytic_initial_data(const config::InitSpec& init);

/// Vacua used by detection when the config gives none: {-1, 1} for
/// Ginzburg-Landau, {0} otherwise.
std::vector<double> detection_vacua(const config::RunConfig& cfg);

/// Exact free-wave state at time t for configs with F = 0 and no mass term.
FieldState dalembert_state(const config::RunConfig& cfg, double t);

/// Writes the oracle snapshots at the run's snapshot cadence.
RunSummary write_dalembert(const config::RunConfig& cfg, const std::filesystem::path& out_dir);

struct EffectiveRun {
  adiabatic::KineticMap kinetic;
  ExternalPotential v_eff;
  adiabatic::EffectiveTrajectory trajectory;
};

/// Effective particle for a soliton setup, started at init.q0 with the
/// field momentum near the soliton.
EffectiveRun effective_run(const Setup& setup, const config::RunConfig& cfg);

/// Writes effective.csv and, when a track is given, comparison.csv. Returns
/// summary entries.
std::vector<std::pair<std::string, std::string>> write_effective(const EffectiveRun& eff,
                                                                 const std::vector<diagnostics::TrackSeries>& tracks,
                                                                 const std::filesystem::path& out_dir,
                                                                 std::vector<ManifestEntry>& manifest);

struct Result {
  RunSummary summary;
  std::vector<diagnostics::TrackSeries> tracks;
  std::vector<diagnostics::DispersionLine> lines;
};

/// Runs the experiment and writes series.csv, snapshots/, summary.txt and
/// any enabled diagnostics into out_dir. Output bytes depend only on cfg.
Result execute(const config::RunConfig& cfg, const std::filesystem::path& out_dir);

}  // namespace alab::experiment
