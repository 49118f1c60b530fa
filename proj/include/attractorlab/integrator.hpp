#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "attractorlab/fields.hpp"

namespace alab {

/// Raised when a run produces non-finite values; carries the step index.
class NumericalError : public std::runtime_error {
 public:
  NumericalError(const std::string& what, std::size_t step)
      : std::runtime_error(what), step_(step) {}
  std::size_t step() const { return step_; }

 private:
  std::size_t step_;
};

struct StepperConfig {
  double dt = 0.0;
  double t_max = 0.0;
  double cfl_safety = 0.9;
  std::size_t snapshot_every = 1;
  std::size_t series_every = 1;

  /// Throws std::invalid_argument naming the offending values.
  void validate(const Grid1D& grid) const;
  std::size_t total_steps() const;
};

/// Kick-drift-kick leapfrog for all model families. The delta coupling is
/// the weight 1/dx at the x=0 node; a point mass M scales the acceleration
/// there by 1/(1 + M/dx). End nodes are held fixed, so the domain must be
/// padded beyond the light cone of the data.
class Stepper {
 public:
  Stepper(ModelSpec model, const Grid1D& grid, double dt);

  /// One step in place. Accelerations are cached between calls, so the
  /// state must only be modified through this stepper between steps.
  void advance(FieldState& state);

  /// Forget cached accelerations (call after editing the state externally).
  void reset() { primed_ = false; }

  const ModelSpec& model() const { return model_; }
  double dt() const { return dt_; }

  void acceleration(std::span<const Complex> psi, std::span<Complex> acc) const;

  /// The lattice Hamiltonian whose gradient is acceleration(): forward
  /// differences for psi', plain sums for the local terms. Leapfrog keeps it
  /// within O(dt^2) of its initial value.
  double discrete_energy(const FieldState& state) const;

 private:
  ModelSpec model_;
  Grid1D grid_;
  double dt_;
  std::optional<std::size_t> origin_;
  std::vector<double> external_;
  ComplexField acc_;
  bool primed_ = false;
};

/// One leapfrog step as a pure function.
FieldState step(const FieldState& state, const ModelSpec& model, double dt);

/// Outward energy flux through |x| = radius: S(R) - S(-R), S = -Re(conj(pi) psi').
double outward_flux(const FieldState& state, double radius);

struct FluxSample {
  double t = 0.0;
  double flux = 0.0;
};

/// Time integral (trapezoid) of the outward flux samples.
double radiated_energy(std::span<const FluxSample> samples);

struct SeriesRow {
  double t = 0.0;
  Complex psi_origin;
  double energy = 0.0;
  double momentum = 0.0;
  double radiated = 0.0;
};

struct ManifestEntry {
  std::string path;
  std::size_t rows = 0;
};

struct RunSummary {
  std::size_t steps = 0;
  double wall_seconds = 0.0;
  double initial_energy = 0.0;
  double final_energy = 0.0;
  double radiated_energy = 0.0;
  double final_time = 0.0;
  std::vector<ManifestEntry> manifest;
};

/// Output channels for run(). Either callback may be empty.
struct RunSinks {
  std::function<void(const SeriesRow&)> series;
  std::function<void(const FieldState&, std::size_t step)> snapshot;
  /// In-memory observer (diagnostics) called every observe_every steps.
  std::function<void(const FieldState&, std::size_t step)> observe;
  std::size_t observe_every = 0;
};

struct RunOptions {
  /// Radius for the boundary-flux ledger; defaults to 80% of the half-width.
  std::optional<double> radiation_radius;
  /// Check every field value for finiteness at this cadence (steps).
  std::size_t nan_check_every = 64;
};

/// Advances state0 to cfg.t_max. Series rows are emitted at step 0 and every
/// series_every steps (plus the final step); snapshots likewise. Bitwise
/// deterministic for fixed inputs.
RunSummary run(FieldState state0, const ModelSpec& model, const StepperConfig& cfg,
               const RunSinks& sinks, const RunOptions& options = {});

/// The state reached by run() without any outputs.
FieldState evolve(FieldState state, const ModelSpec& model, double dt, std::size_t steps);

}  // namespace alab
