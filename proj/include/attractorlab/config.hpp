#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "attractorlab/fields.hpp"
#include "attractorlab/integrator.hpp"

// Run configuration: flat `key = value` lines, `#` comments, dotted keys.
namespace alab::config {

/// Every problem found in a config, each naming its line where possible.
class ConfigError : public std::runtime_error {
 public:
  explicit ConfigError(std::vector<std::string> errors);
  const std::vector<std::string>& errors() const { return errors_; }

 private:
  std::vector<std::string> errors_;
};

enum class PotentialKind { none, ginzburg_landau, pop2, polynomial };
enum class InitKind { kink, soliton, orbit, gaussian, two_tone, file };

std::string to_string(PotentialKind kind);
std::string to_string(InitKind kind);

struct PotentialSpec {
  PotentialKind kind = PotentialKind::none;
  std::vector<double> coeffs;  // polynomial
  double a = 0.0;              // pop2: a |psi|^{2 m_exp} - b |psi|^{2 n_exp}
  int m_exp = 0;
  double b = 0.0;
  int n_exp = 0;

  PolynomialPotential build() const;
};

struct InitSpec {
  InitKind kind = InitKind::gaussian;
  double omega = 0.0;
  double v = 0.0;
  double q0 = 0.0;
  double theta = 0.0;
  double amplitude = 0.0;
  double width = 1.0;
  double carrier = 0.0;
  std::string background = "zero";  // zero | kink | antikink | <number>
  int count = 1;
  double spacing = 0.0;
  double omega2 = 0.0;
  double amplitude2 = 0.0;
  std::string file;
  bool on_manifold = false;
  int sign = 1;
  double shape_amplitude = 0.0;
  std::uint64_t seed = 0;  // 0: deterministic bumps; otherwise randomized
};

struct DiagnosticsSpec {
  std::optional<double> radiation_radius;
  bool track = false;
  std::size_t track_every = 100;  // steps
  std::vector<double> vacua;      // empty: chosen from the potential
  double epsilon = 0.01;
  double min_peak = 0.1;
  bool lines = false;
  bool spectrum = false;
  double spectrum_window = 0.25;  // fraction of the run
  double bandwidth = 0.05;
  bool effective = false;
};

struct RunConfig {
  ModelSpec model;
  PotentialSpec potential;
  double x_min = 0.0;
  double x_max = 0.0;
  double dx = 0.0;
  StepperConfig stepper;
  bool snapshots = true;
  std::string output_dir = "out";
  InitSpec init;
  DiagnosticsSpec diagnostics;

  /// Keys given explicitly, in the order read; the serializer writes these
  /// (and only these) in canonical order.
  std::vector<std::string> present;

  Grid1D grid() const;
};

/// Parses and validates; throws ConfigError listing every problem.
RunConfig parse_config(std::string_view text);
RunConfig load_config(const std::string& path);

/// Canonical text: explicitly given keys in canonical order, shortest
/// round-trip numbers. Canonical input round-trips byte for byte.
std::string serialize(const RunConfig& config);

/// All recognised keys in canonical order.
std::vector<std::string> known_keys();

}  // namespace alab::config
