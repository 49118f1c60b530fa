#pragma once

#include <optional>
#include <span>

#include "attractorlab/fields.hpp"
#include "attractorlab/spectrum.hpp"

// Stationary orbits psi = exp(-i w t) C exp(-kappa |x|) of the Klein-Gordon
// field coupled to a U(1)-invariant oscillator at x = 0, and the diagnostics
// used to watch solutions approach the manifold of such orbits.
namespace alab::orbits {

struct StationaryOrbit {
  double omega = 0.0;
  double kappa = 0.0;  // sqrt(m^2 - w^2)
  Complex amplitude;   // C, real and positive from solve_orbit

  Complex profile(double x) const;
};

/// Solves 2 kappa C = F(C) for the smallest C > 0 (bisection after a scan of
/// [1e-8, C_max]); empty when no orbit with this frequency exists.
std::optional<StationaryOrbit> solve_orbit(double omega, const PolynomialPotential& potential,
                                           double kg_mass);

/// psi = e^{i theta} phi_w, pi = -i w e^{i theta} phi_w on the grid.
FieldState orbit_state(const StationaryOrbit& orbit, double theta, const Grid1D& grid);

struct SpectrumReport {
  Spectrum spectrum;
  double dominant_frequency = 0.0;
  double concentration = 0.0;  // in [0, 1]
  double window_span = 0.0;
  double bandwidth = 0.0;
};

/// Spectrum of the final `window_span` time units of a uniformly sampled
/// series. Throws if the window is longer than the series.
SpectrumReport spectral_report(std::span<const Complex> series, double dt, double window_span,
                               double bandwidth = 0.05);

struct ManifoldDistance {
  double distance = 0.0;
  double omega = 0.0;
  double theta = 0.0;
  bool zero_state = false;  // the nearest member is psi = 0
};

struct ManifoldSearch {
  double omega_step = 0.01;
  int theta_samples = 64;
};

/// inf over stationary orbits (and the zero state) of seminorm_dist(state, ., R).
ManifoldDistance manifold_distance(const FieldState& state, const PolynomialPotential& potential,
                                   double kg_mass, double radius, const ManifoldSearch& search = {});

}  // namespace alab::orbits
