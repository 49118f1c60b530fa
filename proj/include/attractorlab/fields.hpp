#pragma once

#include <complex>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "attractorlab/grid.hpp"
#include "attractorlab/potential.hpp"

namespace alab {

using ComplexField = std::vector<Complex>;

/// Phase-space point (psi, pi) at time t. Fields are always complex; real
/// models keep the imaginary parts at zero.
struct FieldState {
  Grid1D grid;
  ComplexField psi;
  ComplexField pi;
  double t = 0.0;

  static FieldState zeros(const Grid1D& grid, double t = 0.0);

  /// Throws std::invalid_argument on length mismatch or non-finite entries.
  void validate() const;

  /// Largest |Im| over both fields.
  double max_imaginary() const;
};

enum class ModelFamily { lamb, kg_point_oscillator, nlkg };

std::string to_string(ModelFamily family);
ModelFamily parse_family(const std::string& name);

/// V(x) = -amplitude * cos(wavenumber * x).
struct ExternalPotential {
  double amplitude = 0.0;
  double wavenumber = 0.0;

  bool active() const { return amplitude != 0.0; }
  double operator()(double x) const;
  double gradient(double x) const;

  bool operator==(const ExternalPotential&) const = default;
};

/// Which PDE is integrated:
///   lamb                 (1 + M delta) psi_tt = psi_xx + delta(x) F(psi(0))
///   kg_point_oscillator  (1 + M delta) psi_tt = psi_xx - m^2 psi + delta(x) F(psi(0))
///   nlkg                 psi_tt = psi_xx - m^2 psi + F(psi) - V(x) psi
struct ModelSpec {
  ModelFamily family = ModelFamily::nlkg;
  double kg_mass = 0.0;
  double particle_mass = 0.0;
  PolynomialPotential potential;
  ExternalPotential external;

  bool point_coupled() const { return family != ModelFamily::nlkg; }
  void validate() const;

  bool operator==(const ModelSpec&) const = default;
};

/// d/dx with fourth-order centered differences in the interior, second-order
/// centered next to the ends and one-sided second-order at the ends.
ComplexField spatial_derivative(std::span<const Complex> f, double dx);

/// Derivative at a single interior node, same stencil as spatial_derivative.
Complex derivative_at(std::span<const Complex> f, double dx, std::size_t j);

/// Trapezoid-rule Hamiltonian of the model.
double energy(const FieldState& state, const ModelSpec& model);

/// Bulk energy density integrated over |x - center| <= half_width (point
/// terms included when the origin lies inside the window).
double energy_in_window(const FieldState& state, const ModelSpec& model, double center,
                        double half_width);

/// P = -Re int conj(pi) psi' dx.
double momentum(const FieldState& state);
double momentum_in_window(const FieldState& state, double center, double half_width);

/// Value of a field at x=0 (node value or linear interpolation).
Complex value_at_origin(const Grid1D& grid, std::span<const Complex> f);

struct SeminormResult {
  double value = 0.0;
  double radius = 0.0;   // radius actually used
  bool clamped = false;  // requested radius exceeded the domain half-width
};

/// ||psi_a' - psi_b'||_R + |psi_a(0) - psi_b(0)| + ||pi_a - pi_b||_R.
SeminormResult seminorm_dist(const FieldState& a, const FieldState& b, double radius);

/// sum_{R=1}^{R_max} 2^{-R} s_R / (1 + s_R), R_max = floor(half-width).
double metric_dist(const FieldState& a, const FieldState& b);

/// Same sum truncated at an explicit R_max (clamped to the domain).
double metric_dist(const FieldState& a, const FieldState& b, int r_max);

}  // namespace alab
