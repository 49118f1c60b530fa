#pragma once

#include <array>
#include <numbers>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "attractorlab/fields.hpp"

// Solitons and kinks of psi_tt = psi_xx - m^2 psi + F(psi): profiles,
// Lorentz boosts, rest masses and the linearization about the
// Ginzburg-Landau kink.
namespace alab::solitons {

/// Energy of the Ginzburg-Landau kink tanh(x/sqrt 2): 2 sqrt(2) / 3.
inline constexpr double kink_rest_mass_exact = 2.0 * std::numbers::sqrt2 / 3.0;

/// S(x) = tanh(x / sqrt 2), the static kink of psi_tt = psi_xx + psi - psi^3.
double kink_profile(double x);
double kink_slope(double x);

/// Odd eigenfunction of the kink linearization with eigenvalue 3/2:
/// tanh(x/sqrt 2) / cosh(x/sqrt 2).
double kink_shape_mode(double x);
double kink_shape_mode_slope(double x);

/// Half-amplitude width of the rest kink: 2 sqrt(2) atanh(1/2).
double kink_rest_width();

struct SolitonParams {
  double omega = 0.0;
  double v = 0.0;
  double a = 0.0;
  double theta = 0.0;

  /// Lorentz factor 1 / sqrt(1 - v^2).
  double gamma() const;
  void validate() const;
};

/// Even, positive soliton profile phi_w(x) sampled on [0, x_max] with step h.
class Profile {
 public:
  Profile(double omega, double h, std::vector<double> phi, std::vector<double> dphi,
          double decay_rate);

  double omega() const { return omega_; }
  double step() const { return h_; }
  double x_max() const { return h_ * static_cast<double>(phi_.size() - 1); }
  double amplitude() const { return phi_.front(); }
  /// Analytic tail rate used for extrapolation beyond x_max.
  double decay_rate() const { return decay_rate_; }
  std::span<const double> samples() const { return phi_; }
  std::span<const double> slopes() const { return dphi_; }

  double operator()(double x) const;
  double derivative(double x) const;

  /// Least-squares slope of ln(phi) over the tail where phi is between
  /// 1e-10 and 1e-4 of the amplitude, plus the fit's R^2.
  std::pair<double, double> tail_fit() const;

  /// Half-amplitude width (full width where phi = amplitude/2).
  double half_amplitude_width() const;

 private:
  double omega_;
  double h_;
  std::vector<double> phi_;
  std::vector<double> dphi_;
  double decay_rate_;
};

struct NoSoliton {
  std::string reason;
};

using ProfileResult = std::variant<Profile, NoSoliton>;

struct ProfileOptions {
  double step = 1e-3;
  double tail_floor = 1e-13;  // stop when phi < tail_floor * amplitude
};

/// Energy-integral route: with G(phi) = (m^2 - w^2) phi^2 / 2 + U(phi) - U(0),
/// the profile satisfies phi'^2 / 2 = G(phi), phi(0) = phi* the first positive
/// zero of G. Rejects frequencies without an even (homoclinic) connection.
ProfileResult solve_profile(double omega, const PolynomialPotential& potential, double kg_mass,
                            const ProfileOptions& options = {});

/// Shooting route: integrates phi'' = (m^2 - w^2) phi + U'(phi) from
/// phi(0) = A, phi'(0) = 0 and bisects on A between undershoot and overshoot.
ProfileResult shoot_profile(double omega, const PolynomialPotential& potential, double kg_mass,
                            const ProfileOptions& options = {});

/// max |phi'' - (m^2 - w^2) phi + F(phi)| with phi'' from centered
/// differences of spacing h over [0, x_end].
double profile_residual(const Profile& profile, const PolynomialPotential& potential,
                        double kg_mass, double h, double x_end);

enum class InitialVelocity {
  on_manifold,  // pi is the exact time derivative of the boosted soliton
  at_rest,      // pi = 0 (the field starts with zero velocity)
};

/// psi(x,t) = e^{i theta} e^{-i w gamma (t - v (x-a))} phi(gamma (x - a - v t)).
FieldState boost(const Profile& profile, const SolitonParams& params, const Grid1D& grid,
                 double t = 0.0, InitialVelocity velocity = InitialVelocity::on_manifold);

/// sign * S(gamma (x - a - v t)) plus an optional excitation of the shape mode
/// of amplitude shape_amplitude, Lorentz-transformed with the kink.
FieldState boost_kink(const SolitonParams& params, const Grid1D& grid, double t = 0.0,
                      int sign = 1, double shape_amplitude = 0.0);

/// m0(w): energy of the standing soliton e^{-i w t} phi(x).
double rest_mass(const Profile& profile, const PolynomialPotential& potential, double kg_mass);

/// Trapezoid energy of the sampled rest kink on [-half_width, half_width].
double kink_rest_mass(double half_width = 40.0, double dx = 0.01);

struct KinkSpectrum {
  std::array<double, 2> analytic{0.0, 1.5};
  double internal_frequency = 0.0;       // sqrt(3/2)
  std::array<double, 2> numerical{};     // two smallest eigenvalues found
  double continuum_edge = 0.0;           // smallest eigenvalue above 3/2
};

/// Eigenvalues of H = -d^2/dx^2 + 2 - 3 / cosh^2(x / sqrt 2) on
/// [-half_width, half_width] (Dirichlet) by shifted inverse iteration.
KinkSpectrum linearized_kink_spectrum(double half_width = 40.0, double dx = 0.01);

/// Group velocity sqrt(w^2 - 2) / |w| of linear waves about the vacua +-1;
/// empty inside the gap |w| < sqrt 2.
std::optional<double> group_velocity(double omega);

}  // namespace alab::solitons
