#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "attractorlab/diagnostics.hpp"
#include "attractorlab/fields.hpp"
#include "attractorlab/solitons.hpp"

// Effective dynamics of a soliton in a slowly varying external potential:
// a relativistic particle with Hamiltonian H = E(Pi) + V_eff(Q), compared
// against tracked PDE solutions.
namespace alab::adiabatic {

struct EffectiveState {
  double Q = 0.0;
  double Pi = 0.0;
  double t = 0.0;
};

/// E(Pi) = sqrt(m0^2 + Pi^2) with the rest mass m0 of the soliton at the
/// frozen frequency omega0.
class KineticMap {
 public:
  explicit KineticMap(double rest_mass);

  double rest_mass() const { return m0_; }
  double energy(double Pi) const;
  /// dE/dPi = Pi / sqrt(m0^2 + Pi^2), the soliton velocity.
  double velocity(double Pi) const;
  /// Inverse of velocity(): m0 v / sqrt(1 - v^2).
  double momentum(double v) const;

 private:
  double m0_;
};

class NoSolitonError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Throws NoSolitonError when no soliton exists at omega0.
KineticMap build_kinetic_map(double omega0, const PolynomialPotential& potential, double kg_mass);

/// How the external potential acts on the effective particle.
enum class Coupling {
  form_factor,  // V_eff(Q) = (1/2) int V(x) phi(x - Q)^2 dx
  point,        // V_eff(Q) = V(Q)
};

/// For V = -A cos(k x) the form factor keeps the cosine shape:
/// V_eff(Q) = -A c(k) cos(k Q), c(k) = (1/2) int cos(k y) phi(y)^2 dy.
ExternalPotential effective_potential(const solitons::Profile& profile, const ExternalPotential& v,
                                      Coupling coupling = Coupling::form_factor);

struct EffectiveConfig {
  double dt = 0.01;
  double t_max = 0.0;
  std::size_t record_every = 1;
};

struct EffectiveTrajectory {
  std::vector<double> t;
  std::vector<double> Q;
  std::vector<double> Pi;
  std::vector<double> H;

  std::size_t size() const { return t.size(); }
  /// Linear interpolation of Q, clamped to the recorded span.
  double Q_at(double time) const;
  /// max |H - H(0)| / |H(0)|.
  double energy_drift() const;
};

/// Leapfrog (kick-drift-kick) for Q' = E'(Pi), Pi' = -V_eff'(Q).
EffectiveTrajectory integrate_effective(double Q0, double Pi0, const KineticMap& kinetic,
                                        const ExternalPotential& v_eff, const EffectiveConfig& cfg);

struct ComparisonRow {
  double t = 0.0;
  double q_pde = 0.0;
  double Q_eff = 0.0;
  double deviation = 0.0;
};

struct AdiabaticReport {
  std::vector<ComparisonRow> rows;
  double max_deviation = 0.0;
  std::optional<double> first_exceed_time;
  double effective_period = 0.0;
  /// Half peak-to-peak of the PDE track over each full period.
  std::vector<double> period_amplitudes;
  /// |A_2 - A_1| / A_1 over the first two periods; empty if fewer than two.
  std::optional<double> amplitude_drift;
};

/// Half peak-to-peak amplitudes of q(t) over successive periods, each period
/// bounded by downward crossings of `center` (with hysteresis).
std::vector<double> period_amplitudes(std::span<const double> t, std::span<const double> q,
                                      double center = 0.0);

/// Throws if the track is shorter than one effective period.
AdiabaticReport compare_adiabatic(const diagnostics::TrackSeries& track,
                                  const EffectiveTrajectory& effective, double threshold = 1.0);

}  // namespace alab::adiabatic
