#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "attractorlab/fields.hpp"
#include "attractorlab/potential.hpp"

// Exact treatment of the wave equation coupled to a nonlinear oscillator at
// x = 0. The field splits into the free d'Alembert evolution of the initial
// data plus an outgoing wave s(t - |x|) radiated by the oscillator, and the
// oscillator coordinate y(t) = psi(0, t) obeys a local ODE:
//
//   M y'' = F(y) - 2 y' + 2 w_in'(t),        (M = 0: 2 y' = F(y) + 2 w_in')
//
// where w_in is the free evolution of the initial data evaluated at x = 0.
namespace alab::lamb {

using ScalarFunction = std::function<Complex(double)>;

/// Initial data (psi0, pi0) on the whole line. Derivative and antiderivative
/// are optional; they are approximated numerically when absent.
struct InitialData {
  ScalarFunction psi0;
  ScalarFunction pi0;
  ScalarFunction dpsi0;            // psi0'
  ScalarFunction pi0_primitive;    // any antiderivative of pi0

  static InitialData zero();
};

/// d'Alembert solution of the free wave equation for the given initial data.
class FreeWave {
 public:
  explicit FreeWave(InitialData data);

  Complex value(double x, double t) const;
  /// Time derivative of value(x, t).
  Complex rate(double x, double t) const;

  /// w_in(t) and its derivative; t must be >= 0.
  Complex incoming(double t) const;
  Complex incoming_rate(double t) const;

  const InitialData& data() const { return data_; }

 private:
  Complex integral_pi(double a, double b) const;
  Complex dpsi(double x) const;

  InitialData data_;
};

/// w_in(t) = [psi0(t) + psi0(-t)]/2 + (1/2) int_{-t}^{t} pi0; throws for t < 0.
Complex incoming_wave(const InitialData& data, double t);

struct ReducedConfig {
  double dt = 1e-3;
  double t_max = 0.0;
  std::size_t record_every = 1;
  double blowup_threshold = 1e6;
};

struct ReducedTrajectory {
  std::vector<double> t;
  std::vector<Complex> y;
  std::vector<Complex> ydot;
  std::vector<double> dissipation;  // 2 int_0^t |y'|^2
  double particle_mass = 0.0;

  std::size_t size() const { return t.size(); }
  /// Cubic Hermite interpolation of y, clamped to the recorded span.
  Complex y_at(double time) const;
};

/// RK4 integration of the reduced equation. incoming_rate is w_in'(t)
/// (an empty function means w_in = 0). ydot0 seeds y'(0) when M > 0.
ReducedTrajectory integrate_reduced(const PolynomialPotential& potential,
                                    const ScalarFunction& incoming_rate, Complex y0,
                                    double particle_mass, const ReducedConfig& cfg,
                                    Complex ydot0 = 0.0);

/// Max over t of |2 int|y'|^2 + U(y(t)) - U(y(0)) + M/2 (|y'(t)|^2 - |y'(0)|^2)
///                 - 2 int w_in' . y'|, all integrals by the trapezoid rule.
double dissipation_check(const ReducedTrajectory& traj, const PolynomialPotential& potential,
                         const ScalarFunction& incoming_rate);

/// psi(x, t) = free evolution + s(t - |x|), s(tau) = y(tau) - w_in(tau) for
/// tau > 0 and 0 before the signal from the oscillator arrives.
Complex reconstruct_field(const ReducedTrajectory& traj, const FreeWave& free, double x, double t);

/// Zeros of F; the stationary states are the constants psi = z.
struct StationarySet {
  std::vector<Complex> zeros;
  double tolerance = 1e-3;

  /// Real zeros of the force on [-bound, bound], each with |F(z)| < 1e-10.
  static StationarySet real_zeros(const PolynomialPotential& potential, double bound,
                                  double tolerance = 1e-3);
};

struct AttractionResult {
  bool converged = false;
  Complex limit;
  double distance = 0.0;           // final dist(y, Z)
  std::optional<double> t_settle;  // start of the final settled stretch
};

/// Convergence to Z over the final `window_fraction` of the run: dist(y, Z)
/// and |y'| both below the set's tolerance. Throws if Z is empty or not
/// discrete at the scale of the tolerance.
AttractionResult attraction_check(const ReducedTrajectory& traj, const StationarySet& zeros,
                                  double window_fraction = 0.1);

}  // namespace alab::lamb
