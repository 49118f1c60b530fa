#pragma once

#include <complex>
#include <span>
#include <vector>

namespace alab {

using Complex = std::complex<double>;

/// U(psi) = sum_j u_j |psi|^{2j}. The force is F = -grad_{conj psi} U
/// = -2 u'(|psi|^2) psi, which is U(1)-equivariant by construction.
class PolynomialPotential {
 public:
  PolynomialPotential() = default;
  explicit PolynomialPotential(std::vector<double> coeffs);

  /// (|psi|^2 - 1)^2 / 4: zero at the vacua |psi| = 1, F(psi) = psi - |psi|^2 psi.
  static PolynomialPotential ginzburg_landau();

  /// a|psi|^{2m} - b|psi|^{2n} with a, b > 0 and m > n >= 1.
  static PolynomialPotential two_term(double a, int m_exp, double b, int n_exp);

  std::span<const double> coeffs() const { return coeffs_; }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool empty() const { return coeffs_.empty(); }

  /// u(s) and its derivatives in s = |psi|^2.
  double u(double s) const;
  double du(double s) const;
  double d2u(double s) const;

  double value(Complex psi) const { return u(std::norm(psi)); }
  Complex force(Complex psi) const { return -2.0 * du(std::norm(psi)) * psi; }

  /// Restriction to real psi: U(phi), dU/dphi, d^2U/dphi^2.
  double value_real(double phi) const { return u(phi * phi); }
  double slope_real(double phi) const { return 2.0 * du(phi * phi) * phi; }
  double curvature_real(double phi) const;

  /// u_N > 0 with N >= 2.
  bool strictly_nonlinear() const;
  /// U -> +infinity as |psi| -> infinity.
  bool confining() const;

  bool operator==(const PolynomialPotential&) const = default;

 private:
  std::vector<double> coeffs_;
};

/// The nonlinear force F(psi) = -grad_{conj psi} U(psi).
inline Complex force(const PolynomialPotential& potential, Complex psi) {
  return potential.force(psi);
}

}  // namespace alab
