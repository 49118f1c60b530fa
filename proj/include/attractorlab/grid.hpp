#pragma once

#include <cstddef>
#include <optional>

namespace alab {

/// Uniform 1D mesh x_j = x_min + j*dx, j = 0..size()-1.
class Grid1D {
 public:
  Grid1D() = default;

  /// Builds the mesh covering [x_min, x_max]. The interval length must be an
  /// integer multiple of dx to within 1e-12 relative; throws otherwise.
  static Grid1D from_bounds(double x_min, double x_max, double dx);

  /// Symmetric mesh [-half_width, half_width]; x=0 is a node whenever
  /// half_width/dx is an integer.
  static Grid1D centered(double half_width, double dx);

  double x_min() const { return x_min_; }
  double x_max() const { return x_min_ + static_cast<double>(n_ - 1) * dx_; }
  double dx() const { return dx_; }
  std::size_t size() const { return n_; }
  double x(std::size_t j) const { return x_min_ + static_cast<double>(j) * dx_; }

  /// Distance from x=0 to the nearer domain end.
  double half_width() const;

  /// Index of the node sitting on x=0, if there is one.
  std::optional<std::size_t> origin_index() const;

  /// Nearest node to x, clamped into the mesh.
  std::size_t nearest_index(double x) const;

  bool operator==(const Grid1D&) const = default;

 private:
  Grid1D(double x_min, double dx, std::size_t n) : x_min_(x_min), dx_(dx), n_(n) {}

  double x_min_ = 0.0;
  double dx_ = 1.0;
  std::size_t n_ = 0;
};

}  // namespace alab
