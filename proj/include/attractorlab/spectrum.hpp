#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "attractorlab/potential.hpp"

namespace alab {

/// Power spectrum with signed angular frequencies in ascending order. A
/// sample sequence exp(i f t) peaks at +f, so an orbit exp(-i w t) shows up
/// at -w.
struct Spectrum {
  std::vector<double> freq;
  std::vector<double> power;
  double bin_width = 0.0;  // 2*pi / (N dt) of the unpadded window
};

/// Hann-windowed DFT of uniformly spaced samples, zero-padded by pad_factor.
Spectrum power_spectrum(std::span<const Complex> samples, double dt, std::size_t pad_factor = 4);

struct SpectralPeak {
  double frequency = 0.0;
  double power = 0.0;
};

/// Largest bin (optionally restricted to |f| in [f_min, f_max]), refined by
/// a parabola through the log-power of its neighbours.
std::optional<SpectralPeak> dominant_peak(const Spectrum& spectrum, double f_min = 0.0,
                                          double f_max = 1e300);

/// Fraction of the total power within +-bandwidth of `center`.
double band_fraction(const Spectrum& spectrum, double center, double bandwidth);

/// Removes the least-squares line from a real series.
std::vector<double> detrend(std::span<const double> values);

}  // namespace alab
