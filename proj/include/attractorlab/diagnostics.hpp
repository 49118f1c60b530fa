#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "attractorlab/fields.hpp"

// Post-processing of snapshots: coherent-structure detection and tracking,
// internal oscillation frequencies, straight dispersion lines in space-time
// and decay of local seminorms.
namespace alab::diagnostics {

enum class StructureKind { kink, antikink, soliton };

std::string to_string(StructureKind kind);

struct Structure {
  double center = 0.0;
  double width = 0.0;  // full width at half amplitude
  StructureKind kind = StructureKind::soliton;
  /// Solitons: peak |psi|. Kinks: |psi'| at the center.
  double amplitude = 0.0;
  bool merged = false;
};

struct DetectOptions {
  /// Vacuum values. Two or more real vacua select kink detection on Re psi;
  /// a single vacuum selects soliton detection on |psi - vacuum|.
  std::vector<double> vacua{-1.0, 1.0};
  double epsilon = 0.01;
  /// Solitons: minimum peak height of a region.
  double min_peak = 0.1;
};

/// Kinks are transitions between nodes within epsilon of different vacua
/// (center at the mid-level crossing, width between the quarter levels);
/// solitons are connected regions above min_peak / 2 with a peak above
/// min_peak (center at the |psi|^2 centroid, width at half the peak).
/// Structures closer than twice their width are merged and flagged.
std::vector<Structure> detect_structures(const FieldState& snapshot, const DetectOptions& options);

struct Frame {
  double t = 0.0;
  std::vector<Structure> structures;
};

struct TrackSeries {
  int id = 0;
  StructureKind kind = StructureKind::soliton;
  std::vector<double> t;
  std::vector<double> position;
  std::vector<double> width;
  std::vector<double> amplitude;
  double velocity = 0.0;    // least squares over the final half
  double mean_width = 0.0;  // mean over the final half
  bool flagged = false;     // coasted through a gap or an ambiguous match

  std::size_t size() const { return t.size(); }
  double duration() const { return t.empty() ? 0.0 : t.back() - t.front(); }
};

struct LinkOptions {
  double max_speed = 1.0;
  /// Extra gate radius on top of max_speed * dt between frames.
  double slack = 0.5;
  /// Frames a track may go unmatched before it is closed.
  int max_missed = 10;
  /// Tracks with fewer points are dropped.
  std::size_t min_length = 2;
};

/// Greedy nearest-neighbour linking against constant-velocity predictions,
/// gated by max_speed.
std::vector<TrackSeries> link_tracks(std::span<const Frame> frames, const LinkOptions& options = {});

/// Least-squares slope of position(t) over the final half of the track.
double fit_velocity(const TrackSeries& track);

/// Dominant angular frequency of the detrended amplitude series (uniform
/// sampling required). Throws if the track covers fewer than min_cycles
/// periods of the result.
double oscillation_frequency(const TrackSeries& track, double min_cycles = 5.0);
double oscillation_frequency(std::span<const double> t, std::span<const double> values,
                             double min_cycles = 5.0);

struct DispersionLine {
  double speed = 0.0;
  double strength = 0.0;   // number of supporting points
  double intercept = 0.0;  // x at t = 0
};

struct LineOptions {
  double band_lo = 1e-3;
  double band_hi = 1e-2;
  std::vector<double> vacua{-1.0, 1.0};
  double max_speed = 1.5;
  double speed_step = 0.005;
  /// Hough intercept bin; also the initial refinement window, so it should
  /// be no smaller than the thickness of a band strip.
  double intercept_step = 4.0;
  /// Points closer than this to a detected structure are ignored.
  double exclusion = 5.0;
  /// Support tolerance (in x) of the least-squares refinement.
  double tolerance = 1.5;
  std::size_t max_lines = 8;
  /// Lines supported by fewer points are not reported.
  std::size_t min_support = 50;
  /// Only every stride-th node of a snapshot is examined.
  std::size_t stride = 1;
};

/// Space-time points whose distance to the nearest vacuum lies in the band,
/// collected frame by frame so long runs need not keep their snapshots.
class BandPoints {
 public:
  explicit BandPoints(LineOptions options = {});

  void add(const FieldState& snapshot, std::span<const Structure> structures = {});
  std::size_t size() const { return t_.size(); }

  /// Hough transform over (speed, intercept), each peak refined by least
  /// squares on its supporting points, which are then removed. Strongest
  /// line first.
  std::vector<DispersionLine> fit() const;

 private:
  LineOptions options_;
  std::vector<double> t_;
  std::vector<double> x_;
};

std::vector<DispersionLine> dispersion_lines(std::span<const FieldState> snapshots,
                                             std::span<const Frame> structures,
                                             const LineOptions& options = {});

/// seminorm_dist(snapshot, reference, R) for each snapshot.
std::vector<double> seminorm_decay(std::span<const FieldState> snapshots, const FieldState& reference,
                                   double radius);

}  // namespace alab::diagnostics
