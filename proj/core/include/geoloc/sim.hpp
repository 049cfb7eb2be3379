#ifndef GEOLOC_SIM_HPP
#define GEOLOC_SIM_HPP

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "geoloc/localize.hpp"
#include "geoloc/noise.hpp"

namespace geoloc {

// One full experiment: repeated noisy localization of a fixed target,
// followed by low-pass filtering of the X and Y series.
struct SimConfig {
  CameraIntrinsics intrinsics = default_intrinsics();
  CameraPose true_pose{10.0, 37.0 * M_PI / 180.0};
  GroundPoint target{4.0, 3.0};
  NoiseSpec noise;
  double alpha = 0.125;
  int trials = 90;
  std::uint64_t seed = 1;

  void validate() const;
};

struct TrialRecord {
  int index = 0;
  double noisy_tilt = 0.0;    // radians
  double noisy_height = 0.0;  // meters
  std::optional<GroundPoint> raw;
  std::optional<GroundPoint> filtered;
  std::string failure;  // empty on success

  bool ok() const { return failure.empty(); }
};

struct AxisStats {
  double mean_raw = 0.0;
  double mean_filtered = 0.0;
  double var_raw = 0.0;       // population variance
  double var_filtered = 0.0;
};

struct SimStats {
  AxisStats x;
  AxisStats y;
  int failure_count = 0;
  int successes = 0;
};

// Per trial i: stream derived from (seed, i), noisy pose (and optionally
// pixel) sampled, truth pixel projected with the TRUE pose, localization run
// with the noisy measurements. Failed trials are recorded and skipped by the
// filter pass. The record list is a pure function of cfg.
std::vector<TrialRecord> run_simulation(const SimConfig& cfg);

SimStats summarize(const std::vector<TrialRecord>& records);

// CSV, one row per trial, header:
// trial,noisy_tilt_deg,noisy_height_m,raw_x,raw_y,filt_x,filt_y,status
void write_csv(std::ostream& out, const std::vector<TrialRecord>& records);

// Four-column summary table (means and variances, raw vs filtered) plus the
// failure count.
void write_summary(std::ostream& out, const SimStats& stats);

}  // namespace geoloc

#endif
