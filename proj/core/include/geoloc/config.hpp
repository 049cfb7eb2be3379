#ifndef GEOLOC_CONFIG_HPP
#define GEOLOC_CONFIG_HPP

#include <string>
#include <vector>

#include "geoloc/sim.hpp"

namespace geoloc {

// Flat view of every tunable constant, in the units the config file uses
// (degrees for angles). Defaults encode the reference experiment: 640x480
// frame, k1=3.55, k2=0.03, 37 deg mean tilt, 0.1 deg / 0.5 m sensor noise,
// alpha=0.125, 90 trials, target (4, 3) at 10 m height.
struct AppConfig {
  // camera.*
  double u0 = 320.0;
  double v0 = 240.0;
  double mu = 188.0;
  double mv = 188.0;
  double k1 = 3.55, k2 = 0.03, k3 = 0.0, k4 = 0.0, k5 = 0.0;
  double theta_max_deg = 75.0;
  int width = 640;
  int height = 480;
  // pose.*
  double pose_height_m = 10.0;
  double pose_tilt_deg = 37.0;
  // target.*
  double target_x = 4.0;
  double target_y = 3.0;
  // noise.*
  double tilt_mean_deg = 37.0;
  double tilt_std_deg = 0.1;
  double height_std_m = 0.5;
  double pixel_std_px = 0.0;
  // filter.*, top level
  double alpha = 0.125;
  int trials = 90;
  std::uint64_t seed = 1;

  CameraIntrinsics intrinsics() const;
  CameraPose pose() const;
  GroundPoint target() const;
  NoiseSpec noise() const;
  SimConfig sim() const;
};

// Loads a JSON config file with sections camera, pose, target, noise, filter
// and top-level trials/seed. Missing keys keep their defaults; unknown or
// mistyped keys raise ConfigError naming the offending key.
AppConfig load_config(const std::string& path);

// Applies a "section.key=value" override, same key names as the file.
void apply_override(AppConfig& cfg, const std::string& assignment);

}  // namespace geoloc

#endif
