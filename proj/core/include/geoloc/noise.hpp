#ifndef GEOLOC_NOISE_HPP
#define GEOLOC_NOISE_HPP

#include <cstdint>
#include <random>

#include "geoloc/fisheye.hpp"
#include "geoloc/geometry.hpp"

namespace geoloc {

// Gaussian measurement-noise configuration. Angles in degrees to match how
// the sensors are specified; conversion to radians happens at sampling time.
struct NoiseSpec {
  double tilt_mean_deg = 37.0;
  double tilt_std_deg = 0.1;
  double height_std_m = 0.5;
  double pixel_std_px = 0.0;  // detection error, off by default

  void validate() const;
};

// Deterministic Gaussian stream. Box-Muller over mt19937_64 draws, two
// uniforms per normal, no caching, so the sequence is a pure function of the
// seed across platforms (std::normal_distribution is not portable).
class GaussianStream {
 public:
  explicit GaussianStream(std::uint64_t seed) : engine_(seed) {}

  // Stream for trial `index` of a run keyed by `master_seed`. Splitmix64
  // mixing keeps neighboring trial streams uncorrelated.
  static GaussianStream for_trial(std::uint64_t master_seed,
                                  std::uint64_t index);

  double normal();  // standard normal draw

 private:
  std::mt19937_64 engine_;
};

// Draw order per trial: tilt, then height (then pixel-u, pixel-v when the
// pixel is perturbed). Golden-file tests depend on this order.
CameraPose sample_noisy_pose(const NoiseSpec& spec, double true_height,
                             GaussianStream& rng);

PixelPoint sample_noisy_pixel(const NoiseSpec& spec, const PixelPoint& p,
                              GaussianStream& rng);

// First-order low-pass filter u_k = alpha*x + (1-alpha)*u_{k-1}. The first
// sample initializes the output directly, avoiding a transient from zero.
class LowPassFilter {
 public:
  explicit LowPassFilter(double alpha);
  LowPassFilter(double alpha, double initial_output);

  double step(double x);

  double alpha() const { return alpha_; }
  bool initialized() const { return initialized_; }

 private:
  double alpha_;
  double prev_output_ = 0.0;
  bool initialized_ = false;
};

}  // namespace geoloc

#endif
