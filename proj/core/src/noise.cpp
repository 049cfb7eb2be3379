#include "geoloc/noise.hpp"

#include <algorithm>
#include <cmath>

#include "geoloc/error.hpp"

namespace geoloc {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// 64-bit word -> double in (0, 1).
double to_open_unit(std::uint64_t x) {
  return (static_cast<double>(x >> 11) + 0.5) * 0x1.0p-53;
}

}  // namespace

void NoiseSpec::validate() const {
  if (tilt_std_deg < 0.0 || height_std_m < 0.0 || pixel_std_px < 0.0)
    throw ConfigError("noise standard deviations must be nonnegative");
}

GaussianStream GaussianStream::for_trial(std::uint64_t master_seed,
                                         std::uint64_t index) {
  return GaussianStream(splitmix64(master_seed ^ splitmix64(index)));
}

double GaussianStream::normal() {
  const double u1 = to_open_unit(engine_());
  const double u2 = to_open_unit(engine_());
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * M_PI * u2);
}

CameraPose sample_noisy_pose(const NoiseSpec& spec, double true_height,
                             GaussianStream& rng) {
  const double deg = M_PI / 180.0;
  const double tilt = (spec.tilt_mean_deg + spec.tilt_std_deg * rng.normal()) * deg;
  const double height =
      std::max(true_height + spec.height_std_m * rng.normal(), 0.01);
  return CameraPose(height, tilt);
}

PixelPoint sample_noisy_pixel(const NoiseSpec& spec, const PixelPoint& p,
                              GaussianStream& rng) {
  if (spec.pixel_std_px == 0.0)
    return p;
  return {p.u + spec.pixel_std_px * rng.normal(),
          p.v + spec.pixel_std_px * rng.normal()};
}

LowPassFilter::LowPassFilter(double alpha) : alpha_(alpha) {
  if (!(alpha > 0.0 && alpha <= 1.0))
    throw ConfigError("filter alpha must lie in (0, 1]");
}

LowPassFilter::LowPassFilter(double alpha, double initial_output)
    : LowPassFilter(alpha) {
  prev_output_ = initial_output;
  initialized_ = true;
}

double LowPassFilter::step(double x) {
  if (!initialized_) {
    initialized_ = true;
    prev_output_ = x;
  } else {
    prev_output_ = alpha_ * x + (1.0 - alpha_) * prev_output_;
  }
  return prev_output_;
}

}  // namespace geoloc
