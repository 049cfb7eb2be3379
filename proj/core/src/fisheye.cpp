#include "geoloc/fisheye.hpp"

#include <algorithm>
#include <cmath>

namespace geoloc {

namespace {

double poly_eval(const std::array<double, 5>& k, double theta) {
  const double t2 = theta * theta;
  return theta *
         (k[0] + t2 * (k[1] + t2 * (k[2] + t2 * (k[3] + t2 * k[4]))));
}

double poly_deriv(const std::array<double, 5>& k, double theta) {
  const double t2 = theta * theta;
  return k[0] +
         t2 * (3.0 * k[1] +
               t2 * (5.0 * k[2] + t2 * (7.0 * k[3] + t2 * 9.0 * k[4])));
}

}  // namespace

CameraIntrinsics::CameraIntrinsics(double u0, double v0, double mu, double mv,
                                   std::array<double, 5> k, double theta_max,
                                   int width, int height)
    : u0_(u0), v0_(v0), mu_(mu), mv_(mv), k_(k), theta_max_(theta_max),
      width_(width), height_(height) {
  if (!(mu_ > 0.0) || !(mv_ > 0.0))
    throw ConfigError("pixel scales mu, mv must be positive");
  if (!(theta_max_ > 0.0 && theta_max_ <= M_PI / 2.0))
    throw ConfigError("theta_max must lie in (0, pi/2]");
  // r(theta) must be strictly increasing on [0, theta_max] or inversion is
  // ill-posed; check r'(theta) > 0 on a dense grid.
  constexpr int kGrid = 1024;
  for (int i = 0; i <= kGrid; ++i) {
    const double t = theta_max_ * static_cast<double>(i) / kGrid;
    if (!(poly_deriv(k_, t) > 0.0))
      throw ConfigError("r(theta) is not strictly increasing on [0, theta_max]");
  }
  r_max_ = poly_eval(k_, theta_max_);
}

CameraIntrinsics default_intrinsics() {
  return CameraIntrinsics(320.0, 240.0, 188.0, 188.0,
                          {3.55, 0.03, 0.0, 0.0, 0.0},
                          75.0 * M_PI / 180.0, 640, 480);
}

double r_of_theta(const CameraIntrinsics& c, double theta) {
  if (!(theta >= 0.0 && theta <= c.theta_max()))
    throw DomainError("incidence angle out of range");
  return poly_eval(c.k(), theta);
}

double theta_of_r(const CameraIntrinsics& c, double r) {
  if (!(r >= 0.0) || r > c.r_max())
    throw DomainError("radius outside lens image");
  if (r == 0.0)
    return 0.0;

  double lo = 0.0;
  double hi = c.theta_max();
  double theta = std::min(r / c.k()[0], hi);  // first-order initial guess
  for (int iter = 0; iter < 100; ++iter) {
    const double f = poly_eval(c.k(), theta) - r;
    if (f > 0.0)
      hi = theta;
    else
      lo = theta;
    const double step = f / poly_deriv(c.k(), theta);
    double next = theta - step;
    if (!(next > lo && next < hi))
      next = 0.5 * (lo + hi);  // Newton left the bracket
    if (std::abs(next - theta) < 1e-12)
      return next;
    theta = next;
  }
  return theta;
}

PixelPoint lens_to_pixel(const CameraIntrinsics& c, const LensPoint& p) {
  return {c.mu() * p.x + c.u0(), c.mv() * p.y + c.v0()};
}

LensPoint pixel_to_lens(const CameraIntrinsics& c, const PixelPoint& p) {
  return {(p.u - c.u0()) / c.mu(), (p.v - c.v0()) / c.mv()};
}

PixelPoint project(const CameraIntrinsics& c, const CameraPose& pose,
                   const GroundPoint& g) {
  const WorldPoint world{g.x, g.y, pose.height};
  const CameraPoint cam = world_to_camera(tilt_rotation(pose.tilt), world);
  if (cam.z <= 0.0)
    throw DomainError("target behind camera");
  const DirectionAngles a = direction_angles(cam);
  if (a.theta > c.theta_max())
    throw DomainError("target outside field of view");
  const double r = r_of_theta(c, a.theta);
  return lens_to_pixel(c, {r * std::cos(a.phi), r * std::sin(a.phi)});
}

UnitVector3 pixel_to_ray(const CameraIntrinsics& c, const PixelPoint& p) {
  const LensPoint lens = pixel_to_lens(c, p);
  const double r = std::sqrt(lens.x * lens.x + lens.y * lens.y);
  const double theta = theta_of_r(c, r);  // throws if r is off the lens
  const double phi = (r == 0.0) ? 0.0 : std::atan2(lens.y, lens.x);
  return {std::cos(phi) * std::sin(theta), std::sin(phi) * std::sin(theta),
          std::cos(theta)};
}

}  // namespace geoloc
