#ifndef GEOLOC_FISHEYE_HPP
#define GEOLOC_FISHEYE_HPP

#include "geoloc/geometry.hpp"

namespace geoloc {

// Lens-plane coordinates (image coordinate system I), lens units.
struct LensPoint {
  double x = 0.0;
  double y = 0.0;
};

// Pixel coordinates (image coordinate system II), origin at the top-left
// corner. Out-of-frame values are legal; FOV enforcement happens in project().
struct PixelPoint {
  double u = 0.0;
  double v = 0.0;
};

// Radially symmetric fisheye model: r(theta) is an odd polynomial of the
// incidence angle, r in lens units, pixels per lens unit mu/mv, principal
// point (u0, v0) in pixels.
class CameraIntrinsics {
 public:
  CameraIntrinsics(double u0, double v0, double mu, double mv,
                   std::array<double, 5> k, double theta_max, int width,
                   int height);

  double u0() const { return u0_; }
  double v0() const { return v0_; }
  double mu() const { return mu_; }
  double mv() const { return mv_; }
  const std::array<double, 5>& k() const { return k_; }
  double theta_max() const { return theta_max_; }
  int width() const { return width_; }
  int height() const { return height_; }

  // Largest lens radius the model images, r(theta_max).
  double r_max() const { return r_max_; }

 private:
  double u0_, v0_, mu_, mv_;
  std::array<double, 5> k_;
  double theta_max_;
  int width_, height_;
  double r_max_;
};

// u0=320, v0=240, mu=mv=188, k1=3.55, k2=0.03, theta_max=75 deg, 640x480.
CameraIntrinsics default_intrinsics();

// r(theta) = k1*theta + k2*theta^3 + k3*theta^5 + k4*theta^7 + k5*theta^9,
// Horner in theta^2. Throws DomainError outside [0, theta_max].
double r_of_theta(const CameraIntrinsics& c, double theta);

// Unique theta in [0, theta_max] with r_of_theta(theta) = r, to 1e-12 rad.
// Safeguarded Newton on the bracket with bisection fallback.
double theta_of_r(const CameraIntrinsics& c, double r);

PixelPoint lens_to_pixel(const CameraIntrinsics& c, const LensPoint& p);
LensPoint pixel_to_lens(const CameraIntrinsics& c, const PixelPoint& p);

// Full forward chain ground -> world -> camera -> lens -> pixel.
// Throws DomainError for targets behind the camera or outside the FOV.
PixelPoint project(const CameraIntrinsics& c, const CameraPose& pose,
                   const GroundPoint& g);

// Inverse of the lens model: pixel -> unit incidence ray in the camera frame.
UnitVector3 pixel_to_ray(const CameraIntrinsics& c, const PixelPoint& p);

}  // namespace geoloc

#endif
