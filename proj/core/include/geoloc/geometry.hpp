#ifndef GEOLOC_GEOMETRY_HPP
#define GEOLOC_GEOMETRY_HPP

#include <array>
#include <cmath>

#include "geoloc/error.hpp"

namespace geoloc {

// Ground-plane coordinates, meters. x east-aligned, y north-aligned.
struct GroundPoint {
  double x = 0.0;
  double y = 0.0;
};

// Camera-centered world frame, meters. z points from the camera toward the
// ground, so the target plane sits at z = height.
struct WorldPoint {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;
};

// Camera frame, meters, z along the optical axis.
struct CameraPoint {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;
};

struct UnitVector3 {
  double x = 0.0;
  double y = 0.0;
  double z = 1.0;

  double norm() const { return std::sqrt(x * x + y * y + z * z); }
};

// Orthonormal 3x3 matrix with determinant +1, row-major.
struct RotationMatrix {
  std::array<std::array<double, 3>, 3> m{};
};

// Camera height above ground (m) and tilt (rad): the angle between the
// world vertical axis and the optical axis.
struct CameraPose {
  double height = 0.0;
  double tilt = 0.0;

  CameraPose(double height_m, double tilt_rad)
      : height(height_m), tilt(tilt_rad) {
    if (!(height > 0.0))
      throw ConfigError("camera height must be positive");
    if (!(tilt >= 0.0 && tilt < M_PI / 2.0))
      throw ConfigError("camera tilt must lie in [0, pi/2)");
  }
};

// Incidence angle (from +z) and azimuth (full-quadrant, in the xy plane).
struct DirectionAngles {
  double theta = 0.0;  // [0, pi]
  double phi = 0.0;    // (-pi, pi]
};

// Rotation about the y axis by the tilt angle; maps world coordinates into
// camera coordinates.
RotationMatrix tilt_rotation(double tilt);

CameraPoint world_to_camera(const RotationMatrix& r, const WorldPoint& p);

// Applies the inverse rotation (transpose) to a direction vector.
UnitVector3 camera_dir_to_world(const RotationMatrix& r, const UnitVector3& v);

// Extracts (theta, phi) from any nonzero vector. Azimuth of the on-axis ray
// (x = y = 0) is defined as 0. Throws DomainError on a zero vector.
DirectionAngles direction_angles(double x, double y, double z);

inline DirectionAngles direction_angles(const UnitVector3& v) {
  return direction_angles(v.x, v.y, v.z);
}

inline DirectionAngles direction_angles(const CameraPoint& p) {
  return direction_angles(p.x, p.y, p.z);
}

}  // namespace geoloc

#endif
