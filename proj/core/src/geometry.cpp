#include "geoloc/geometry.hpp"

#include <algorithm>

namespace geoloc {

RotationMatrix tilt_rotation(double tilt) {
  const double c = std::cos(tilt);
  const double s = std::sin(tilt);
  RotationMatrix r;
  r.m = {{{c, 0.0, -s}, {0.0, 1.0, 0.0}, {s, 0.0, c}}};
  return r;
}

CameraPoint world_to_camera(const RotationMatrix& r, const WorldPoint& p) {
  return {r.m[0][0] * p.x + r.m[0][1] * p.y + r.m[0][2] * p.z,
          r.m[1][0] * p.x + r.m[1][1] * p.y + r.m[1][2] * p.z,
          r.m[2][0] * p.x + r.m[2][1] * p.y + r.m[2][2] * p.z};
}

UnitVector3 camera_dir_to_world(const RotationMatrix& r, const UnitVector3& v) {
  // Transpose multiply: the inverse of a rotation is its transpose.
  return {r.m[0][0] * v.x + r.m[1][0] * v.y + r.m[2][0] * v.z,
          r.m[0][1] * v.x + r.m[1][1] * v.y + r.m[2][1] * v.z,
          r.m[0][2] * v.x + r.m[1][2] * v.y + r.m[2][2] * v.z};
}

DirectionAngles direction_angles(double x, double y, double z) {
  const double n = std::sqrt(x * x + y * y + z * z);
  if (n == 0.0)
    throw DomainError("degenerate direction");
  DirectionAngles a;
  a.theta = std::acos(std::clamp(z / n, -1.0, 1.0));
  // atan2 keeps the quadrant; the arccos form would fold negative y onto
  // positive and mirror the azimuth.
  a.phi = (x == 0.0 && y == 0.0) ? 0.0 : std::atan2(y, x);
  return a;
}

}  // namespace geoloc
