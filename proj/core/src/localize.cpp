#include "geoloc/localize.hpp"

#include <cmath>

namespace geoloc {

GroundPoint localize(const CameraIntrinsics& c, const CameraPose& pose,
                     const PixelPoint& p) {
  const UnitVector3 cam_ray = pixel_to_ray(c, p);
  const UnitVector3 world_ray =
      camera_dir_to_world(tilt_rotation(pose.tilt), cam_ray);
  // direction_angles renormalizes, guarding against drift from the rotation.
  const DirectionAngles a = direction_angles(world_ray);
  if (a.theta >= M_PI / 2.0 - 1e-9)
    throw DomainError("ray does not intersect ground");
  const double range = pose.height * std::tan(a.theta);
  return {range * std::cos(a.phi), range * std::sin(a.phi)};
}

double localization_error(const GroundPoint& truth,
                          const GroundPoint& estimate) {
  return std::hypot(truth.x - estimate.x, truth.y - estimate.y);
}

}  // namespace geoloc
