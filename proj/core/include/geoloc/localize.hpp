#ifndef GEOLOC_LOCALIZE_HPP
#define GEOLOC_LOCALIZE_HPP

#include "geoloc/fisheye.hpp"
#include "geoloc/geometry.hpp"

namespace geoloc {

// Maps a detected pixel plus the measured camera pose to ground-plane
// coordinates: pixel -> camera ray -> world ray -> ground-plane intersection.
// Throws DomainError for rays at or above the horizon and for pixels outside
// the lens image.
GroundPoint localize(const CameraIntrinsics& c, const CameraPose& pose,
                     const PixelPoint& p);

// Euclidean distance between a true and an estimated ground point, meters.
double localization_error(const GroundPoint& truth, const GroundPoint& estimate);

}  // namespace geoloc

#endif
