#ifndef GEOLOC_ERROR_HPP
#define GEOLOC_ERROR_HPP

#include <stdexcept>
#include <string>

namespace geoloc {

// Geometric-domain failures (out-of-FOV angles, horizon rays, invalid radii).
// Distinct from ConfigError so the CLI can map them to different exit codes.
class DomainError : public std::runtime_error {
 public:
  explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

class ConfigError : public std::runtime_error {
 public:
  explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace geoloc

#endif
