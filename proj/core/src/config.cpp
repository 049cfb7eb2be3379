#include "geoloc/config.hpp"

#include <cmath>
#include <fstream>
#include <functional>
#include <map>

#include <json.hpp>

namespace geoloc {

CameraIntrinsics AppConfig::intrinsics() const {
  return CameraIntrinsics(u0, v0, mu, mv, {k1, k2, k3, k4, k5},
                          theta_max_deg * M_PI / 180.0, width, height);
}

CameraPose AppConfig::pose() const {
  return CameraPose(pose_height_m, pose_tilt_deg * M_PI / 180.0);
}

GroundPoint AppConfig::target() const { return {target_x, target_y}; }

NoiseSpec AppConfig::noise() const {
  return {tilt_mean_deg, tilt_std_deg, height_std_m, pixel_std_px};
}

SimConfig AppConfig::sim() const {
  SimConfig s{intrinsics(), pose(), target(), noise(), alpha, trials, seed};
  s.validate();
  return s;
}

namespace {

// One registry drives both the file loader and the --set overrides, so the
// two surfaces cannot drift apart.
struct Field {
  std::function<void(AppConfig&, const nlohmann::json&)> from_json;
  std::function<void(AppConfig&, const std::string&)> from_string;
};

template <typename T>
Field make_field(T AppConfig::* member) {
  return {
      [member](AppConfig& c, const nlohmann::json& j) { c.*member = j.get<T>(); },
      [member](AppConfig& c, const std::string& s) {
        if constexpr (std::is_same_v<T, int>)
          c.*member = std::stoi(s);
        else if constexpr (std::is_same_v<T, std::uint64_t>)
          c.*member = std::stoull(s);
        else
          c.*member = std::stod(s);
      }};
}

const std::map<std::string, Field>& field_registry() {
  static const std::map<std::string, Field> fields = {
      {"camera.u0", make_field(&AppConfig::u0)},
      {"camera.v0", make_field(&AppConfig::v0)},
      {"camera.mu", make_field(&AppConfig::mu)},
      {"camera.mv", make_field(&AppConfig::mv)},
      {"camera.k1", make_field(&AppConfig::k1)},
      {"camera.k2", make_field(&AppConfig::k2)},
      {"camera.k3", make_field(&AppConfig::k3)},
      {"camera.k4", make_field(&AppConfig::k4)},
      {"camera.k5", make_field(&AppConfig::k5)},
      {"camera.theta_max_deg", make_field(&AppConfig::theta_max_deg)},
      {"camera.width", make_field(&AppConfig::width)},
      {"camera.height", make_field(&AppConfig::height)},
      {"pose.height_m", make_field(&AppConfig::pose_height_m)},
      {"pose.tilt_deg", make_field(&AppConfig::pose_tilt_deg)},
      {"target.x", make_field(&AppConfig::target_x)},
      {"target.y", make_field(&AppConfig::target_y)},
      {"noise.tilt_mean_deg", make_field(&AppConfig::tilt_mean_deg)},
      {"noise.tilt_std_deg", make_field(&AppConfig::tilt_std_deg)},
      {"noise.height_std_m", make_field(&AppConfig::height_std_m)},
      {"noise.pixel_std_px", make_field(&AppConfig::pixel_std_px)},
      {"filter.alpha", make_field(&AppConfig::alpha)},
      {"trials", make_field(&AppConfig::trials)},
      {"seed", make_field(&AppConfig::seed)},
  };
  return fields;
}

void apply_json_key(AppConfig& cfg, const std::string& key,
                    const nlohmann::json& value) {
  const auto& fields = field_registry();
  auto it = fields.find(key);
  if (it == fields.end())
    throw ConfigError("unknown config key: " + key);
  try {
    it->second.from_json(cfg, value);
  } catch (const nlohmann::json::exception&) {
    throw ConfigError("bad value for config key: " + key);
  }
}

}  // namespace

AppConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in)
    throw ConfigError("cannot open config file: " + path);
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw ConfigError("config parse error in " + path + ": " + e.what());
  }
  if (!doc.is_object())
    throw ConfigError("config root must be an object");

  AppConfig cfg;
  for (const auto& [key, value] : doc.items()) {
    if (value.is_object()) {
      for (const auto& [sub, subval] : value.items())
        apply_json_key(cfg, key + "." + sub, subval);
    } else {
      apply_json_key(cfg, key, value);
    }
  }
  return cfg;
}

void apply_override(AppConfig& cfg, const std::string& assignment) {
  const auto eq = assignment.find('=');
  if (eq == std::string::npos)
    throw ConfigError("override must have the form key=value: " + assignment);
  const std::string key = assignment.substr(0, eq);
  const std::string value = assignment.substr(eq + 1);
  const auto& fields = field_registry();
  auto it = fields.find(key);
  if (it == fields.end())
    throw ConfigError("unknown config key: " + key);
  try {
    it->second.from_string(cfg, value);
  } catch (const std::exception&) {
    throw ConfigError("bad value for config key: " + key);
  }
}

}  // namespace geoloc
