// End-to-end acceptance suite. Each test case covers one numbered criterion
// and prints a single pass line when it holds; a doctest failure marks the
// criterion red.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>

#include <doctest.h>

#include "geoloc/localize.hpp"
#include "geoloc/sim.hpp"

using namespace geoloc;

namespace {

constexpr double kDeg = M_PI / 180.0;

const CameraIntrinsics kCam = default_intrinsics();

void report(int criterion, const std::string& what) {
  std::cout << "[PASS] criterion " << criterion << ": " << what << "\n";
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

int run_cli(const std::string& args) {
  const std::string cmd = std::string(GEOLOC_CLI_PATH) + " " + args +
                          " > /dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  return WEXITSTATUS(status);
}

}  // namespace

TEST_CASE("criterion 1: project/localize round trip, 1000 scenarios under 1 s") {
  std::mt19937_64 rng(101);
  std::uniform_real_distribution<double> height(5.0, 100.0);
  std::uniform_real_distribution<double> tilt(0.0, 60.0 * kDeg);
  std::uniform_real_distribution<double> unit(-1.0, 1.0);

  const auto start = std::chrono::steady_clock::now();
  int tested = 0;
  double worst = 0.0;
  while (tested < 1000) {
    const CameraPose pose(height(rng), tilt(rng));
    const GroundPoint g{unit(rng) * 3.0 * pose.height,
                        unit(rng) * 3.0 * pose.height};
    const CameraPoint a = world_to_camera(tilt_rotation(pose.tilt),
                                          {g.x, g.y, pose.height});
    if (a.z <= 0.0 || direction_angles(a).theta > kCam.theta_max() - 0.01)
      continue;
    const GroundPoint back = localize(kCam, pose, project(kCam, pose, g));
    worst = std::max(worst, localization_error(g, back));
    ++tested;
  }
  const double elapsed =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  REQUIRE(worst < 1e-6);
  REQUIRE(elapsed < 1.0);
  report(1, "round trip worst error " + std::to_string(worst) + " m in " +
                std::to_string(elapsed) + " s");
}

TEST_CASE("criterion 2: polynomial inversion to 1e-10 over 10000 angles under 1 s") {
  const auto start = std::chrono::steady_clock::now();
  double worst = 0.0;
  for (int i = 0; i <= 10000; ++i) {
    const double theta = kCam.theta_max() * i / 10000.0;
    worst = std::max(worst,
                     std::abs(theta_of_r(kCam, r_of_theta(kCam, theta)) - theta));
  }
  const double elapsed =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  REQUIRE(worst < 1e-10);
  REQUIRE(elapsed < 1.0);
  report(2, "worst inversion error " + std::to_string(worst) + " rad in " +
                std::to_string(elapsed) + " s");
}

TEST_CASE("criterion 3: worked scenario (4,3) at h=10, tilt 37 deg") {
  const CameraPose pose(10.0, 37.0 * kDeg);
  const PixelPoint px = project(kCam, pose, {4.0, 3.0});
  REQUIRE(px.u >= 0.0);
  REQUIRE(px.u <= 640.0);
  REQUIRE(px.v >= 0.0);
  REQUIRE(px.v <= 480.0);
  const GroundPoint back = localize(kCam, pose, px);
  REQUIRE(std::abs(back.x - 4.0) < 0.01);
  REQUIRE(std::abs(back.y - 3.0) < 0.01);
  report(3, "pixel (" + std::to_string(px.u) + ", " + std::to_string(px.v) +
                ") localizes back to (4, 3)");
}

TEST_CASE("criterion 4: filter variance ratio alpha/(2-alpha) within 20%") {
  const double alpha = 0.125;
  GaussianStream rng(404);
  LowPassFilter f(alpha);
  const int n = 100000;
  double sx = 0.0, sxx = 0.0, sy = 0.0, syy = 0.0;
  for (int i = 0; i < n; ++i) {
    const double x = rng.normal();
    const double y = f.step(x);
    sx += x;
    sxx += x * x;
    sy += y;
    syy += y * y;
  }
  const double var_in = sxx / n - (sx / n) * (sx / n);
  const double var_out = syy / n - (sy / n) * (sy / n);
  const double ratio = var_out / var_in;
  const double expected = alpha / (2.0 - alpha);
  REQUIRE(std::abs(ratio - expected) < 0.2 * expected);
  report(4, "measured ratio " + std::to_string(ratio) + ", expected " +
                std::to_string(expected));
}

namespace {

// The filtered mean is a weighted average of the raw samples (the filter is
// linear), so its standard error is sqrt(var_raw * sum(w_j^2)) with the
// exponential-smoothing weights, not var_raw / n.
double filtered_mean_se(double var_raw, double alpha, int n) {
  const double q = 1.0 - alpha;
  double sum_sq = 0.0;
  // x_0 seeds the filter; its coefficient in sum_k u_k is a geometric series
  double w0 = (1.0 - std::pow(q, n)) / alpha / n;
  sum_sq += w0 * w0;
  for (int j = 1; j < n; ++j) {
    const double w = (1.0 - std::pow(q, n - j)) / n;
    sum_sq += w * w;
  }
  return std::sqrt(var_raw * sum_sq);
}

}  // namespace

TEST_CASE("criterion 5: variance reduction and mean consistency over 20 seeds") {
  int var_reduced = 0;
  int mean_ok = 0;
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    SimConfig cfg;
    cfg.seed = seed;
    const SimStats s = summarize(run_simulation(cfg));
    if (s.x.var_filtered < s.x.var_raw && s.y.var_filtered < s.y.var_raw)
      ++var_reduced;
    const double se_x = filtered_mean_se(s.x.var_raw, cfg.alpha, s.successes);
    const double se_y = filtered_mean_se(s.y.var_raw, cfg.alpha, s.successes);
    if (std::abs(s.x.mean_filtered - 4.0) < 3.0 * se_x &&
        std::abs(s.y.mean_filtered - 3.0) < 3.0 * se_y)
      ++mean_ok;
  }
  REQUIRE(var_reduced >= 19);
  REQUIRE(mean_ok >= 19);
  report(5, "variance reduced in " + std::to_string(var_reduced) +
                "/20 seeds, filtered means within 3 SE in " +
                std::to_string(mean_ok) + "/20");
}

TEST_CASE("criterion 6: simulate --seed 42 is byte-identical and order-free") {
  const std::string out_a = std::string(std::tmpnam(nullptr)) + ".csv";
  const std::string out_b = std::string(std::tmpnam(nullptr)) + ".csv";
  REQUIRE(run_cli("--seed 42 simulate --out " + out_a) == 0);
  REQUIRE(run_cli("--seed 42 simulate --out " + out_b) == 0);
  const std::string a = read_file(out_a);
  const std::string b = read_file(out_b);
  std::remove(out_a.c_str());
  std::remove(out_b.c_str());
  REQUIRE(!a.empty());
  REQUIRE(a == b);

  // Trial-level independence: recomputing trials out of order reproduces the
  // batch, so any parallel schedule yields the same statistics.
  SimConfig cfg;
  cfg.seed = 42;
  const auto batch = run_simulation(cfg);
  for (int i = cfg.trials - 1; i >= 0; --i) {
    auto rng = GaussianStream::for_trial(cfg.seed, static_cast<std::uint64_t>(i));
    const CameraPose pose =
        sample_noisy_pose(cfg.noise, cfg.true_pose.height, rng);
    const PixelPoint truth = project(cfg.intrinsics, cfg.true_pose, cfg.target);
    const GroundPoint est = localize(cfg.intrinsics, pose,
                                     sample_noisy_pixel(cfg.noise, truth, rng));
    REQUIRE(est.x == batch[i].raw->x);
    REQUIRE(est.y == batch[i].raw->y);
  }
  report(6, "identical CSV bytes across runs; trials independent of order");
}

TEST_CASE("criterion 7: degenerate cases raise named errors") {
  CHECK_THROWS_WITH_AS(localize(kCam, CameraPose(10.0, 80.0 * kDeg), {500, 240}),
                       "ray does not intersect ground", DomainError);
  CHECK_THROWS_WITH_AS(project(kCam, CameraPose(10.0, 88.9 * kDeg), {-1000, 0}),
                       "target behind camera", DomainError);
  CHECK_THROWS_WITH_AS(project(kCam, CameraPose(10.0, 0.0), {1000, 0}),
                       "target outside field of view", DomainError);
  CHECK_THROWS_WITH_AS(pixel_to_ray(kCam, {1260, 240}),
                       "radius outside lens image", DomainError);
  CHECK_THROWS_WITH_AS(r_of_theta(kCam, 1.4), "incidence angle out of range",
                       DomainError);

  // CLI surfaces map them to the geometric-domain exit code.
  REQUIRE(run_cli("--set pose.tilt_deg=0 project 1000 0") == 2);
  REQUIRE(run_cli("localize 1260 240") == 2);
  REQUIRE(run_cli("--set bogus.key=1 project 0 0") == 1);
  report(7, "named errors and exit codes for all degenerate cases");
}
