#include <benchmark/benchmark.h>

#include <cmath>

#include "geoloc/localize.hpp"
#include "geoloc/sim.hpp"

namespace {

const geoloc::CameraIntrinsics kCam = geoloc::default_intrinsics();
const geoloc::CameraPose kPose{10.0, 37.0 * M_PI / 180.0};

void BM_Project(benchmark::State& state) {
  geoloc::GroundPoint g{4.0, 3.0};
  for (auto _ : state) {
    benchmark::DoNotOptimize(geoloc::project(kCam, kPose, g));
  }
}
BENCHMARK(BM_Project);

void BM_Localize(benchmark::State& state) {
  const geoloc::PixelPoint px = geoloc::project(kCam, kPose, {4.0, 3.0});
  for (auto _ : state) {
    benchmark::DoNotOptimize(geoloc::localize(kCam, kPose, px));
  }
}
BENCHMARK(BM_Localize);

void BM_ThetaOfR(benchmark::State& state) {
  double r = 0.0;
  for (auto _ : state) {
    r = std::fmod(r + 0.37, kCam.r_max());
    benchmark::DoNotOptimize(geoloc::theta_of_r(kCam, r));
  }
}
BENCHMARK(BM_ThetaOfR);

void BM_Simulation90(benchmark::State& state) {
  geoloc::SimConfig cfg;
  for (auto _ : state) {
    benchmark::DoNotOptimize(geoloc::run_simulation(cfg));
  }
}
BENCHMARK(BM_Simulation90);

}  // namespace

BENCHMARK_MAIN();
