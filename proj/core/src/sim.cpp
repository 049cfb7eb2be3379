#include "geoloc/sim.hpp"

#include <cmath>
#include <ostream>

#include <fmt/format.h>

namespace geoloc {

void SimConfig::validate() const {
  noise.validate();
  if (trials < 1)
    throw ConfigError("trials must be at least 1");
  if (!(alpha > 0.0 && alpha <= 1.0))
    throw ConfigError("filter alpha must lie in (0, 1]");
}

std::vector<TrialRecord> run_simulation(const SimConfig& cfg) {
  cfg.validate();

  // The target must be visible under the true pose; otherwise the whole
  // configuration is broken, not an individual trial.
  PixelPoint truth_pixel;
  try {
    truth_pixel = project(cfg.intrinsics, cfg.true_pose, cfg.target);
  } catch (const DomainError& e) {
    throw ConfigError(std::string("target not visible under true pose: ") +
                      e.what());
  }

  std::vector<TrialRecord> records(cfg.trials);
  for (int i = 0; i < cfg.trials; ++i) {
    TrialRecord& rec = records[i];
    rec.index = i;
    auto rng = GaussianStream::for_trial(cfg.seed, static_cast<std::uint64_t>(i));
    try {
      const CameraPose noisy_pose =
          sample_noisy_pose(cfg.noise, cfg.true_pose.height, rng);
      rec.noisy_tilt = noisy_pose.tilt;
      rec.noisy_height = noisy_pose.height;
      const PixelPoint pixel = sample_noisy_pixel(cfg.noise, truth_pixel, rng);
      rec.raw = localize(cfg.intrinsics, noisy_pose, pixel);
    } catch (const DomainError& e) {
      rec.failure = e.what();
    } catch (const ConfigError& e) {
      // Noisy tilt can leave the valid pose range at high noise settings.
      rec.failure = e.what();
    }
  }

  // Filter pass over successful trials, sequential in trial order.
  LowPassFilter fx(cfg.alpha);
  LowPassFilter fy(cfg.alpha);
  for (TrialRecord& rec : records) {
    if (rec.ok())
      rec.filtered = GroundPoint{fx.step(rec.raw->x), fy.step(rec.raw->y)};
  }
  return records;
}

namespace {

struct Accum {
  double sum = 0.0;
  double sum_sq = 0.0;
  int n = 0;

  void add(double v) {
    sum += v;
    sum_sq += v * v;
    ++n;
  }
  double mean() const { return sum / n; }
  double var() const {
    const double m = mean();
    return std::max(sum_sq / n - m * m, 0.0);
  }
};

}  // namespace

SimStats summarize(const std::vector<TrialRecord>& records) {
  Accum rx, ry, fx, fy;
  int failures = 0;
  for (const TrialRecord& rec : records) {
    if (!rec.ok()) {
      ++failures;
      continue;
    }
    rx.add(rec.raw->x);
    ry.add(rec.raw->y);
    fx.add(rec.filtered->x);
    fy.add(rec.filtered->y);
  }
  if (rx.n == 0)
    throw DomainError("no successful trials");

  SimStats s;
  s.x = {rx.mean(), fx.mean(), rx.var(), fx.var()};
  s.y = {ry.mean(), fy.mean(), ry.var(), fy.var()};
  s.failure_count = failures;
  s.successes = rx.n;
  return s;
}

void write_csv(std::ostream& out, const std::vector<TrialRecord>& records) {
  out << "trial,noisy_tilt_deg,noisy_height_m,raw_x,raw_y,filt_x,filt_y,status\n";
  for (const TrialRecord& rec : records) {
    if (rec.ok()) {
      out << fmt::format("{},{:.6f},{:.6f},{:.6f},{:.6f},{:.6f},{:.6f},ok\n",
                         rec.index, rec.noisy_tilt * 180.0 / M_PI,
                         rec.noisy_height, rec.raw->x, rec.raw->y,
                         rec.filtered->x, rec.filtered->y);
    } else {
      out << fmt::format("{},,,,,,,{}\n", rec.index, rec.failure);
    }
  }
}

void write_summary(std::ostream& out, const SimStats& stats) {
  out << fmt::format("{:<6}{:>16}{:>17}{:>16}{:>17}\n", "", "Mean (original)",
                     "Mean (filtering)", "Var. (original)", "Var. (filtering)");
  out << fmt::format("{:<6}{:>16.4f}{:>17.4f}{:>16.4f}{:>17.4f}\n", "X / m",
                     stats.x.mean_raw, stats.x.mean_filtered, stats.x.var_raw,
                     stats.x.var_filtered);
  out << fmt::format("{:<6}{:>16.4f}{:>17.4f}{:>16.4f}{:>17.4f}\n", "Y / m",
                     stats.y.mean_raw, stats.y.mean_filtered, stats.y.var_raw,
                     stats.y.var_filtered);
  out << fmt::format("failed trials: {}\n", stats.failure_count);
}

}  // namespace geoloc
