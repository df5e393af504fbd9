#pragma once

#include <cstdint>
#include <deque>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "brainb/session.hpp"
#include "brainb/trace.hpp"

namespace brainb {

enum class ModelKind { Perfect, Absent, LaggedNoisy, Capacity };

std::string_view to_string(ModelKind kind);
ModelKind parse_model_kind(std::string_view name);  // ConfigError on unknown names

struct PointerModel {
  ModelKind kind = ModelKind::Perfect;
  int latency_ticks = 0;
  double noise_sigma = 0.0;
  std::int64_t capacity_bps = 50000;
  int reacquire_ticks = 10;
  double drift_px_per_tick = 6.0;
};

// Stateful pointer script. Perfect sits on the hero, Absent parks in the (0, 0)
// corner, LaggedNoisy follows the hero latency_ticks late with clipped Gaussian
// noise, and Capacity follows like LaggedNoisy until the shown bps reaches
// capacity_bps, then drifts off and only returns reacquire_ticks after bps
// dropped back below capacity.
class PointerDriver {
 public:
  explicit PointerDriver(PointerModel model);

  PointerSample step(const StateSnapshot& snap, Rng& rng);

  const PointerModel& model() const { return model_; }

 private:
  enum class Phase { Tracking, Drifting, Reacquiring };

  PixelPoint follow(const StateSnapshot& snap, Rng& rng);

  PointerModel model_;
  std::deque<PixelPoint> history_;
  Phase phase_ = Phase::Tracking;
  double drift_x_ = 0.0;
  double drift_y_ = 0.0;
  double dir_x_ = 1.0;
  double dir_y_ = 0.0;
  int countdown_ = 0;
  PixelPoint last_{};
  bool started_ = false;
};

PointerSample model_step(PointerDriver& driver, const StateSnapshot& snap, Rng& rng);

struct HeadlessRun {
  LogRecord record;
  EventLedger ledger;
  PointerTrace trace;
  Bitmap final_frame;
  std::vector<std::int64_t> bps_per_tick;
};

// Free-running session of config.duration_ticks ticks with config.rng_seed = seed.
// The pointer script draws from its own generator, so the trace alone replays the run.
HeadlessRun run_headless(SessionConfig config, const PointerModel& model, std::uint64_t seed);

// One independent run per seed, spread over OpenMP threads; results in seed order.
std::vector<HeadlessRun> run_headless_batch(const SessionConfig& config, const PointerModel& model,
                                            std::span<const std::uint64_t> seeds);

}  // namespace brainb
