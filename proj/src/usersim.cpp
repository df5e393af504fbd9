#include "brainb/usersim.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "brainb/errors.hpp"

namespace brainb {

namespace {

// Keeps the pointer script's randomness apart from the world's.
constexpr std::uint64_t kPointerStream = 0x9e3779b97f4a7c15ULL;

int clipped_noise(double sigma, Rng& rng) {
  if (sigma <= 0.0) return 0;
  const double z = std::clamp(rng.normal(), -3.0, 3.0);
  return static_cast<int>(std::lround(z * sigma));
}

}  // namespace

std::string_view to_string(ModelKind kind) {
  switch (kind) {
    case ModelKind::Perfect: return "perfect";
    case ModelKind::Absent: return "absent";
    case ModelKind::LaggedNoisy: return "lagged";
    case ModelKind::Capacity: return "capacity";
  }
  return "unknown";
}

ModelKind parse_model_kind(std::string_view name) {
  if (name == "perfect") return ModelKind::Perfect;
  if (name == "absent") return ModelKind::Absent;
  if (name == "lagged" || name == "lagged-noisy") return ModelKind::LaggedNoisy;
  if (name == "capacity") return ModelKind::Capacity;
  throw ConfigError("unknown pointer model '" + std::string(name) + "'");
}

PointerDriver::PointerDriver(PointerModel model) : model_(model) {
  if (model_.latency_ticks < 0 || model_.noise_sigma < 0.0 || model_.capacity_bps < 0 ||
      model_.reacquire_ticks < 0 || model_.drift_px_per_tick < 0.0) {
    throw ConfigError("pointer model parameters must be non-negative");
  }
}

PixelPoint PointerDriver::follow(const StateSnapshot& snap, Rng& rng) {
  history_.push_back(snap.hero_center());
  while (history_.size() > static_cast<std::size_t>(model_.latency_ticks) + 1) history_.pop_front();
  PixelPoint target = history_.front();
  target.x += clipped_noise(model_.noise_sigma, rng);
  target.y += clipped_noise(model_.noise_sigma, rng);
  return target;
}

PointerSample PointerDriver::step(const StateSnapshot& snap, Rng& rng) {
  PointerSample sample;
  sample.tick = snap.tick - 1;
  sample.button_down = true;

  switch (model_.kind) {
    case ModelKind::Perfect: {
      const auto c = snap.hero_center();
      sample.x = c.x;
      sample.y = c.y;
      return sample;
    }
    case ModelKind::Absent:
      return sample;
    case ModelKind::LaggedNoisy: {
      const auto p = follow(snap, rng);
      sample.x = p.x;
      sample.y = p.y;
      return sample;
    }
    case ModelKind::Capacity:
      break;
  }

  const bool overloaded = snap.bps >= model_.capacity_bps;
  // Keep the latency buffer fed even while not following.
  const PixelPoint followed = follow(snap, rng);
  if (!started_) {
    last_ = followed;
    started_ = true;
  }

  if (phase_ == Phase::Tracking && overloaded) {
    phase_ = Phase::Drifting;
    drift_x_ = last_.x;
    drift_y_ = last_.y;
    const double angle = 2.0 * std::numbers::pi * rng.uniform01();
    dir_x_ = std::cos(angle);
    dir_y_ = std::sin(angle);
  } else if (phase_ == Phase::Drifting && !overloaded) {
    phase_ = Phase::Reacquiring;
    countdown_ = model_.reacquire_ticks;
  } else if (phase_ == Phase::Reacquiring && overloaded) {
    phase_ = Phase::Drifting;
  }
  if (phase_ == Phase::Reacquiring) {
    if (countdown_ == 0) {
      phase_ = Phase::Tracking;
    } else {
      --countdown_;
    }
  }

  if (phase_ == Phase::Drifting) {
    drift_x_ += dir_x_ * model_.drift_px_per_tick;
    drift_y_ += dir_y_ * model_.drift_px_per_tick;
  }
  if (phase_ == Phase::Tracking) {
    last_ = followed;
  } else {
    last_ = {static_cast<int>(std::lround(drift_x_)), static_cast<int>(std::lround(drift_y_))};
  }
  sample.x = last_.x;
  sample.y = last_.y;
  return sample;
}

PointerSample model_step(PointerDriver& driver, const StateSnapshot& snap, Rng& rng) {
  return driver.step(snap, rng);
}

HeadlessRun run_headless(SessionConfig config, const PointerModel& model, std::uint64_t seed) {
  config.rng_seed = seed;
  Session session = make_session(config);
  PointerDriver driver(model);
  Rng pointer_rng(seed ^ kPointerStream);

  HeadlessRun run;
  run.trace.seed = seed;
  run.trace.samples.reserve(static_cast<std::size_t>(config.duration_ticks));
  run.bps_per_tick.reserve(static_cast<std::size_t>(config.duration_ticks));
  while (!session.finished()) {
    begin_tick(session);
    PointerSample sample = driver.step(snapshot(session), pointer_rng);
    sample.tick = session.elapsed_ticks;
    complete_tick(session, sample);
    run.trace.samples.push_back(sample);
    run.bps_per_tick.push_back(session.meter.bps);
  }
  auto result = finalize(session);
  run.record = std::move(result.record);
  run.final_frame = std::move(result.final_frame);
  run.ledger = std::move(session.ledger);
  return run;
}

std::vector<HeadlessRun> run_headless_batch(const SessionConfig& config, const PointerModel& model,
                                            std::span<const std::uint64_t> seeds) {
  validate(config);
  PointerDriver check(model);
  std::vector<HeadlessRun> runs(seeds.size());
  const auto n = static_cast<std::ptrdiff_t>(seeds.size());
#pragma omp parallel for schedule(dynamic, 1)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    runs[static_cast<std::size_t>(i)] = run_headless(config, model, seeds[static_cast<std::size_t>(i)]);
  }
  return runs;
}

}  // namespace brainb
