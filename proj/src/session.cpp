#include "brainb/session.hpp"

#include <algorithm>

#include "brainb/errors.hpp"

namespace brainb {

Session make_session(const SessionConfig& config) {
  Session s;
  s.config = config;
  s.rng = Rng(config.rng_seed);
  s.world = spawn_world(s.config, s.rng);
  s.tracker = make_tracker(s.config);
  s.meter = make_meter(s.config);
  return s;
}

bool begin_tick(Session& s) {
  if (s.in_tick) throw UsageError("begin_tick called twice without complete_tick");
  if (s.finished()) throw UsageError("session already finished");
  if (s.paused) return false;

  step_world(s.world, s.rng);
  const PixelPoint center = s.world.hero().center;
  measure(s.meter, rasterize_window(s.world, center, s.config.window_w, s.config.window_h), s.config);
  s.in_tick = true;
  return true;
}

void complete_tick(Session& s, const PointerSample& pointer) {
  if (!s.in_tick) throw UsageError("complete_tick without begin_tick");
  s.in_tick = false;

  const PixelPoint at{std::clamp(pointer.x, 0, s.config.width - 1),
                      std::clamp(pointer.y, 0, s.config.height - 1)};
  // A released button counts as far regardless of position.
  const std::int64_t dist_sq = pointer.button_down ? hero_distance_sq(at, s.world.hero().center)
                                                   : s.tracker.dist_threshold_sq + 1;
  const Command command = tracker_step(s.tracker, dist_sq, s.meter.bps, s.ledger, s.elapsed_ticks);
  apply_complexity(s.world, command, s.config, s.rng);
  ++s.elapsed_ticks;
}

void run_tick(Session& s, const PointerSample& pointer) {
  if (begin_tick(s)) complete_tick(s, pointer);
}

void toggle_pause(Session& s) {
  if (s.in_tick) throw UsageError("cannot pause in the middle of a tick");
  s.paused = !s.paused;
  if (s.paused) ++s.nop;
}

PixelPoint StateSnapshot::hero_center() const {
  for (const auto& box : boxes) {
    if (box.is_hero) return box.center;
  }
  return {};
}

StateSnapshot snapshot(const Session& s) {
  StateSnapshot snap;
  snap.tick = s.world.tick;
  snap.boxes = s.world.boxes;
  snap.bps = s.meter.bps;
  snap.noc = s.world.noc();
  snap.state = s.tracker.state;
  snap.clock = clock_string(s.elapsed_ticks * s.config.tick_ms);
  snap.paused = s.paused;
  snap.duration_ticks = s.config.duration_ticks;
  snap.tick_ms = s.config.tick_ms;
  return snap;
}

std::int64_t log_time_units(const Session& s) {
  return s.elapsed_ticks * s.config.tick_ms / 100;
}

SessionResult finalize(const Session& s, bool force) {
  if (!s.finished() && !force) {
    throw UsageError("finalize before the session finished (" + std::to_string(s.elapsed_ticks) + "/" +
                     std::to_string(s.config.duration_ticks) + " ticks); use the save path to force");
  }
  SessionResult result;
  result.record = make_record(log_time_units(s), s.meter.bps, s.world.noc(), s.nop, s.ledger.lost,
                              s.ledger.found, s.ledger.lost2found, s.ledger.found2lost);
  result.final_frame = rasterize(s.world);
  return result;
}

std::string clock_string(std::int64_t elapsed_ms) {
  const std::int64_t seconds = elapsed_ms / 1000;
  const std::int64_t secs = seconds % 60;
  return std::to_string(seconds / 60) + ":" + (secs < 10 ? "0" : "") + std::to_string(secs);
}

}  // namespace brainb
