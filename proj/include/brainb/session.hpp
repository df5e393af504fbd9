#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "brainb/config.hpp"
#include "brainb/kernels.hpp"
#include "brainb/logkit.hpp"
#include "brainb/meter.hpp"
#include "brainb/rng.hpp"
#include "brainb/tracker.hpp"
#include "brainb/world.hpp"

namespace brainb {

struct PointerSample {
  int x = 0;
  int y = 0;
  bool button_down = false;
  std::int64_t tick = 0;
  bool operator==(const PointerSample&) const = default;
};

// One benchmark run. Only the tick loop writes to it.
struct Session {
  SessionConfig config;
  Rng rng;
  WorldState world;
  TrackerState tracker;
  EventLedger ledger;
  ComplexityMeter meter;
  int nop = 0;
  bool paused = false;
  std::int64_t elapsed_ticks = 0;
  bool in_tick = false;  // between begin_tick and complete_tick

  bool finished() const { return elapsed_ticks >= config.duration_ticks; }
};

// Uses config.rng_seed. ConfigError on an invalid config.
Session make_session(const SessionConfig& config);

// A full tick: step the world, measure the hero window, then judge the pointer,
// update the tracker and apply the resulting complexity command. No-op while paused.
// UsageError once the session is finished.
void run_tick(Session& session, const PointerSample& pointer);

// run_tick split at the point where the new frame exists, so a scripted pointer can
// react to the frame being shown. begin_tick returns false (and does nothing) while paused.
bool begin_tick(Session& session);
void complete_tick(Session& session, const PointerSample& pointer);

// Flips pause; nop counts entries into the paused state.
void toggle_pause(Session& session);

struct StateSnapshot {
  std::int64_t tick = 0;
  std::vector<BoxEntity> boxes;
  std::int64_t bps = 0;
  int noc = 0;
  TrackState state = TrackState::Found;
  std::string clock;  // elapsed m:ss
  bool paused = false;
  std::int64_t duration_ticks = 0;
  int tick_ms = 100;

  PixelPoint hero_center() const;
  bool operator==(const StateSnapshot&) const = default;
};

StateSnapshot snapshot(const Session& session);

struct SessionResult {
  LogRecord record;
  Bitmap final_frame;
};

// Requires a finished session unless `force` (the save key) is set.
SessionResult finalize(const Session& session, bool force = false);

// Elapsed time in 100 ms log units.
std::int64_t log_time_units(const Session& session);

// "m:ss", zero-padded seconds; used by the live feed.
std::string clock_string(std::int64_t elapsed_ms);

}  // namespace brainb
