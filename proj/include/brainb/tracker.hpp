#pragma once

#include <cstdint>
#include <vector>

#include "brainb/world.hpp"

namespace brainb {

enum class TrackState { Found, Lost };

// Lost/found bookkeeping run once per tick. A session starts Found with the
// firstLost gate closed, so the very first loss is never recorded as found2lost.
struct TrackerState {
  TrackState state = TrackState::Found;
  int nof_lost = 0;
  int nof_found = 0;
  bool first_lost = false;
  std::int64_t dist_threshold_sq = 121;
  int run_length = 12;

  bool operator==(const TrackerState&) const = default;
};

TrackerState make_tracker(const SessionConfig& config);

// bps values recorded at threshold firings and at state transitions, plus the
// tick at which each value was recorded.
struct EventLedger {
  std::vector<std::int64_t> lost;
  std::vector<std::int64_t> found;
  std::vector<std::int64_t> lost2found;
  std::vector<std::int64_t> found2lost;

  std::vector<std::int64_t> ticks_lost;
  std::vector<std::int64_t> ticks_found;
  std::vector<std::int64_t> ticks_lost2found;
  std::vector<std::int64_t> ticks_found2lost;

  bool operator==(const EventLedger&) const = default;
};

// Far when dist_sq > dist_threshold_sq. A run of run_length + 1 far ticks fires Dec,
// a run of run_length + 1 near ticks fires Inc; the counter then restarts.
Command tracker_step(TrackerState& tracker, std::int64_t dist_sq, std::int64_t bps,
                     EventLedger& ledger, std::int64_t tick);

}  // namespace brainb
