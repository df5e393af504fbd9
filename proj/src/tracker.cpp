#include "brainb/tracker.hpp"

namespace brainb {

TrackerState make_tracker(const SessionConfig& config) {
  TrackerState tracker;
  tracker.dist_threshold_sq = config.dist_threshold_sq;
  tracker.run_length = config.run_length;
  return tracker;
}

Command tracker_step(TrackerState& t, std::int64_t dist_sq, std::int64_t bps, EventLedger& ledger,
                     std::int64_t tick) {
  if (dist_sq > t.dist_threshold_sq) {
    ++t.nof_lost;
    t.nof_found = 0;
    if (t.nof_lost > t.run_length) {
      if (t.state == TrackState::Found && t.first_lost) {
        ledger.found2lost.push_back(bps);
        ledger.ticks_found2lost.push_back(tick);
      }
      t.first_lost = true;
      t.state = TrackState::Lost;
      t.nof_lost = 0;
      ledger.lost.push_back(bps);
      ledger.ticks_lost.push_back(tick);
      return Command::Dec;
    }
  } else {
    ++t.nof_found;
    t.nof_lost = 0;
    if (t.nof_found > t.run_length) {
      if (t.state == TrackState::Lost && t.first_lost) {
        ledger.lost2found.push_back(bps);
        ledger.ticks_lost2found.push_back(tick);
      }
      t.state = TrackState::Found;
      t.nof_found = 0;
      ledger.found.push_back(bps);
      ledger.ticks_found.push_back(tick);
      return Command::Inc;
    }
  }
  return Command::None;
}

}  // namespace brainb
