#pragma once

#include <cstdint>
#include <vector>

#include "brainb/config.hpp"
#include "brainb/rng.hpp"

namespace brainb {

struct PixelPoint {
  int x = 0;
  int y = 0;
  bool operator==(const PixelPoint&) const = default;
};

// A box covers the half-open pixel rectangle
// [center.x - half_width, center.x + half_width) x [center.y - half_height, center.y + half_height).
struct BoxEntity {
  int id = 0;
  PixelPoint center;
  int half_width = 1;
  int half_height = 1;
  std::uint8_t color_index = kFirstBoxColor;
  bool is_hero = false;

  int left() const { return center.x - half_width; }
  int right() const { return center.x + half_width; }
  int top() const { return center.y - half_height; }
  int bottom() const { return center.y + half_height; }

  bool operator==(const BoxEntity&) const = default;
};

struct WorldState {
  std::int64_t tick = 0;
  std::vector<BoxEntity> boxes;  // painter's order; the hero is boxes[0]
  int hero_id = 0;
  double speed = 0.0;
  int width = 0;
  int height = 0;
  int next_id = 0;

  const BoxEntity& hero() const;
  int noc() const { return static_cast<int>(boxes.size()); }

  bool operator==(const WorldState&) const = default;
};

enum class Command { None, Inc, Dec };

// Validates the config (ConfigError on failure) and places initial_noc boxes.
WorldState spawn_world(const SessionConfig& config, Rng& rng);

// One random-walk step for every box, in list order, x then y. Each axis moves by
// a uniform integer in [-round(speed), +round(speed)] and reflects off the bounds.
void step_world(WorldState& world, Rng& rng);

// Inc adds boxes and speeds up, Dec removes the newest non-hero boxes and slows down.
void apply_complexity(WorldState& world, Command command, const SessionConfig& config, Rng& rng);

constexpr std::int64_t hero_distance_sq(PixelPoint pointer, PixelPoint hero_center) {
  const std::int64_t dx = pointer.x - hero_center.x;
  const std::int64_t dy = pointer.y - hero_center.y;
  return dx * dx + dy * dy;
}

bool box_inside(const BoxEntity& box, int width, int height);

}  // namespace brainb
