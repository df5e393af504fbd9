#include "brainb/world.hpp"

#include <algorithm>
#include <cmath>

#include "brainb/errors.hpp"

namespace brainb {

namespace {

BoxEntity make_box(int id, int half_w, int half_h, std::uint8_t color, int width, int height,
                   Rng& rng) {
  BoxEntity box;
  box.id = id;
  box.half_width = half_w;
  box.half_height = half_h;
  box.color_index = color;
  box.center.x = static_cast<int>(rng.uniform_int(half_w, width - half_w));
  box.center.y = static_cast<int>(rng.uniform_int(half_h, height - half_h));
  return box;
}

BoxEntity random_box(WorldState& world, const SessionConfig& config, Rng& rng) {
  const int half_w = static_cast<int>(rng.uniform_int(config.box_half_min, config.box_half_max));
  const int half_h = static_cast<int>(rng.uniform_int(config.box_half_min, config.box_half_max));
  const auto last_color = static_cast<std::int64_t>(config.palette.size()) - 1;
  const auto color = static_cast<std::uint8_t>(rng.uniform_int(kFirstBoxColor, last_color));
  return make_box(world.next_id++, half_w, half_h, color, world.width, world.height, rng);
}

// Reflects `value` into [lo, hi]; the final clamp covers steps longer than the span.
int reflect(int value, int lo, int hi) {
  if (value < lo) value = 2 * lo - value;
  if (value > hi) value = 2 * hi - value;
  return std::clamp(value, lo, hi);
}

}  // namespace

const BoxEntity& WorldState::hero() const {
  for (const auto& box : boxes) {
    if (box.id == hero_id) return box;
  }
  throw UsageError("world has no hero box");
}

bool box_inside(const BoxEntity& box, int width, int height) {
  return box.left() >= 0 && box.top() >= 0 && box.right() <= width && box.bottom() <= height;
}

WorldState spawn_world(const SessionConfig& config, Rng& rng) {
  validate(config);
  WorldState world;
  world.width = config.width;
  world.height = config.height;
  world.speed = config.initial_speed;

  BoxEntity hero = make_box(world.next_id++, config.hero_half_w, config.hero_half_h, kHeroColor,
                            world.width, world.height, rng);
  hero.is_hero = true;
  world.hero_id = hero.id;
  world.boxes.reserve(static_cast<std::size_t>(config.noc_max));
  world.boxes.push_back(hero);
  while (world.noc() < config.initial_noc) world.boxes.push_back(random_box(world, config, rng));
  return world;
}

void step_world(WorldState& world, Rng& rng) {
  const int reach = static_cast<int>(std::lround(world.speed));
  for (auto& box : world.boxes) {
    const int dx = static_cast<int>(rng.uniform_int(-reach, reach));
    const int dy = static_cast<int>(rng.uniform_int(-reach, reach));
    box.center.x = reflect(box.center.x + dx, box.half_width, world.width - box.half_width);
    box.center.y = reflect(box.center.y + dy, box.half_height, world.height - box.half_height);
  }
  ++world.tick;
}

void apply_complexity(WorldState& world, Command command, const SessionConfig& config, Rng& rng) {
  switch (command) {
    case Command::None:
      return;
    case Command::Inc: {
      const int room = config.noc_max - world.noc();
      for (int i = 0; i < std::min(config.inc_boxes, room); ++i) {
        world.boxes.push_back(random_box(world, config, rng));
      }
      world.speed = std::min(world.speed * config.speed_factor_up, config.speed_max);
      return;
    }
    case Command::Dec: {
      int to_remove = std::min(config.dec_boxes, world.noc() - config.noc_min);
      for (auto it = world.boxes.end(); to_remove > 0 && it != world.boxes.begin();) {
        --it;
        if (it->is_hero) continue;
        it = world.boxes.erase(it);
        --to_remove;
      }
      world.speed = std::max(world.speed * config.speed_factor_down, config.speed_min);
      return;
    }
  }
}

}  // namespace brainb
