#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace brainb {

struct Rgb {
  std::uint8_t r = 0;
  std::uint8_t g = 0;
  std::uint8_t b = 0;
  bool operator==(const Rgb&) const = default;
};

// Palette slots. Index 0 is always the background and index 1 the hero;
// everything from kFirstBoxColor on is available to ordinary boxes.
inline constexpr std::uint8_t kBackgroundColor = 0;
inline constexpr std::uint8_t kHeroColor = 1;
inline constexpr std::uint8_t kFirstBoxColor = 2;

// Black background, white hero, Okabe-Ito hues for the boxes.
std::vector<Rgb> default_palette();

struct SessionConfig {
  int tick_ms = 100;
  int duration_ticks = 6000;
  int dist_threshold_sq = 121;
  int run_length = 12;

  int width = 1024;
  int height = 768;
  int window_w = 256;
  int window_h = 256;

  int initial_noc = 10;
  int noc_min = 2;
  int noc_max = 200;
  double initial_speed = 3.0;
  double speed_min = 0.5;
  double speed_max = 40.0;
  int inc_boxes = 1;
  int dec_boxes = 1;
  double speed_factor_up = 1.05;
  double speed_factor_down = 1.0 / 1.05;

  int box_half_min = 12;
  int box_half_max = 36;
  int hero_half_w = 15;
  int hero_half_h = 10;

  std::vector<Rgb> palette = default_palette();
  int bits_per_changed_pixel = 1;
  std::uint64_t rng_seed = 1;

  bool operator==(const SessionConfig&) const = default;
};

// Throws ConfigError describing the first violated constraint.
void validate(const SessionConfig& config);

// Sets one field by its SessionConfig name. Palette values are comma separated
// "#rrggbb" entries. Throws ConfigError on unknown keys or unparseable values.
void apply_override(SessionConfig& config, std::string_view key, std::string_view value);

// Flat "key = value" text; lines starting with '#' are comments. Later keys win.
void apply_config_text(SessionConfig& config, std::string_view text);
SessionConfig load_config_file(const std::filesystem::path& path, SessionConfig base = {});

std::string to_config_text(const SessionConfig& config);

std::string format_rgb(const Rgb& color);
Rgb parse_rgb(std::string_view text);

}  // namespace brainb
