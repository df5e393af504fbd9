#include "brainb/config.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <functional>
#include <iomanip>
#include <sstream>
#include <system_error>

#include "brainb/errors.hpp"

namespace brainb {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

template <typename T>
T parse_number(std::string_view key, std::string_view text) {
  text = trim(text);
  T value{};
  const auto* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc{} || ptr != end) {
    throw ConfigError("bad value for '" + std::string(key) + "': '" + std::string(text) + "'");
  }
  return value;
}

std::vector<Rgb> parse_palette(std::string_view text) {
  std::vector<Rgb> palette;
  while (!text.empty()) {
    const auto comma = text.find(',');
    palette.push_back(parse_rgb(trim(text.substr(0, comma))));
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  return palette;
}

using Setter = std::function<void(SessionConfig&, std::string_view, std::string_view)>;

template <typename T>
Setter setter(T SessionConfig::*field) {
  return [field](SessionConfig& c, std::string_view key, std::string_view value) {
    c.*field = parse_number<T>(key, value);
  };
}

const std::map<std::string, Setter, std::less<>>& setters() {
  static const std::map<std::string, Setter, std::less<>> table = {
      {"tick_ms", setter(&SessionConfig::tick_ms)},
      {"duration_ticks", setter(&SessionConfig::duration_ticks)},
      {"dist_threshold_sq", setter(&SessionConfig::dist_threshold_sq)},
      {"run_length", setter(&SessionConfig::run_length)},
      {"width", setter(&SessionConfig::width)},
      {"height", setter(&SessionConfig::height)},
      {"window_w", setter(&SessionConfig::window_w)},
      {"window_h", setter(&SessionConfig::window_h)},
      {"initial_noc", setter(&SessionConfig::initial_noc)},
      {"noc_min", setter(&SessionConfig::noc_min)},
      {"noc_max", setter(&SessionConfig::noc_max)},
      {"initial_speed", setter(&SessionConfig::initial_speed)},
      {"speed_min", setter(&SessionConfig::speed_min)},
      {"speed_max", setter(&SessionConfig::speed_max)},
      {"inc_boxes", setter(&SessionConfig::inc_boxes)},
      {"dec_boxes", setter(&SessionConfig::dec_boxes)},
      {"speed_factor_up", setter(&SessionConfig::speed_factor_up)},
      {"speed_factor_down", setter(&SessionConfig::speed_factor_down)},
      {"box_half_min", setter(&SessionConfig::box_half_min)},
      {"box_half_max", setter(&SessionConfig::box_half_max)},
      {"hero_half_w", setter(&SessionConfig::hero_half_w)},
      {"hero_half_h", setter(&SessionConfig::hero_half_h)},
      {"bits_per_changed_pixel", setter(&SessionConfig::bits_per_changed_pixel)},
      {"rng_seed", setter(&SessionConfig::rng_seed)},
      {"palette",
       [](SessionConfig& c, std::string_view, std::string_view value) {
         c.palette = parse_palette(value);
       }},
  };
  return table;
}

void require(bool ok, const std::string& message) {
  if (!ok) throw ConfigError(message);
}

}  // namespace

std::vector<Rgb> default_palette() {
  return {
      {0x00, 0x00, 0x00},  // background
      {0xff, 0xff, 0xff},  // hero
      {0xe6, 0x9f, 0x00}, {0x56, 0xb4, 0xe9}, {0x00, 0x9e, 0x73}, {0xf0, 0xe4, 0x42},
      {0x00, 0x72, 0xb2}, {0xd5, 0x5e, 0x00}, {0xcc, 0x79, 0xa7},
  };
}

void validate(const SessionConfig& c) {
  require(c.tick_ms > 0, "tick_ms must be positive");
  require(c.duration_ticks > 0, "duration_ticks must be positive");
  require(c.dist_threshold_sq >= 0, "dist_threshold_sq must be non-negative");
  require(c.run_length >= 0, "run_length must be non-negative");
  require(c.width > 0 && c.height > 0, "world bounds must be positive");
  require(c.window_w > 0 && c.window_h > 0, "meter window must be positive");
  require(c.noc_min >= 1, "noc_min must be at least 1");
  require(c.noc_min <= c.noc_max, "noc_min must not exceed noc_max");
  require(c.initial_noc >= c.noc_min && c.initial_noc <= c.noc_max,
          "initial_noc must lie in [noc_min, noc_max]");
  require(c.speed_min >= 0.0 && c.speed_min <= c.speed_max, "speed range is empty or negative");
  require(c.initial_speed >= c.speed_min && c.initial_speed <= c.speed_max,
          "initial_speed must lie in [speed_min, speed_max]");
  require(c.inc_boxes >= 0 && c.dec_boxes >= 0, "inc_boxes/dec_boxes must be non-negative");
  require(c.speed_factor_up >= 1.0, "speed_factor_up must be >= 1");
  require(c.speed_factor_down > 0.0 && c.speed_factor_down <= 1.0,
          "speed_factor_down must lie in (0, 1]");
  require(c.box_half_min >= 1 && c.box_half_min <= c.box_half_max, "bad box half-extent range");
  require(c.hero_half_w >= 1 && c.hero_half_h >= 1, "hero half-extents must be >= 1");
  const int max_half_w = std::max(c.box_half_max, c.hero_half_w);
  const int max_half_h = std::max(c.box_half_max, c.hero_half_h);
  require(2 * max_half_w <= c.width && 2 * max_half_h <= c.height,
          "world bounds too small for the largest box");
  require(c.palette.size() > kFirstBoxColor, "palette needs background, hero and a box color");
  require(c.palette.size() <= 256, "palette holds at most 256 colors");
  require(c.bits_per_changed_pixel >= 1, "bits_per_changed_pixel must be >= 1");
}

void apply_override(SessionConfig& config, std::string_view key, std::string_view value) {
  key = trim(key);
  const auto& table = setters();
  const auto it = table.find(key);
  if (it == table.end()) throw ConfigError("unknown config key '" + std::string(key) + "'");
  it->second(config, key, value);
}

void apply_config_text(SessionConfig& config, std::string_view text) {
  int line_no = 0;
  while (!text.empty()) {
    ++line_no;
    const auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);

    // Whole-line comments only; palette values themselves start with '#'.
    line = trim(line);
    if (line.empty() || line.front() == '#') continue;
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw ConfigError("config line " + std::to_string(line_no) + ": expected key = value");
    }
    apply_override(config, line.substr(0, eq), line.substr(eq + 1));
  }
}

SessionConfig load_config_file(const std::filesystem::path& path, SessionConfig base) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file " + path.string());
  std::stringstream buffer;
  buffer << in.rdbuf();
  apply_config_text(base, buffer.str());
  return base;
}

std::string to_config_text(const SessionConfig& c) {
  std::ostringstream out;
  out << std::setprecision(17);
  out << "tick_ms = " << c.tick_ms << '\n'
      << "duration_ticks = " << c.duration_ticks << '\n'
      << "dist_threshold_sq = " << c.dist_threshold_sq << '\n'
      << "run_length = " << c.run_length << '\n'
      << "width = " << c.width << '\n'
      << "height = " << c.height << '\n'
      << "window_w = " << c.window_w << '\n'
      << "window_h = " << c.window_h << '\n'
      << "initial_noc = " << c.initial_noc << '\n'
      << "noc_min = " << c.noc_min << '\n'
      << "noc_max = " << c.noc_max << '\n'
      << "initial_speed = " << c.initial_speed << '\n'
      << "speed_min = " << c.speed_min << '\n'
      << "speed_max = " << c.speed_max << '\n'
      << "inc_boxes = " << c.inc_boxes << '\n'
      << "dec_boxes = " << c.dec_boxes << '\n'
      << "speed_factor_up = " << c.speed_factor_up << '\n'
      << "speed_factor_down = " << c.speed_factor_down << '\n'
      << "box_half_min = " << c.box_half_min << '\n'
      << "box_half_max = " << c.box_half_max << '\n'
      << "hero_half_w = " << c.hero_half_w << '\n'
      << "hero_half_h = " << c.hero_half_h << '\n'
      << "bits_per_changed_pixel = " << c.bits_per_changed_pixel << '\n'
      << "rng_seed = " << c.rng_seed << '\n'
      << "palette = ";
  for (std::size_t i = 0; i < c.palette.size(); ++i) {
    out << (i ? "," : "") << format_rgb(c.palette[i]);
  }
  out << '\n';
  return out.str();
}

std::string format_rgb(const Rgb& color) {
  std::ostringstream out;
  out << '#' << std::hex << std::setfill('0') << std::setw(2) << int(color.r) << std::setw(2)
      << int(color.g) << std::setw(2) << int(color.b);
  return out.str();
}

Rgb parse_rgb(std::string_view text) {
  text = trim(text);
  if (text.size() != 7 || text[0] != '#') {
    throw ConfigError("bad color '" + std::string(text) + "', expected #rrggbb");
  }
  auto channel = [&](std::size_t offset) {
    unsigned value = 0;
    const auto* first = text.data() + offset;
    auto [ptr, ec] = std::from_chars(first, first + 2, value, 16);
    if (ec != std::errc{} || ptr != first + 2) {
      throw ConfigError("bad color '" + std::string(text) + "'");
    }
    return static_cast<std::uint8_t>(value);
  };
  return {channel(1), channel(3), channel(5)};
}

}  // namespace brainb
