#include "brainb/protocol.hpp"

#include <algorithm>
#include <cmath>

#include <json.hpp>

namespace brainb::protocol {

using nlohmann::json;

std::string encode_snapshot(const StateSnapshot& snap) {
  json boxes = json::array();
  for (const auto& b : snap.boxes) {
    boxes.push_back({{"id", b.id},
                     {"x", b.center.x},
                     {"y", b.center.y},
                     {"hw", b.half_width},
                     {"hh", b.half_height},
                     {"color", b.color_index},
                     {"hero", b.is_hero}});
  }
  const json msg = {{"type", "snapshot"},
                    {"tick", snap.tick},
                    {"boxes", std::move(boxes)},
                    {"bps", snap.bps},
                    {"noc", snap.noc},
                    {"state", snap.state == TrackState::Found ? "found" : "lost"},
                    {"clock", snap.clock},
                    {"paused", snap.paused},
                    {"duration_ticks", snap.duration_ticks},
                    {"tick_ms", snap.tick_ms}};
  return msg.dump();
}

std::string encode_result(const LogRecord& record, bool final) {
  const json msg = {{"type", "result"}, {"kilobytes", record.kilobytes}, {"log", write_log(record)}, {"final", final}};
  return msg.dump();
}

std::string encode_error(std::string_view message) {
  return json{{"type", "error"}, {"message", std::string(message)}}.dump();
}

namespace {

// Browsers may send fractional or wildly out-of-range coordinates; the session clamps later.
int coordinate(double value) {
  return static_cast<int>(std::lround(std::clamp(value, -1e9, 1e9)));
}

}  // namespace

ClientMessage decode_client_message(std::string_view text) {
  const json msg = json::parse(text.begin(), text.end(), nullptr, false);
  if (msg.is_discarded() || !msg.is_object()) return InvalidMsg{"not a JSON object"};
  const auto type_it = msg.find("type");
  if (type_it == msg.end() || !type_it->is_string()) return InvalidMsg{"missing string field 'type'"};
  const auto type = type_it->get<std::string>();

  try {
    if (type == "pointer") {
      PointerMsg p;
      p.x = coordinate(msg.at("x").get<double>());
      p.y = coordinate(msg.at("y").get<double>());
      p.down = msg.at("down").get<bool>();
      return p;
    }
    if (type == "pause") return PauseMsg{};
    if (type == "save") return SaveMsg{};
    if (type == "start") {
      StartMsg start;
      if (const auto it = msg.find("config_overrides"); it != msg.end() && !it->is_null()) {
        if (!it->is_object()) return InvalidMsg{"config_overrides must be an object"};
        for (const auto& [key, value] : it->items()) {
          start.config_overrides[key] = value.is_string() ? value.get<std::string>() : value.dump();
        }
      }
      return start;
    }
  } catch (const json::exception& e) {
    return InvalidMsg{type + ": " + e.what()};
  }
  return UnknownMsg{type};
}

std::string encode_pointer(const PointerMsg& msg) {
  return json{{"type", "pointer"}, {"x", msg.x}, {"y", msg.y}, {"down", msg.down}}.dump();
}

std::string encode_start(const std::map<std::string, std::string>& overrides) {
  json o = json::object();
  for (const auto& [k, v] : overrides) o[k] = v;
  return json{{"type", "start"}, {"config_overrides", o}}.dump();
}

SessionConfig apply_start(SessionConfig base, const StartMsg& start) {
  for (const auto& [key, value] : start.config_overrides) apply_override(base, key, value);
  validate(base);
  return base;
}

}  // namespace brainb::protocol
