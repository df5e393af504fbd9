#pragma once

#include <map>
#include <string>
#include <string_view>
#include <variant>

#include "brainb/config.hpp"
#include "brainb/logkit.hpp"
#include "brainb/session.hpp"

// Messages of the live-session channel, one JSON object per message.
namespace brainb::protocol {

std::string encode_snapshot(const StateSnapshot& snap);

// `final` is false for a mid-session save.
std::string encode_result(const LogRecord& record, bool final = true);

// {"type":"error","message":...}, sent when a start request is rejected.
std::string encode_error(std::string_view message);

struct PointerMsg {
  int x = 0;
  int y = 0;
  bool down = false;
};
struct PauseMsg {};
struct SaveMsg {};
struct StartMsg {
  std::map<std::string, std::string> config_overrides;
};
struct UnknownMsg {
  std::string type;
};
struct InvalidMsg {
  std::string reason;
};

using ClientMessage = std::variant<PointerMsg, PauseMsg, SaveMsg, StartMsg, UnknownMsg, InvalidMsg>;

ClientMessage decode_client_message(std::string_view text);

std::string encode_pointer(const PointerMsg& msg);
std::string encode_start(const std::map<std::string, std::string>& overrides);

// Applies start overrides on top of `base`; ConfigError on a bad key or value.
SessionConfig apply_start(SessionConfig base, const StartMsg& start);

}  // namespace brainb::protocol
