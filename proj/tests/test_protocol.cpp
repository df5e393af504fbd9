#include <doctest.h>

#include <json.hpp>

#include "brainb/errors.hpp"
#include "brainb/protocol.hpp"
#include "fixtures.hpp"

using namespace brainb;
using nlohmann::json;

TEST_CASE("snapshot message carries the shown state") {
  auto config = test::small_config();
  Session s = make_session(config);
  run_tick(s, {0, 0, true, 0});
  const auto snap = snapshot(s);
  const auto msg = json::parse(protocol::encode_snapshot(snap));
  CHECK(msg["type"] == "snapshot");
  CHECK(msg["tick"] == snap.tick);
  CHECK(msg["bps"] == snap.bps);
  CHECK(msg["noc"] == snap.noc);
  CHECK(msg["state"] == "found");
  CHECK(msg["clock"] == "0:00");
  CHECK(msg["paused"] == false);
  CHECK(msg["duration_ticks"] == config.duration_ticks);
  CHECK(msg["tick_ms"] == config.tick_ms);
  REQUIRE(msg["boxes"].size() == snap.boxes.size());
  int heroes = 0;
  for (std::size_t i = 0; i < snap.boxes.size(); ++i) {
    const auto& b = msg["boxes"][i];
    CHECK(b["id"] == snap.boxes[i].id);
    CHECK(b["x"] == snap.boxes[i].center.x);
    CHECK(b["y"] == snap.boxes[i].center.y);
    CHECK(b["hw"] == snap.boxes[i].half_width);
    CHECK(b["hh"] == snap.boxes[i].half_height);
    CHECK(b["color"] == snap.boxes[i].color_index);
    heroes += b["hero"].get<bool>();
  }
  CHECK(heroes == 1);
}

TEST_CASE("result message embeds the log text") {
  const auto record = parse_log(test::published_log_text()).record;
  const auto msg = json::parse(protocol::encode_result(record));
  CHECK(msg["type"] == "result");
  CHECK(msg["final"] == true);
  CHECK(std::abs(msg["kilobytes"].get<double>() - 6.37927) < 5e-6);
  CHECK(parse_log(msg["log"].get<std::string>()).record == record);
  CHECK(json::parse(protocol::encode_result(record, false))["final"] == false);

  const auto err = json::parse(protocol::encode_error("bad \"key\""));
  CHECK(err["type"] == "error");
  CHECK(err["message"] == "bad \"key\"");
}

TEST_CASE("client messages decode") {
  using namespace protocol;
  const auto p = std::get<PointerMsg>(decode_client_message(encode_pointer({12, -3, true})));
  CHECK(p.x == 12);
  CHECK(p.y == -3);
  CHECK(p.down);
  const auto frac = std::get<PointerMsg>(decode_client_message(R"({"type":"pointer","x":10.6,"y":1e300,"down":false})"));
  CHECK(frac.x == 11);
  CHECK(frac.y == 1000000000);
  CHECK_FALSE(frac.down);

  CHECK(std::holds_alternative<PauseMsg>(decode_client_message(R"({"type":"pause"})")));
  CHECK(std::holds_alternative<SaveMsg>(decode_client_message(R"({"type":"save"})")));

  const auto start = std::get<StartMsg>(decode_client_message(encode_start({{"tick_ms", "50"}})));
  CHECK(start.config_overrides == std::map<std::string, std::string>{{"tick_ms", "50"}});
  const auto numeric = std::get<StartMsg>(decode_client_message(R"({"type":"start","config_overrides":{"duration_ticks":20}})"));
  CHECK(numeric.config_overrides.at("duration_ticks") == "20");
  CHECK(std::get<StartMsg>(decode_client_message(R"({"type":"start"})")).config_overrides.empty());
}

TEST_CASE("unknown and malformed client messages") {
  using namespace protocol;
  CHECK(std::get<UnknownMsg>(decode_client_message(R"({"type":"dance"})")).type == "dance");
  CHECK(std::holds_alternative<InvalidMsg>(decode_client_message("not json")));
  CHECK(std::holds_alternative<InvalidMsg>(decode_client_message("[1,2]")));
  CHECK(std::holds_alternative<InvalidMsg>(decode_client_message(R"({"x":1})")));
  CHECK(std::holds_alternative<InvalidMsg>(decode_client_message(R"({"type":"pointer","x":1})")));
  CHECK(std::holds_alternative<InvalidMsg>(decode_client_message(R"({"type":"pointer","x":"a","y":1,"down":true})")));
  CHECK(std::holds_alternative<InvalidMsg>(decode_client_message(R"({"type":"start","config_overrides":[1]})")));
}

TEST_CASE("start overrides apply on top of the base configuration") {
  using namespace protocol;
  const auto config = apply_start(test::small_config(), StartMsg{{{"duration_ticks", "20"}, {"tick_ms", "10"}}});
  CHECK(config.duration_ticks == 20);
  CHECK(config.tick_ms == 10);
  CHECK(config.width == test::small_config().width);
  CHECK_THROWS_AS(apply_start(SessionConfig{}, StartMsg{{{"colour", "1"}}}), ConfigError);
  CHECK_THROWS_AS(apply_start(SessionConfig{}, StartMsg{{{"tick_ms", "0"}}}), ConfigError);
}
