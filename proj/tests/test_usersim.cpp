#include <doctest.h>

#include <algorithm>
#include <chrono>

#include "brainb/errors.hpp"
#include "brainb/usersim.hpp"
#include "fixtures.hpp"

using namespace brainb;

namespace {

PointerModel model_of(ModelKind kind) {
  PointerModel m;
  m.kind = kind;
  return m;
}

SessionConfig short_config(std::int64_t ticks) {
  auto c = test::small_config();
  c.duration_ticks = ticks;
  return c;
}

// First recorded transition is a lost2found, and no found2lost precedes the first Dec.
void check_gate(const EventLedger& l) {
  if (!l.ticks_found2lost.empty()) {
    REQUIRE_FALSE(l.ticks_lost2found.empty());
    CHECK(l.ticks_lost2found.front() < l.ticks_found2lost.front());
    REQUIRE_FALSE(l.ticks_lost.empty());
    CHECK(l.ticks_lost.front() < l.ticks_found2lost.front());
  }
}

}  // namespace

TEST_CASE("model names") {
  for (auto kind : {ModelKind::Perfect, ModelKind::Absent, ModelKind::LaggedNoisy, ModelKind::Capacity}) {
    CHECK(parse_model_kind(to_string(kind)) == kind);
  }
  CHECK(parse_model_kind("lagged-noisy") == ModelKind::LaggedNoisy);
  CHECK_THROWS_AS(parse_model_kind("robot"), ConfigError);
}

TEST_CASE("negative model parameters are rejected") {
  PointerModel m;
  m.latency_ticks = -1;
  CHECK_THROWS_AS(PointerDriver{m}, ConfigError);
  m = {};
  m.noise_sigma = -0.5;
  CHECK_THROWS_AS(PointerDriver{m}, ConfigError);
  m = {};
  m.capacity_bps = -1;
  CHECK_THROWS_AS(PointerDriver{m}, ConfigError);
}

TEST_CASE("model_step on a snapshot") {
  auto config = short_config(10);
  Session s = make_session(config);
  begin_tick(s);
  const auto snap = snapshot(s);
  Rng rng(1);

  PointerDriver perfect(model_of(ModelKind::Perfect));
  const auto p = model_step(perfect, snap, rng);
  CHECK(p.x == snap.hero_center().x);
  CHECK(p.y == snap.hero_center().y);
  CHECK(p.button_down);

  PointerDriver absent(model_of(ModelKind::Absent));
  const auto a = model_step(absent, snap, rng);
  CHECK(a.x == 0);
  CHECK(a.y == 0);
  CHECK(a.button_down);

  PointerModel noisy = model_of(ModelKind::LaggedNoisy);
  noisy.noise_sigma = 2.0;
  PointerDriver driver(noisy);
  for (int i = 0; i < 2000; ++i) {
    const auto n = model_step(driver, snap, rng);
    CHECK(std::abs(n.x - snap.hero_center().x) <= 6);
    CHECK(std::abs(n.y - snap.hero_center().y) <= 6);
  }
}

TEST_CASE("lagged pointer repeats the hero position latency ticks later") {
  PointerModel m = model_of(ModelKind::LaggedNoisy);
  m.latency_ticks = 4;
  const auto run = run_headless(short_config(300), m, 3);
  const auto perfect = run_headless(short_config(300), model_of(ModelKind::Perfect), 3);
  // Same seed, different pointer: the worlds agree until the first command differs,
  // so compare against hero positions of the lagged run itself.
  auto config = short_config(300);
  config.rng_seed = 3;
  const auto replay = replay_trace(config, run.trace);
  CHECK(finalize(replay).record == run.record);
  CHECK(perfect.trace.samples.size() == 300);
  for (std::size_t i = 4; i < 40; ++i) {
    // Before any command the world is the same in both runs.
    if (!run.ledger.ticks_lost.empty() && static_cast<std::int64_t>(i) > run.ledger.ticks_lost.front()) break;
    if (!run.ledger.ticks_found.empty() && static_cast<std::int64_t>(i) > run.ledger.ticks_found.front()) break;
    CHECK(run.trace.samples[i].x == perfect.trace.samples[i - 4].x);
    CHECK(run.trace.samples[i].y == perfect.trace.samples[i - 4].y);
  }
}

TEST_CASE("LaggedNoisy with zero latency and noise is Perfect") {
  const auto config = short_config(2000);
  for (std::uint64_t seed : {1u, 2u, 3u}) {
    const auto perfect = run_headless(config, model_of(ModelKind::Perfect), seed);
    const auto lagged = run_headless(config, model_of(ModelKind::LaggedNoisy), seed);
    CHECK(lagged.record == perfect.record);
    CHECK(lagged.trace == perfect.trace);
  }
}

TEST_CASE("Perfect headless run matches the closed form") {
  SessionConfig config;
  config.noc_max = 1000;
  const auto run = run_headless(config, model_of(ModelKind::Perfect), 1);
  const std::int64_t incs = config.duration_ticks / (config.run_length + 1);
  CHECK(run.record.lost.empty());
  CHECK(run.record.found2lost.empty());
  CHECK(run.record.lost2found.empty());
  CHECK(static_cast<std::int64_t>(run.record.found.size()) == incs);
  CHECK(run.record.noc == std::min<std::int64_t>(config.noc_max, config.initial_noc + incs));
  CHECK(run.record.kilobytes == 0.0);
  CHECK(run.record.time_ticks == 6000);
  CHECK(run.record.time_string == "10:0");
  for (std::size_t i = 0; i < run.ledger.found.size(); ++i) {
    CHECK(run.ledger.found[i] == run.bps_per_tick[static_cast<std::size_t>(run.ledger.ticks_found[i])]);
  }

  const auto saturated = run_headless(SessionConfig{}, model_of(ModelKind::Perfect), 2);
  CHECK(saturated.record.noc == SessionConfig{}.noc_max);
}

TEST_CASE("Absent model loses once, unrecorded, and never re-acquires") {
  const auto config = short_config(3000);
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    const auto run = run_headless(config, model_of(ModelKind::Absent), seed);
    CHECK(run.record.found.empty());
    CHECK(run.record.lost2found.empty());
    CHECK(run.record.found2lost.empty());
    CHECK(static_cast<std::int64_t>(run.record.lost.size()) == config.duration_ticks / (config.run_length + 1));
    CHECK(run.record.noc == config.noc_min);
    for (const auto& s : run.trace.samples) {
      CHECK((s.x == 0 && s.y == 0 && s.button_down));
    }
  }
}

TEST_CASE("Capacity with zero capacity behaves as Absent") {
  auto config = short_config(3000);
  PointerModel m = model_of(ModelKind::Capacity);
  m.capacity_bps = 0;
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    const auto run = run_headless(config, m, seed);
    CHECK(run.record.found.empty());
    CHECK(run.record.lost2found.empty());
    CHECK(run.record.found2lost.empty());
    CHECK(run.record.noc == config.noc_min);
    const auto absent = run_headless(config, model_of(ModelKind::Absent), seed);
    CHECK(run.record.lost.size() + 1 >= absent.record.lost.size());
  }
}

TEST_CASE("Capacity model losses are caused by overload") {
  PointerModel m = model_of(ModelKind::Capacity);
  const SessionConfig config;
  // Drift needs two ticks to leave the near radius, then a full far run precedes the Dec.
  const std::int64_t window = config.run_length + 3;
  int checked = 0;
  for (std::uint64_t seed = 1; seed <= 4; ++seed) {
    const auto run = run_headless(config, m, seed);
    check_gate(run.ledger);
    for (const auto tick : run.ledger.ticks_found2lost) {
      const auto from = static_cast<std::size_t>(std::max<std::int64_t>(0, tick - window));
      const auto to = static_cast<std::size_t>(tick);
      bool overloaded = false;
      for (std::size_t t = from; t <= to; ++t) overloaded |= run.bps_per_tick[t] >= m.capacity_bps;
      CHECK(overloaded);
      ++checked;
    }
  }
  CHECK(checked > 0);
}

TEST_CASE("gate property holds for every model") {
  const auto config = short_config(2500);
  PointerModel noisy = model_of(ModelKind::LaggedNoisy);
  noisy.latency_ticks = 6;
  noisy.noise_sigma = 5.0;
  PointerModel capacity = model_of(ModelKind::Capacity);
  capacity.capacity_bps = 15000;
  for (const auto& m : {model_of(ModelKind::Perfect), model_of(ModelKind::Absent), noisy, capacity}) {
    for (std::uint64_t seed = 1; seed <= 6; ++seed) check_gate(run_headless(config, m, seed).ledger);
  }
}

TEST_CASE("headless runs are deterministic and the batch matches serial runs") {
  PointerModel m = model_of(ModelKind::Capacity);
  m.noise_sigma = 3.0;
  m.latency_ticks = 2;
  const auto config = short_config(1500);
  const std::vector<std::uint64_t> seeds = {4, 8, 15, 16, 23, 42};
  const auto batch = run_headless_batch(config, m, seeds);
  REQUIRE(batch.size() == seeds.size());
  for (std::size_t i = 0; i < seeds.size(); ++i) {
    const auto serial = run_headless(config, m, seeds[i]);
    CHECK(write_log(batch[i].record) == write_log(serial.record));
    CHECK(batch[i].trace == serial.trace);
    CHECK(batch[i].final_frame == serial.final_frame);
  }
  CHECK(write_log(batch[0].record) != write_log(batch[1].record));
  CHECK_THROWS_AS(run_headless_batch(config, PointerModel{ModelKind::Capacity, -1}, seeds), ConfigError);
}

TEST_CASE("Capacity model reproduces losing at higher complexity than finding") {
  const SessionConfig config;
  const PointerModel m = model_of(ModelKind::Capacity);
  std::vector<std::uint64_t> seeds(20);
  for (std::size_t i = 0; i < seeds.size(); ++i) seeds[i] = 1000 + i;
  int holds = 0;
  for (const auto& run : run_headless_batch(config, m, seeds)) holds += run.record.relation == Relation::Less;
  CHECK(holds >= 18);
}

TEST_CASE("a ten-minute session runs in well under ten seconds") {
  const auto start = std::chrono::steady_clock::now();
  const auto run = run_headless(SessionConfig{}, model_of(ModelKind::Capacity), 77);
  const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
  CHECK(run.record.time_ticks == 6000);
  CHECK(elapsed.count() < 10.0);
}
