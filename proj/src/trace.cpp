#include "brainb/trace.hpp"

#include <algorithm>
#include <charconv>
#include <cstdint>
#include <fstream>
#include <sstream>
#include <system_error>

#include "brainb/errors.hpp"

namespace brainb {

namespace {

std::vector<std::string_view> tokens(std::string_view line) {
  std::vector<std::string_view> out;
  while (true) {
    const auto start = line.find_first_not_of(" \t\r");
    if (start == std::string_view::npos) break;
    line.remove_prefix(start);
    const auto stop = line.find_first_of(" \t\r");
    out.push_back(line.substr(0, stop));
    if (stop == std::string_view::npos) break;
    line.remove_prefix(stop);
  }
  return out;
}

template <typename T>
T number(std::string_view token, int line_no) {
  T value{};
  const auto* end = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(token.data(), end, value);
  if (ec != std::errc{} || ptr != end) {
    throw ParseError(line_no, "malformed number '" + std::string(token) + "'");
  }
  return value;
}

}  // namespace

std::string write_trace(const PointerTrace& trace) {
  std::ostringstream out;
  if (trace.seed) out << "# seed " << *trace.seed << '\n';
  std::size_t next_toggle = 0;
  auto flush_toggles = [&](std::int64_t upto) {
    while (next_toggle < trace.pause_toggles.size() && trace.pause_toggles[next_toggle] <= upto) {
      out << "# pause " << trace.pause_toggles[next_toggle++] << '\n';
    }
  };
  for (const auto& s : trace.samples) {
    flush_toggles(s.tick);
    out << s.tick << ' ' << s.x << ' ' << s.y << ' ' << (s.button_down ? 1 : 0) << '\n';
  }
  flush_toggles(INT64_MAX);
  return out.str();
}

PointerTrace parse_trace(std::string_view text) {
  PointerTrace trace;
  int line_no = 0;
  while (!text.empty()) {
    ++line_no;
    const auto nl = text.find('\n');
    const auto line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);

    const auto parts = tokens(line);
    if (parts.empty()) continue;
    if (parts[0].starts_with('#')) {
      if (parts.size() == 3 && parts[0] == "#" && parts[1] == "pause") {
        trace.pause_toggles.push_back(number<std::int64_t>(parts[2], line_no));
      } else if (parts.size() == 3 && parts[0] == "#" && parts[1] == "seed") {
        trace.seed = number<std::uint64_t>(parts[2], line_no);
      }
      continue;
    }
    if (parts.size() != 4) throw ParseError(line_no, "expected 'tick x y down'");
    PointerSample s;
    s.tick = number<std::int64_t>(parts[0], line_no);
    s.x = number<int>(parts[1], line_no);
    s.y = number<int>(parts[2], line_no);
    const int down = number<int>(parts[3], line_no);
    if (down != 0 && down != 1) throw ParseError(line_no, "down must be 0 or 1");
    s.button_down = down == 1;
    if (!trace.samples.empty() && s.tick <= trace.samples.back().tick) {
      throw ParseError(line_no, "ticks must increase");
    }
    trace.samples.push_back(s);
  }
  return trace;
}

PointerTrace read_trace_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open trace " + path.string());
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_trace(buffer.str());
}

void write_trace_file(const PointerTrace& trace, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::trunc);
  if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
  out << write_trace(trace);
  if (!out) throw std::runtime_error("write failed: " + path.string());
}

PointerSample absent_sample(std::int64_t tick) { return {0, 0, true, tick}; }

Session replay_trace(const SessionConfig& config, const PointerTrace& trace, std::int64_t stop_after) {
  Session session = make_session(config);
  const std::int64_t stop = stop_after < 0 ? config.duration_ticks
                                           : std::min<std::int64_t>(stop_after, config.duration_ticks);
  std::size_t sample = 0;
  std::size_t toggle = 0;
  auto apply_toggles = [&](std::int64_t upto) {
    while (toggle < trace.pause_toggles.size() && trace.pause_toggles[toggle] <= upto) {
      toggle_pause(session);
      ++toggle;
    }
  };
  while (session.elapsed_ticks < stop) {
    const std::int64_t tick = session.elapsed_ticks;
    apply_toggles(tick);
    // Paused ticks do not advance, so a resume always carries the same tick number.
    if (session.paused) break;
    while (sample < trace.samples.size() && trace.samples[sample].tick < tick) ++sample;
    const bool have = sample < trace.samples.size() && trace.samples[sample].tick == tick;
    run_tick(session, have ? trace.samples[sample] : absent_sample(tick));
  }
  apply_toggles(INT64_MAX);
  return session;
}

std::optional<std::int64_t> first_divergence(const LogRecord& original, const Session& replayed) {
  const LogRecord regenerated = finalize(replayed, true).record;
  if (write_log(regenerated) == write_log(original)) return std::nullopt;

  struct Event {
    std::int64_t tick;
    const std::vector<std::int64_t>* original;
    std::int64_t value;
    std::size_t index;
  };
  const EventLedger& ledger = replayed.ledger;
  std::vector<Event> events;
  auto add = [&](const std::vector<std::int64_t>& values, const std::vector<std::int64_t>& ticks,
                 const std::vector<std::int64_t>& reference) {
    for (std::size_t i = 0; i < values.size(); ++i) events.push_back({ticks[i], &reference, values[i], i});
  };
  add(ledger.lost, ledger.ticks_lost, original.lost);
  add(ledger.found, ledger.ticks_found, original.found);
  add(ledger.lost2found, ledger.ticks_lost2found, original.lost2found);
  add(ledger.found2lost, ledger.ticks_found2lost, original.found2lost);
  std::stable_sort(events.begin(), events.end(), [](const Event& a, const Event& b) { return a.tick < b.tick; });
  for (const auto& e : events) {
    if (e.index >= e.original->size() || (*e.original)[e.index] != e.value) return e.tick;
  }
  return replayed.elapsed_ticks > 0 ? replayed.elapsed_ticks - 1 : 0;
}

}  // namespace brainb
