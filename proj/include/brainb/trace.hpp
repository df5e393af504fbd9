#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "brainb/session.hpp"

namespace brainb {

// Pointer samples applied to a session, one per advancing tick, written as
// "tick x y down". Pause toggles are kept as "# pause <tick>" comment lines
// (toggled before the sample of that tick), which other readers can skip.
struct PointerTrace {
  std::optional<std::uint64_t> seed;  // "# seed <n>" header, informational
  std::vector<PointerSample> samples;
  std::vector<std::int64_t> pause_toggles;
  bool operator==(const PointerTrace&) const = default;
};

std::string write_trace(const PointerTrace& trace);
PointerTrace parse_trace(std::string_view text);  // ParseError naming the line

PointerTrace read_trace_file(const std::filesystem::path& path);
void write_trace_file(const PointerTrace& trace, const std::filesystem::path& path);

// Sample the replayer uses for a tick the trace does not cover: the Absent model's corner.
PointerSample absent_sample(std::int64_t tick);

// Re-executes a session from its trace for stop_after ticks (the configured
// duration when negative). Ticks the trace does not cover use absent_sample.
Session replay_trace(const SessionConfig& config, const PointerTrace& trace,
                     std::int64_t stop_after = -1);

// First tick at which a replayed session departs from the original log: the tick of
// the first ledger event whose value differs or is missing, else the final tick when
// only the header differs. nullopt when the regenerated log text equals `original`.
std::optional<std::int64_t> first_divergence(const LogRecord& original, const Session& replayed);

}  // namespace brainb
