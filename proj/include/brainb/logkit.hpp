#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace brainb {

inline constexpr std::string_view kLogVersion = "NEMESPOR BrainB Test 6.0.3-reimpl";
inline constexpr std::string_view kOriginalLogVersion = "NEMESPOR BrainB Test 6.0.3";

enum class Relation { Less, NotLess };

// Everything in a session log file. The means, dispersions, relation, time
// string and kilobytes are derived from the other fields; make_record fills them.
struct LogRecord {
  std::string version{kLogVersion};
  std::int64_t time_ticks = 0;  // 100 ms units
  std::int64_t bps_final = 0;
  int noc = 0;
  int nop = 0;
  std::vector<std::int64_t> lost;
  std::vector<std::int64_t> found;
  std::vector<std::int64_t> lost2found;
  std::vector<std::int64_t> found2lost;

  std::int64_t mean_lost = 0;
  std::int64_t mean_found = 0;
  std::int64_t mean_l2f = 0;
  std::int64_t mean_f2l = 0;
  double disp_lost = 0.0;
  double disp_found = 0.0;
  double disp_l2f = 0.0;
  double disp_f2l = 0.0;
  Relation relation = Relation::NotLess;
  std::string time_string = "0:0";
  double kilobytes = 0.0;

  bool operator==(const LogRecord&) const = default;
};

// Sum divided by length with truncating integer division; 0 for an empty sequence.
std::int64_t integer_mean(std::span<const std::int64_t> values);

// Sample standard deviation (n - 1 denominator); 0 for fewer than two values.
double dispersion(std::span<const std::int64_t> values);

// ((mean(l2f) + mean(f2l)) / 2) / 8 / 1024, means taken as integers first.
double final_kilobytes(std::span<const std::int64_t> lost2found,
                       std::span<const std::int64_t> found2lost);

Relation relation_of(std::int64_t mean_l2f, std::int64_t mean_f2l);

// "m:s" without padding, e.g. 6000 -> "10:0", 100 -> "0:10".
std::string format_log_time(std::int64_t time_ticks);

// Default iostream formatting (6 significant digits), as the log prints reals.
std::string format_real(double value);

LogRecord make_record(std::int64_t time_ticks, std::int64_t bps_final, int noc, int nop,
                      std::vector<std::int64_t> lost, std::vector<std::int64_t> found,
                      std::vector<std::int64_t> lost2found, std::vector<std::int64_t> found2lost,
                      std::string version = std::string(kLogVersion));

// Empty when every derived field matches its recomputation, else the first mismatch.
std::string check_consistency(const LogRecord& record);

// UsageError when check_consistency reports a problem.
std::string write_log(const LogRecord& record);

struct ParsedLog {
  LogRecord record;  // derived fields recomputed from the parsed sequences
  std::vector<std::string> warnings;  // printed values that disagree with the recomputation
};

// Tolerates any whitespace between numbers and any wrapping. ParseError naming
// the line on a missing field, malformed number or unknown version.
ParsedLog parse_log(std::string_view text);

}  // namespace brainb
