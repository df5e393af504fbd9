#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include "brainb/logkit.hpp"

namespace brainb {

struct Cohort {
  std::string label;
  std::vector<LogRecord> records;
  std::vector<std::string> names;  // file stems, parallel to records
};

enum class EventLabel { Finding, Losing };

struct CurvePoint {
  int index = 0;  // 1-based
  std::int64_t bps = 0;
  EventLabel label = EventLabel::Finding;
  bool operator==(const CurvePoint&) const = default;
};

// lost2found[0], found2lost[0], lost2found[1], ... as F, L, F, ...
std::vector<CurvePoint> interleaved_curve(const LogRecord& record);

// Per event index (0-based here, 1-based in CSV): mean over the records that
// have that event, with the number of such records alongside.
struct AveragedCurves {
  std::vector<double> finding;
  std::vector<int> finding_support;
  std::vector<double> losing;
  std::vector<int> losing_support;
};

// UsageError on an empty cohort.
AveragedCurves averaged_curves(const Cohort& cohort);

// len(lost2found) + len(found2lost) -> number of records.
std::map<int, int> size_histogram(const Cohort& cohort);

struct CohortStats {
  double mean_kilobytes = 0.0;
  double mean_noc = 0.0;
  int n = 0;
};

CohortStats cohort_stats(const Cohort& cohort);  // UsageError on an empty cohort

Relation hypothesis_flag(const LogRecord& record);

struct CohortLoad {
  Cohort cohort;
  std::vector<std::pair<std::filesystem::path, std::string>> failures;
};

// Parses every *.txt / *.log file in `dir`, sorted by file name.
CohortLoad load_cohort(const std::filesystem::path& dir);

std::string curves_csv(const AveragedCurves& curves);
std::string histogram_csv(const std::map<int, int>& histogram);
std::string cohort_table_csv(const Cohort& cohort);
std::string interleaved_csv(const std::vector<CurvePoint>& curve);

// Writes `csv` to `path`; std::runtime_error on I/O failure.
void export_csv(const std::string& csv, const std::filesystem::path& path);

}  // namespace brainb
