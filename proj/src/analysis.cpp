#include "brainb/analysis.hpp"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <sstream>

#include "brainb/errors.hpp"

namespace brainb {

namespace {

constexpr int kCsvPrecision = 10;

void require_records(const Cohort& cohort, const char* what) {
  if (cohort.records.empty()) throw UsageError(std::string(what) + ": cohort is empty");
}

void accumulate(const std::vector<std::int64_t>& values, std::vector<double>& sums, std::vector<int>& support) {
  if (sums.size() < values.size()) {
    sums.resize(values.size(), 0.0);
    support.resize(values.size(), 0);
  }
  for (std::size_t i = 0; i < values.size(); ++i) {
    sums[i] += static_cast<double>(values[i]);
    ++support[i];
  }
}

std::ostringstream csv_stream() {
  std::ostringstream out;
  out << std::setprecision(kCsvPrecision);
  return out;
}

}  // namespace

std::vector<CurvePoint> interleaved_curve(const LogRecord& r) {
  std::vector<CurvePoint> curve;
  const std::size_t n = std::max(r.lost2found.size(), r.found2lost.size());
  int index = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (i < r.lost2found.size()) curve.push_back({++index, r.lost2found[i], EventLabel::Finding});
    if (i < r.found2lost.size()) curve.push_back({++index, r.found2lost[i], EventLabel::Losing});
  }
  return curve;
}

AveragedCurves averaged_curves(const Cohort& cohort) {
  require_records(cohort, "averaged_curves");
  AveragedCurves curves;
  for (const auto& r : cohort.records) {
    accumulate(r.lost2found, curves.finding, curves.finding_support);
    accumulate(r.found2lost, curves.losing, curves.losing_support);
  }
  for (std::size_t i = 0; i < curves.finding.size(); ++i) curves.finding[i] /= curves.finding_support[i];
  for (std::size_t i = 0; i < curves.losing.size(); ++i) curves.losing[i] /= curves.losing_support[i];
  return curves;
}

std::map<int, int> size_histogram(const Cohort& cohort) {
  std::map<int, int> histogram;
  for (const auto& r : cohort.records) {
    ++histogram[static_cast<int>(r.lost2found.size() + r.found2lost.size())];
  }
  return histogram;
}

CohortStats cohort_stats(const Cohort& cohort) {
  require_records(cohort, "cohort_stats");
  CohortStats stats;
  stats.n = static_cast<int>(cohort.records.size());
  for (const auto& r : cohort.records) {
    stats.mean_kilobytes += r.kilobytes;
    stats.mean_noc += r.noc;
  }
  stats.mean_kilobytes /= stats.n;
  stats.mean_noc /= stats.n;
  return stats;
}

Relation hypothesis_flag(const LogRecord& r) {
  return relation_of(integer_mean(r.lost2found), integer_mean(r.found2lost));
}

CohortLoad load_cohort(const std::filesystem::path& dir) {
  CohortLoad load;
  load.cohort.label = dir.filename().string();
  std::vector<std::filesystem::path> files;
  for (const auto& entry : std::filesystem::directory_iterator(dir)) {
    if (!entry.is_regular_file()) continue;
    const auto ext = entry.path().extension();
    if (ext == ".txt" || ext == ".log") files.push_back(entry.path());
  }
  std::sort(files.begin(), files.end());
  for (const auto& file : files) {
    std::ifstream in(file);
    if (!in) {
      load.failures.emplace_back(file, "cannot open");
      continue;
    }
    std::stringstream buffer;
    buffer << in.rdbuf();
    try {
      auto parsed = parse_log(buffer.str());
      load.cohort.records.push_back(std::move(parsed.record));
      load.cohort.names.push_back(file.stem().string());
    } catch (const ParseError& e) {
      load.failures.emplace_back(file, e.what());
    }
  }
  return load;
}

std::string curves_csv(const AveragedCurves& c) {
  auto out = csv_stream();
  out << "index,finding_mean,finding_support,losing_mean,losing_support\n";
  const std::size_t n = std::max(c.finding.size(), c.losing.size());
  for (std::size_t i = 0; i < n; ++i) {
    out << i + 1 << ',';
    if (i < c.finding.size()) out << c.finding[i] << ',' << c.finding_support[i];
    else out << ",0";
    out << ',';
    if (i < c.losing.size()) out << c.losing[i] << ',' << c.losing_support[i];
    else out << ",0";
    out << '\n';
  }
  return out.str();
}

std::string histogram_csv(const std::map<int, int>& histogram) {
  auto out = csv_stream();
  out << "events,participants\n";
  for (const auto& [events, count] : histogram) out << events << ',' << count << '\n';
  return out.str();
}

std::string cohort_table_csv(const Cohort& cohort) {
  auto out = csv_stream();
  out << "name,kilobytes,noc,nop,time_ticks,mean_lost2found,mean_found2lost,events,relation\n";
  for (std::size_t i = 0; i < cohort.records.size(); ++i) {
    const auto& r = cohort.records[i];
    const std::string name = i < cohort.names.size() ? cohort.names[i] : std::to_string(i + 1);
    out << name << ',' << r.kilobytes << ',' << r.noc << ',' << r.nop << ',' << r.time_ticks << ','
        << r.mean_l2f << ',' << r.mean_f2l << ',' << r.lost2found.size() + r.found2lost.size() << ','
        << (hypothesis_flag(r) == Relation::Less ? "less" : "not_less") << '\n';
  }
  return out.str();
}

std::string interleaved_csv(const std::vector<CurvePoint>& curve) {
  auto out = csv_stream();
  out << "index,bps,label\n";
  for (const auto& p : curve) {
    out << p.index << ',' << p.bps << ',' << (p.label == EventLabel::Finding ? 'F' : 'L') << '\n';
  }
  return out.str();
}

void export_csv(const std::string& csv, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
  out << csv;
  if (!out) throw std::runtime_error("write failed: " + path.string());
}

}  // namespace brainb
