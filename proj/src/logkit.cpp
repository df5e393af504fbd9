#include "brainb/logkit.hpp"

#include <charconv>
#include <cmath>
#include <numeric>
#include <optional>
#include <sstream>
#include <system_error>

#include "brainb/errors.hpp"

namespace brainb {

namespace {

constexpr std::string_view kLessLine = "mean(lost2found) < mean(found2lost)";
constexpr std::string_view kNotLessLine = "mean(lost2found) >= mean(found2lost)";
constexpr int kValuesPerLine = 9;
constexpr int kValuesOnLabelLine = 7;

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

// "name      : value" label padded to the ten-character column of the format.
std::string label(std::string_view name) {
  std::string out(name);
  if (out.size() < 10) out.append(10 - out.size(), ' ');
  return out + ": ";
}

void write_values(std::ostringstream& out, std::string_view name,
                  const std::vector<std::int64_t>& values, int on_label_line) {
  out << label(name);
  int column = 0;
  int per_line = on_label_line;
  if (per_line == 0) {
    out << '\n';
    per_line = kValuesPerLine;
  }
  for (const auto v : values) {
    out << v << ' ';
    if (++column == per_line) {
      out << '\n';
      column = 0;
      per_line = kValuesPerLine;
    }
  }
  if (column != 0 || (values.empty() && on_label_line != 0)) out << '\n';
}

struct Line {
  int number = 0;
  std::string_view text;
};

class LineCursor {
 public:
  explicit LineCursor(std::string_view text) {
    int number = 0;
    while (!text.empty()) {
      ++number;
      const auto nl = text.find('\n');
      const auto line = trim(text.substr(0, nl));
      if (!line.empty()) lines_.push_back({number, line});
      text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    }
  }

  bool done() const { return pos_ >= lines_.size(); }
  const Line& peek() const { return lines_[pos_]; }
  const Line& take(const std::string& expected) {
    if (done()) throw ParseError(0, "missing " + expected);
    return lines_[pos_++];
  }

 private:
  std::vector<Line> lines_;
  std::size_t pos_ = 0;
};

std::pair<std::string_view, std::string_view> split_field(std::string_view line) {
  const auto colon = line.find(':');
  if (colon == std::string_view::npos) return {line, {}};
  return {trim(line.substr(0, colon)), trim(line.substr(colon + 1))};
}

template <typename T>
std::optional<T> to_number(std::string_view text) {
  T value{};
  const auto* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc{} || ptr != end || text.empty()) return std::nullopt;
  return value;
}

template <typename T>
T field_value(LineCursor& cursor, std::string_view name, const std::string& what) {
  const Line& line = cursor.take(what);
  const auto [key, value] = split_field(line.text);
  if (key != name) {
    throw ParseError(line.number, "expected " + what + ", found '" + std::string(line.text) + "'");
  }
  const auto number = to_number<T>(value);
  if (!number) throw ParseError(line.number, "malformed number in " + what + ": '" + std::string(value) + "'");
  return *number;
}

// Whitespace-separated integers; nullopt if any token is not one.
std::optional<std::vector<std::int64_t>> integer_list(std::string_view text) {
  std::vector<std::int64_t> out;
  while (true) {
    const auto start = text.find_first_not_of(" \t");
    if (start == std::string_view::npos) break;
    text.remove_prefix(start);
    const auto stop = text.find_first_of(" \t");
    const auto token = text.substr(0, stop);
    const auto value = to_number<std::int64_t>(token);
    if (!value) return std::nullopt;
    out.push_back(*value);
    if (stop == std::string_view::npos) break;
    text.remove_prefix(stop);
  }
  return out;
}

struct Block {
  std::vector<std::int64_t> values;
  std::int64_t printed_mean = 0;
  double printed_var = 0.0;
};

Block read_block(LineCursor& cursor, std::string_view name) {
  const std::string what = "block '" + std::string(name) + "'";
  const Line& header = cursor.take(what);
  const auto [key, rest] = split_field(header.text);
  if (key != name) {
    throw ParseError(header.number, "expected " + what + ", found '" + std::string(header.text) + "'");
  }
  Block block;
  auto first = integer_list(rest);
  if (!first) throw ParseError(header.number, "malformed number in " + what);
  block.values = std::move(*first);
  while (!cursor.done() && split_field(cursor.peek().text).first != "mean") {
    const Line& line = cursor.take(what);
    auto more = integer_list(line.text);
    if (!more) throw ParseError(line.number, "malformed number in " + what + ": '" + std::string(line.text) + "'");
    block.values.insert(block.values.end(), more->begin(), more->end());
  }
  block.printed_mean = field_value<std::int64_t>(cursor, "mean", "mean of " + std::string(name));
  block.printed_var = field_value<double>(cursor, "var", "var of " + std::string(name));
  return block;
}

std::string normalize_spaces(std::string_view s) {
  std::string out;
  for (const char c : s) {
    if (c != ' ' && c != '\t') out.push_back(c);
  }
  return out;
}

// Runs of blanks become a single space.
std::string collapse_spaces(std::string_view s) {
  std::string out;
  for (const char c : s) {
    const bool blank = c == ' ' || c == '\t';
    if (!blank) {
      out.push_back(c);
    } else if (!out.empty() && out.back() != ' ') {
      out.push_back(' ');
    }
  }
  return out;
}

}  // namespace

std::int64_t integer_mean(std::span<const std::int64_t> values) {
  if (values.empty()) return 0;
  const std::int64_t sum = std::accumulate(values.begin(), values.end(), std::int64_t{0});
  return sum / static_cast<std::int64_t>(values.size());
}

double dispersion(std::span<const std::int64_t> values) {
  const std::size_t n = values.size();
  if (n < 2) return 0.0;
  double mean = 0.0;
  for (const auto v : values) mean += static_cast<double>(v);
  mean /= static_cast<double>(n);
  double ss = 0.0;
  for (const auto v : values) {
    const double d = static_cast<double>(v) - mean;
    ss += d * d;
  }
  return std::sqrt(ss / static_cast<double>(n - 1));
}

double final_kilobytes(std::span<const std::int64_t> lost2found,
                       std::span<const std::int64_t> found2lost) {
  const auto m1 = integer_mean(lost2found);
  const auto m2 = integer_mean(found2lost);
  return (((static_cast<double>(m1) + static_cast<double>(m2)) / 2.0) / 8.0) / 1024.0;
}

Relation relation_of(std::int64_t mean_l2f, std::int64_t mean_f2l) {
  return mean_l2f < mean_f2l ? Relation::Less : Relation::NotLess;
}

std::string format_log_time(std::int64_t time_ticks) {
  const std::int64_t seconds = time_ticks / 10;
  return std::to_string(seconds / 60) + ":" + std::to_string(seconds % 60);
}

std::string format_real(double value) {
  std::ostringstream out;
  out << value;
  return out.str();
}

LogRecord make_record(std::int64_t time_ticks, std::int64_t bps_final, int noc, int nop,
                      std::vector<std::int64_t> lost, std::vector<std::int64_t> found,
                      std::vector<std::int64_t> lost2found, std::vector<std::int64_t> found2lost,
                      std::string version) {
  LogRecord r;
  r.version = std::move(version);
  r.time_ticks = time_ticks;
  r.bps_final = bps_final;
  r.noc = noc;
  r.nop = nop;
  r.lost = std::move(lost);
  r.found = std::move(found);
  r.lost2found = std::move(lost2found);
  r.found2lost = std::move(found2lost);
  r.mean_lost = integer_mean(r.lost);
  r.mean_found = integer_mean(r.found);
  r.mean_l2f = integer_mean(r.lost2found);
  r.mean_f2l = integer_mean(r.found2lost);
  r.disp_lost = dispersion(r.lost);
  r.disp_found = dispersion(r.found);
  r.disp_l2f = dispersion(r.lost2found);
  r.disp_f2l = dispersion(r.found2lost);
  r.relation = relation_of(r.mean_l2f, r.mean_f2l);
  r.time_string = format_log_time(r.time_ticks);
  r.kilobytes = final_kilobytes(r.lost2found, r.found2lost);
  return r;
}

std::string check_consistency(const LogRecord& r) {
  if (r.version != kLogVersion && r.version != kOriginalLogVersion) {
    return "unknown version '" + r.version + "'";
  }
  if (r.version.find('\n') != std::string::npos) return "version contains a newline";
  const LogRecord expected = make_record(r.time_ticks, r.bps_final, r.noc, r.nop, r.lost, r.found,
                                         r.lost2found, r.found2lost, r.version);
  if (r.mean_lost != expected.mean_lost) return "mean of lost does not match its sequence";
  if (r.mean_found != expected.mean_found) return "mean of found does not match its sequence";
  if (r.mean_l2f != expected.mean_l2f) return "mean of lost2found does not match its sequence";
  if (r.mean_f2l != expected.mean_f2l) return "mean of found2lost does not match its sequence";
  if (r.disp_lost != expected.disp_lost || r.disp_found != expected.disp_found ||
      r.disp_l2f != expected.disp_l2f || r.disp_f2l != expected.disp_f2l) {
    return "dispersion does not match its sequence";
  }
  if (r.relation != expected.relation) return "relation does not match the means";
  if (r.time_string != expected.time_string) return "time string does not match time ticks";
  if (r.kilobytes != expected.kilobytes) return "kilobytes do not match the means";
  return {};
}

std::string write_log(const LogRecord& r) {
  if (const auto problem = check_consistency(r); !problem.empty()) {
    throw UsageError("write_log: inconsistent record: " + problem);
  }
  std::ostringstream out;
  out << r.version << '\n';
  out << label("time") << r.time_ticks << '\n';
  out << label("bps") << r.bps_final << '\n';
  out << label("noc") << r.noc << '\n';
  out << label("nop") << r.nop << '\n';

  auto block = [&](std::string_view name, const std::vector<std::int64_t>& values, std::int64_t mean,
                   double var, int on_label_line) {
    write_values(out, name, values, on_label_line);
    out << label("mean") << mean << '\n';
    out << label("var") << format_real(var) << '\n';
  };
  block("lost", r.lost, r.mean_lost, r.disp_lost, 0);
  block("found", r.found, r.mean_found, r.disp_found, 0);
  block("lost2found", r.lost2found, r.mean_l2f, r.disp_l2f, kValuesOnLabelLine);
  block("found2lost", r.found2lost, r.mean_f2l, r.disp_f2l, kValuesOnLabelLine);

  out << (r.relation == Relation::Less ? kLessLine : kNotLessLine) << '\n';
  out << label("time") << r.time_string << '\n';
  out << "U R about " << format_real(r.kilobytes) << " Kilobytes\n";
  return out.str();
}

ParsedLog parse_log(std::string_view text) {
  LineCursor cursor(text);
  const Line& version_line = cursor.take("version line");
  const std::string version = collapse_spaces(version_line.text);
  if (version != kLogVersion && version != kOriginalLogVersion) {
    throw ParseError(version_line.number, "unknown version '" + std::string(version_line.text) + "'");
  }

  const auto time_ticks = field_value<std::int64_t>(cursor, "time", "field 'time'");
  const auto bps = field_value<std::int64_t>(cursor, "bps", "field 'bps'");
  const auto noc = field_value<int>(cursor, "noc", "field 'noc'");
  const auto nop = field_value<int>(cursor, "nop", "field 'nop'");

  Block lost = read_block(cursor, "lost");
  Block found = read_block(cursor, "found");
  Block l2f = read_block(cursor, "lost2found");
  Block f2l = read_block(cursor, "found2lost");

  const Line& relation_line = cursor.take("relation line");
  const auto relation_text = normalize_spaces(relation_line.text);
  std::optional<Relation> printed_relation;
  if (relation_text == normalize_spaces(kLessLine)) printed_relation = Relation::Less;
  if (relation_text == normalize_spaces(kNotLessLine)) printed_relation = Relation::NotLess;
  if (!printed_relation) {
    throw ParseError(relation_line.number, "expected relation line, found '" +
                                               std::string(relation_line.text) + "'");
  }

  const Line& clock_line = cursor.take("field 'time' (m:s)");
  const auto [clock_key, clock_value] = split_field(clock_line.text);
  if (clock_key != "time" || clock_value.find(':') == std::string_view::npos) {
    throw ParseError(clock_line.number, "expected 'time : m:s', found '" + std::string(clock_line.text) + "'");
  }

  const Line& score_line = cursor.take("result line");
  constexpr std::string_view kPrefix = "U R about ";
  constexpr std::string_view kSuffix = " Kilobytes";
  const std::string score_text = collapse_spaces(score_line.text);
  if (!score_text.starts_with(kPrefix) || !score_text.ends_with(kSuffix)) {
    throw ParseError(score_line.number, "expected 'U R about <x> Kilobytes', found '" +
                                            std::string(score_line.text) + "'");
  }
  const auto score_value =
      trim(std::string_view(score_text).substr(kPrefix.size(), score_text.size() - kPrefix.size() - kSuffix.size()));
  const auto printed_kb = to_number<double>(score_value);
  if (!printed_kb) throw ParseError(score_line.number, "malformed number in result line");

  if (!cursor.done()) {
    throw ParseError(cursor.peek().number, "unexpected content after the result line");
  }

  ParsedLog parsed;
  parsed.record = make_record(time_ticks, bps, noc, nop, std::move(lost.values), std::move(found.values),
                              std::move(l2f.values), std::move(f2l.values), version);
  const LogRecord& r = parsed.record;
  auto& warnings = parsed.warnings;

  auto check_block = [&](std::string_view name, const Block& printed, std::int64_t mean, double var) {
    if (printed.printed_mean != mean) {
      warnings.push_back("mean of " + std::string(name) + " printed as " +
                         std::to_string(printed.printed_mean) + ", recomputed " + std::to_string(mean));
    }
    if (format_real(printed.printed_var) != format_real(var)) {
      warnings.push_back("var of " + std::string(name) + " printed as " + format_real(printed.printed_var) +
                         ", recomputed " + format_real(var));
    }
  };
  check_block("lost", lost, r.mean_lost, r.disp_lost);
  check_block("found", found, r.mean_found, r.disp_found);
  check_block("lost2found", l2f, r.mean_l2f, r.disp_l2f);
  check_block("found2lost", f2l, r.mean_f2l, r.disp_f2l);
  if (*printed_relation != r.relation) {
    warnings.push_back("relation line contradicts the recomputed means (" + std::to_string(r.mean_l2f) +
                       " vs " + std::to_string(r.mean_f2l) + ")");
  }
  if (clock_value != r.time_string) {
    warnings.push_back("time printed as " + std::string(clock_value) + ", expected " + r.time_string);
  }
  if (format_real(*printed_kb) != format_real(r.kilobytes)) {
    warnings.push_back("result printed as " + format_real(*printed_kb) + " Kilobytes, recomputed " +
                       format_real(r.kilobytes));
  }
  return parsed;
}

}  // namespace brainb
