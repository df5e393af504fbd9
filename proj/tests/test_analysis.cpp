#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>

#include "brainb/analysis.hpp"
#include "brainb/errors.hpp"
#include "brainb/rng.hpp"
#include "fixtures.hpp"

using namespace brainb;

namespace {

LogRecord with_events(std::vector<std::int64_t> l2f, std::vector<std::int64_t> f2l, int noc = 10) {
  return make_record(6000, 0, noc, 0, {}, {}, std::move(l2f), std::move(f2l));
}

std::vector<std::vector<std::string>> read_csv(const std::string& text) {
  std::vector<std::vector<std::string>> rows;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) {
    std::vector<std::string> cells;
    std::stringstream cells_in(line);
    for (std::string cell; std::getline(cells_in, cell, ',');) cells.push_back(cell);
    if (!line.empty() && line.back() == ',') cells.emplace_back();
    rows.push_back(cells);
  }
  return rows;
}

std::filesystem::path fresh_dir(const std::string& name) {
  const auto dir = std::filesystem::temp_directory_path() / name;
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  return dir;
}

}  // namespace

TEST_CASE("interleaved curve of the published log") {
  const auto record = parse_log(test::published_log_text()).record;
  const auto curve = interleaved_curve(record);
  REQUIRE(curve.size() == 56);
  CHECK(curve[0] == CurvePoint{1, 14930, EventLabel::Finding});
  CHECK(curve[1] == CurvePoint{2, 31840, EventLabel::Losing});
  CHECK(curve[55] == CurvePoint{56, 78270, EventLabel::Losing});
  for (std::size_t i = 0; i < curve.size(); ++i) {
    CHECK(curve[i].label == (i % 2 == 0 ? EventLabel::Finding : EventLabel::Losing));
  }
  const auto rows = read_csv(interleaved_csv(curve));
  REQUIRE(rows.size() == 57);
  CHECK(rows[1] == std::vector<std::string>{"1", "14930", "F"});
}

TEST_CASE("interleaving unequal sequences keeps the tail") {
  const auto curve = interleaved_curve(with_events({1, 2, 3}, {10}));
  REQUIRE(curve.size() == 4);
  CHECK(curve[2] == CurvePoint{3, 2, EventLabel::Finding});
  CHECK(curve[3] == CurvePoint{4, 3, EventLabel::Finding});
}

TEST_CASE("averaged curves") {
  SUBCASE("a single record averages to itself") {
    const auto record = parse_log(test::published_log_text()).record;
    const auto curves = averaged_curves(Cohort{"one", {record}, {"published"}});
    REQUIRE(curves.finding.size() == 28);
    for (std::size_t i = 0; i < 28; ++i) {
      CHECK(curves.finding[i] == static_cast<double>(record.lost2found[i]));
      CHECK(curves.losing[i] == static_cast<double>(record.found2lost[i]));
      CHECK(curves.finding_support[i] == 1);
    }
  }
  SUBCASE("two records") {
    const auto curves = averaged_curves(Cohort{"two", {with_events({100}, {}), with_events({300, 7}, {5})}, {}});
    CHECK(curves.finding == std::vector<double>{200.0, 7.0});
    CHECK(curves.finding_support == std::vector<int>{2, 1});
    CHECK(curves.losing == std::vector<double>{5.0});
    CHECK(curves.losing_support == std::vector<int>{1});
  }
  SUBCASE("empty cohort") { CHECK_THROWS_AS(averaged_curves(Cohort{}), UsageError); }
}

TEST_CASE("averaged curves equal a flat re-aggregation") {
  Rng rng(2024);
  Cohort cohort;
  for (int i = 0; i < 33; ++i) {
    std::vector<std::int64_t> l2f(static_cast<std::size_t>(rng.uniform_int(0, 30)));
    std::vector<std::int64_t> f2l(static_cast<std::size_t>(rng.uniform_int(0, 30)));
    for (auto& v : l2f) v = rng.uniform_int(0, 100000);
    for (auto& v : f2l) v = rng.uniform_int(0, 100000);
    cohort.records.push_back(with_events(l2f, f2l));
  }
  // (kind, index) -> (sum, count) over one flat list of every event in the cohort.
  std::map<std::pair<int, std::size_t>, std::pair<double, int>> flat;
  for (const auto& r : cohort.records) {
    for (std::size_t i = 0; i < r.lost2found.size(); ++i) {
      auto& cell = flat[{0, i}];
      cell.first += static_cast<double>(r.lost2found[i]);
      ++cell.second;
    }
    for (std::size_t i = 0; i < r.found2lost.size(); ++i) {
      auto& cell = flat[{1, i}];
      cell.first += static_cast<double>(r.found2lost[i]);
      ++cell.second;
    }
  }
  const auto curves = averaged_curves(cohort);
  std::size_t cells = 0;
  for (const auto& [key, cell] : flat) {
    const auto& means = key.first == 0 ? curves.finding : curves.losing;
    const auto& support = key.first == 0 ? curves.finding_support : curves.losing_support;
    REQUIRE(key.second < means.size());
    CHECK(means[key.second] == doctest::Approx(cell.first / cell.second).epsilon(1e-12));
    CHECK(support[key.second] == cell.second);
    ++cells;
  }
  CHECK(cells == curves.finding.size() + curves.losing.size());
  for (std::size_t i = 1; i < curves.finding_support.size(); ++i) {
    CHECK(curves.finding_support[i] <= curves.finding_support[i - 1]);
  }
  for (std::size_t i = 1; i < curves.losing_support.size(); ++i) {
    CHECK(curves.losing_support[i] <= curves.losing_support[i - 1]);
  }

  // The CSV carries the same numbers.
  const auto rows = read_csv(curves_csv(curves));
  REQUIRE(rows.size() == 1 + std::max(curves.finding.size(), curves.losing.size()));
  CHECK(rows[0] == std::vector<std::string>{"index", "finding_mean", "finding_support", "losing_mean",
                                            "losing_support"});
  for (std::size_t i = 0; i < curves.finding.size(); ++i) {
    CHECK(std::stod(rows[i + 1][1]) == doctest::Approx(curves.finding[i]).epsilon(1e-9));
    CHECK(std::stoi(rows[i + 1][2]) == curves.finding_support[i]);
  }
}

TEST_CASE("size histogram and cohort statistics") {
  const auto published = parse_log(test::published_log_text()).record;
  Cohort one{"one", {published}, {"published"}};
  CHECK(size_histogram(one) == std::map<int, int>{{56, 1}});
  const auto stats = cohort_stats(one);
  CHECK(std::abs(stats.mean_kilobytes - 6.37927) < 5e-6);
  CHECK(stats.mean_noc == 71.0);
  CHECK(stats.n == 1);

  Cohort two{"two", {with_events({1}, {1, 2}, 4), with_events({3, 4}, {5}, 6), with_events({}, {}, 8)}, {}};
  CHECK(size_histogram(two) == std::map<int, int>{{0, 1}, {3, 2}});
  CHECK(cohort_stats(two).mean_noc == 6.0);
  Cohort pair{"pair", {with_events({}, {}, 4), with_events({}, {}, 6)}, {}};
  CHECK(cohort_stats(pair).mean_noc == 5.0);
  CHECK_THROWS_AS(cohort_stats(Cohort{}), UsageError);

  const auto rows = read_csv(histogram_csv(size_histogram(two)));
  CHECK(rows == std::vector<std::vector<std::string>>{{"events", "participants"}, {"0", "1"}, {"3", "2"}});
}

TEST_CASE("hypothesis flag") {
  CHECK(hypothesis_flag(parse_log(test::published_log_text()).record) == Relation::Less);
  CHECK(hypothesis_flag(with_events({10}, {10})) == Relation::NotLess);
  CHECK(hypothesis_flag(with_events({11}, {10})) == Relation::NotLess);
  CHECK(hypothesis_flag(with_events({}, {})) == Relation::NotLess);
}

TEST_CASE("cohort table") {
  Cohort cohort{"c", {parse_log(test::published_log_text()).record, with_events({}, {})}, {"published", "empty"}};
  const auto rows = read_csv(cohort_table_csv(cohort));
  REQUIRE(rows.size() == 3);
  CHECK(rows[1] == std::vector<std::string>{"published", "6.379272461", "71", "0", "6000", "43235", "61283", "56", "less"});
  CHECK(rows[2][8] == "not_less");
}

TEST_CASE("loading a cohort directory") {
  const auto dir = fresh_dir("brainb-analysis-load");
  std::ofstream(dir / "b.txt") << test::published_log_text();
  std::ofstream(dir / "a.log") << write_log(with_events({5}, {9}));
  std::ofstream(dir / "c.txt") << "not a log\n";
  std::ofstream(dir / "ignored.csv") << "x\n";
  const auto load = load_cohort(dir);
  REQUIRE(load.cohort.records.size() == 2);
  CHECK(load.cohort.names == std::vector<std::string>{"a", "b"});
  CHECK(load.cohort.records[1].noc == 71);
  REQUIRE(load.failures.size() == 1);
  CHECK(load.failures[0].first.filename() == "c.txt");
  CHECK(load.failures[0].second.find("line 1") != std::string::npos);
  std::filesystem::remove_all(dir);
}

TEST_CASE("exports are byte-identical on re-export") {
  const auto dir = fresh_dir("brainb-analysis-export");
  Cohort cohort{"c", {parse_log(test::published_log_text()).record, with_events({1, 2}, {3})}, {"x", "y"}};
  const auto csv = curves_csv(averaged_curves(cohort));
  export_csv(csv, dir / "one.csv");
  export_csv(curves_csv(averaged_curves(cohort)), dir / "two.csv");
  auto slurp = [](const std::filesystem::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::stringstream s;
    s << in.rdbuf();
    return s.str();
  };
  CHECK(slurp(dir / "one.csv") == csv);
  CHECK(slurp(dir / "one.csv") == slurp(dir / "two.csv"));
  CHECK_THROWS_AS(export_csv(csv, dir / "missing" / "x.csv"), std::runtime_error);
  std::filesystem::remove_all(dir);
}
