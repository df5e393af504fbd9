// brainb: headless runs, live serving, cohort analysis and replay.

#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "brainb/analysis.hpp"
#include "brainb/errors.hpp"
#include "brainb/image.hpp"
#include "brainb/logkit.hpp"
#include "brainb/server.hpp"
#include "brainb/trace.hpp"
#include "brainb/usersim.hpp"

namespace fs = std::filesystem;
using namespace brainb;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitIo = 1;
constexpr int kExitUsage = 2;
constexpr int kExitMismatch = 3;

std::string default_out_dir() {
  const char* env = std::getenv("BRAINB_OUT_DIR");
  return env && *env ? env : ".";
}

struct ConfigFlags {
  std::string config_file;
  std::vector<std::string> sets;
  int duration_ticks = -1;

  void add(CLI::App* cmd) {
    cmd->add_option("--config", config_file, "key = value config file")->check(CLI::ExistingFile);
    cmd->add_option("--set", sets, "override one config key, key=value (repeatable)");
    cmd->add_option("--duration-ticks", duration_ticks, "session length in ticks");
  }

  SessionConfig build() const {
    SessionConfig config;
    if (!config_file.empty()) config = load_config_file(config_file);
    for (const auto& kv : sets) {
      const auto eq = kv.find('=');
      if (eq == std::string::npos) throw ConfigError("--set expects key=value, got '" + kv + "'");
      apply_override(config, kv.substr(0, eq), kv.substr(eq + 1));
    }
    if (duration_ticks >= 0) config.duration_ticks = duration_ticks;
    validate(config);
    return config;
  }
};

std::vector<std::uint64_t> parse_seed_range(const std::string& text) {
  const auto dots = text.find("..");
  if (dots == std::string::npos) throw ConfigError("--seeds expects a..b, got '" + text + "'");
  std::uint64_t first = 0;
  std::uint64_t last = 0;
  try {
    first = std::stoull(text.substr(0, dots));
    last = std::stoull(text.substr(dots + 2));
  } catch (const std::exception&) {
    throw ConfigError("--seeds expects a..b, got '" + text + "'");
  }
  if (last < first) throw ConfigError("--seeds range is empty");
  std::vector<std::uint64_t> seeds;
  for (auto s = first; s <= last; ++s) seeds.push_back(s);
  return seeds;
}

std::string read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  std::stringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_text(const fs::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
  out << text;
  if (!out) throw std::runtime_error("write failed: " + path.string());
}

// --- run -------------------------------------------------------------------

struct RunFlags {
  ConfigFlags config;
  std::string model = "perfect";
  std::uint64_t seed = 1;
  std::string seeds;
  PointerModel pointer;
  std::string out_dir = default_out_dir();
};

int cmd_run(const RunFlags& flags) {
  SessionConfig config;
  PointerModel model = flags.pointer;
  std::vector<std::uint64_t> seeds;
  try {
    config = flags.config.build();
    model.kind = parse_model_kind(flags.model);
    PointerDriver check(model);
    seeds = flags.seeds.empty() ? std::vector<std::uint64_t>{flags.seed} : parse_seed_range(flags.seeds);
  } catch (const ConfigError& e) {
    std::cerr << "brainb run: " << e.what() << '\n';
    return kExitUsage;
  }

  const auto runs = run_headless_batch(config, model, seeds);
  try {
    fs::create_directories(flags.out_dir);
    for (std::size_t i = 0; i < runs.size(); ++i) {
      const auto& run = runs[i];
      const std::string stem = "brainb-" + std::string(to_string(model.kind)) + "-s" + std::to_string(seeds[i]);
      const fs::path base = fs::path(flags.out_dir) / stem;
      write_text(base.string() + ".txt", write_log(run.record));
      write_final_frame(run.final_frame, config.palette, base.string() + ".png");
      write_trace_file(run.trace, base.string() + ".trace");
      std::cout << "U R about " << format_real(run.record.kilobytes) << " Kilobytes"
                << "  [seed " << seeds[i] << ", noc " << run.record.noc << ", " << base.string() << ".txt]\n";
    }
  } catch (const std::exception& e) {
    std::cerr << "brainb run: " << e.what() << '\n';
    return kExitIo;
  }
  return kExitOk;
}

// --- serve -----------------------------------------------------------------

struct ServeFlags {
  ConfigFlags config;
  std::string address = "127.0.0.1";
  std::uint16_t port = 8765;
  std::uint64_t seed = 1;
  std::string out_dir = default_out_dir();
  std::string stem = "brainb-live";
};

int cmd_serve(const ServeFlags& flags) {
  LiveServer::Options options;
  try {
    options.base = flags.config.build();
  } catch (const ConfigError& e) {
    std::cerr << "brainb serve: " << e.what() << '\n';
    return kExitUsage;
  }
  options.base.rng_seed = flags.seed;
  options.address = flags.address;
  options.port = flags.port;
  options.out_dir = flags.out_dir;
  options.stem = flags.stem;
  try {
    LiveServer server(options);
    std::cout << "brainb serve: listening on ws://" << flags.address << ':' << server.port() << '\n'
              << std::flush;
    return server.run();
  } catch (const std::exception& e) {
    std::cerr << "brainb serve: " << e.what() << '\n';
    return kExitIo;
  }
}

// --- analyze ---------------------------------------------------------------

struct AnalyzeFlags {
  std::string in_dir;
  std::string out_dir;
};

int cmd_analyze(const AnalyzeFlags& flags) {
  CohortLoad load;
  try {
    load = load_cohort(flags.in_dir);
  } catch (const std::exception& e) {
    std::cerr << "brainb analyze: " << e.what() << '\n';
    return kExitIo;
  }
  for (const auto& [path, reason] : load.failures) {
    std::cerr << "skipped " << path.string() << ": " << reason << '\n';
  }
  if (load.cohort.records.empty()) {
    std::cerr << "brainb analyze: no parseable logs in " << flags.in_dir << '\n';
    return kExitIo;
  }

  const auto stats = cohort_stats(load.cohort);
  const fs::path out = flags.out_dir.empty() ? fs::path(flags.in_dir) : fs::path(flags.out_dir);
  try {
    fs::create_directories(out);
    export_csv(curves_csv(averaged_curves(load.cohort)), out / "curves.csv");
    export_csv(histogram_csv(size_histogram(load.cohort)), out / "histogram.csv");
    export_csv(cohort_table_csv(load.cohort), out / "cohort.csv");
  } catch (const std::exception& e) {
    std::cerr << "brainb analyze: " << e.what() << '\n';
    return kExitIo;
  }

  int less = 0;
  for (const auto& r : load.cohort.records) less += hypothesis_flag(r) == Relation::Less;
  std::cout << "records        : " << stats.n << '\n'
            << "mean kilobytes : " << format_real(stats.mean_kilobytes) << '\n'
            << "mean noc       : " << format_real(stats.mean_noc) << '\n'
            << "l2f < f2l      : " << less << " of " << stats.n << '\n'
            << "csv written to : " << out.string() << '\n';
  return kExitOk;
}

// --- replay ----------------------------------------------------------------

struct ReplayFlags {
  ConfigFlags config;
  std::string trace_path;
  std::string log_path;
  std::uint64_t seed = 0;
  bool seed_given = false;
};

int cmd_replay(const ReplayFlags& flags) {
  SessionConfig config;
  try {
    config = flags.config.build();
  } catch (const ConfigError& e) {
    std::cerr << "brainb replay: " << e.what() << '\n';
    return kExitUsage;
  }

  PointerTrace trace;
  std::string original_text;
  ParsedLog original;
  try {
    trace = read_trace_file(flags.trace_path);
    original_text = read_file(flags.log_path);
    original = parse_log(original_text);
  } catch (const std::exception& e) {
    std::cerr << "brainb replay: " << e.what() << '\n';
    return kExitIo;
  }

  config.rng_seed = flags.seed_given ? flags.seed : trace.seed.value_or(1);
  const std::int64_t ticks = original.record.time_ticks * 100 / config.tick_ms;
  const Session session = replay_trace(config, trace, ticks);
  const std::string regenerated = write_log(finalize(session, true).record);
  if (regenerated == original_text) {
    std::cout << "replay matches " << flags.log_path << " (" << session.elapsed_ticks << " ticks)\n";
    return kExitOk;
  }
  const auto tick = first_divergence(original.record, session).value_or(session.elapsed_ticks);
  std::cerr << "replay diverges from " << flags.log_path << " at tick " << tick << '\n';
  return kExitMismatch;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"BrainB adaptive tracking benchmark"};
  app.require_subcommand(1);

  RunFlags run;
  auto* run_cmd = app.add_subcommand("run", "headless session(s) with a scripted pointer");
  run.config.add(run_cmd);
  run_cmd->add_option("--model", run.model, "perfect | absent | lagged | capacity");
  auto* seed_opt = run_cmd->add_option("--seed", run.seed, "RNG seed");
  run_cmd->add_option("--seeds", run.seeds, "seed range a..b, one run per seed")->excludes(seed_opt);
  run_cmd->add_option("--latency", run.pointer.latency_ticks, "pointer latency in ticks");
  run_cmd->add_option("--noise", run.pointer.noise_sigma, "pointer noise sigma in pixels");
  run_cmd->add_option("--capacity-bps", run.pointer.capacity_bps, "capacity model threshold");
  run_cmd->add_option("--reacquire", run.pointer.reacquire_ticks, "capacity model re-acquire delay");
  run_cmd->add_option("--drift", run.pointer.drift_px_per_tick, "capacity model drift speed");
  run_cmd->add_option("--out", run.out_dir, "output directory (default $BRAINB_OUT_DIR or .)");

  ServeFlags serve;
  auto* serve_cmd = app.add_subcommand("serve", "live session for the browser UI over a WebSocket");
  serve.config.add(serve_cmd);
  serve_cmd->add_option("--address", serve.address, "bind address");
  serve_cmd->add_option("--port", serve.port, "port (0 picks a free one)");
  serve_cmd->add_option("--seed", serve.seed, "RNG seed");
  serve_cmd->add_option("--out", serve.out_dir, "output directory (default $BRAINB_OUT_DIR or .)");
  serve_cmd->add_option("--stem", serve.stem, "output file stem");

  AnalyzeFlags analyze;
  auto* analyze_cmd = app.add_subcommand("analyze", "cohort statistics and CSVs over a log directory");
  analyze_cmd->add_option("--in,in", analyze.in_dir, "directory of logs")->required()->check(CLI::ExistingDirectory);
  analyze_cmd->add_option("--out", analyze.out_dir, "CSV output directory (default: the input directory)");

  ReplayFlags replay;
  auto* replay_cmd = app.add_subcommand("replay", "re-run a recorded pointer trace and compare logs");
  replay.config.add(replay_cmd);
  replay_cmd->add_option("--trace", replay.trace_path, "pointer trace")->required();
  replay_cmd->add_option("--log", replay.log_path, "original log")->required();
  auto* replay_seed = replay_cmd->add_option("--seed", replay.seed, "RNG seed (default: from the trace)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }
  replay.seed_given = replay_seed->count() > 0;

  try {
    if (*run_cmd) return cmd_run(run);
    if (*serve_cmd) return cmd_serve(serve);
    if (*analyze_cmd) return cmd_analyze(analyze);
    if (*replay_cmd) return cmd_replay(replay);
  } catch (const std::exception& e) {
    std::cerr << "brainb: " << e.what() << '\n';
    return kExitIo;
  }
  return kExitUsage;
}
