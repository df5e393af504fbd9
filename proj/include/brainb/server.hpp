#pragma once

#include <cstdint>
#include <filesystem>
#include <functional>
#include <memory>
#include <string>

#include "brainb/config.hpp"

namespace brainb {

// Live session over a WebSocket on a local port. Text frames carry one JSON
// message each (see protocol.hpp). One client, one session: the server waits for
// `start`, ticks on the wall clock every tick_ms, streams snapshots, and on
// completion writes <stem>.txt, <stem>.png and <stem>.trace into out_dir and
// sends the result message.
class LiveServer {
 public:
  struct Options {
    std::string address = "127.0.0.1";
    std::uint16_t port = 8765;  // 0 picks a free port
    SessionConfig base;
    std::filesystem::path out_dir = ".";
    std::string stem = "brainb-live";
  };

  // Binds immediately; throws std::runtime_error if the port is taken.
  explicit LiveServer(Options options);
  ~LiveServer();
  LiveServer(const LiveServer&) = delete;
  LiveServer& operator=(const LiveServer&) = delete;

  std::uint16_t port() const;

  // Serves one client until its session completes. Returns 0 when a result was
  // delivered, 1 if the client left early or a file could not be written.
  int run();

  // Paths written by the last completed session.
  std::filesystem::path last_log_path() const;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

}  // namespace brainb
