#include "brainb/server.hpp"

#include <boost/asio.hpp>
#include <boost/beast/core.hpp>
#include <boost/beast/websocket.hpp>

#include <chrono>
#include <deque>
#include <fstream>
#include <iostream>
#include <optional>

#include "brainb/errors.hpp"
#include "brainb/image.hpp"
#include "brainb/protocol.hpp"
#include "brainb/session.hpp"
#include "brainb/trace.hpp"

namespace brainb {

namespace asio = boost::asio;
namespace beast = boost::beast;
namespace websocket = beast::websocket;
using tcp = asio::ip::tcp;

struct LiveServer::Impl {
  explicit Impl(Options o)
      : options(std::move(o)),
        acceptor(ioc, tcp::endpoint(asio::ip::make_address(options.address), options.port)),
        timer(ioc) {}

  Options options;
  asio::io_context ioc;
  tcp::acceptor acceptor;
  std::optional<websocket::stream<tcp::socket>> ws;
  beast::flat_buffer buffer;
  asio::steady_timer timer;
  std::chrono::steady_clock::time_point deadline;

  std::optional<Session> session;
  PointerTrace trace;
  PointerSample latest{0, 0, false, 0};
  int saves = 0;

  std::deque<std::string> outbox;
  bool writing = false;
  bool closing = false;
  int exit_code = 1;
  std::filesystem::path last_log;

  void send(std::string message) {
    outbox.push_back(std::move(message));
    if (!writing) write_next();
  }

  void write_next() {
    writing = true;
    ws->async_write(asio::buffer(outbox.front()), [this](beast::error_code ec, std::size_t) {
      writing = false;
      if (ec) return;
      outbox.pop_front();
      if (!outbox.empty()) {
        write_next();
      } else if (closing) {
        ws->async_close(websocket::close_code::normal, [](beast::error_code) {});
      }
    });
  }

  void read_next() {
    ws->async_read(buffer, [this](beast::error_code ec, std::size_t) {
      if (ec) {
        if (!closing) std::cerr << "brainb serve: client disconnected (" << ec.message() << ")\n";
        timer.cancel();
        return;
      }
      const std::string text = beast::buffers_to_string(buffer.data());
      buffer.consume(buffer.size());
      handle(text);
      if (!closing) read_next();
    });
  }

  void handle(const std::string& text) {
    const auto message = protocol::decode_client_message(text);
    std::visit(
        [this](const auto& msg) {
          using T = std::decay_t<decltype(msg)>;
          if constexpr (std::is_same_v<T, protocol::StartMsg>) {
            start(msg);
          } else if constexpr (std::is_same_v<T, protocol::PointerMsg>) {
            latest.x = msg.x;
            latest.y = msg.y;
            latest.button_down = msg.down;
          } else if constexpr (std::is_same_v<T, protocol::PauseMsg>) {
            if (!session) return;
            toggle_pause(*session);
            trace.pause_toggles.push_back(session->elapsed_ticks);
            send(protocol::encode_snapshot(snapshot(*session)));
          } else if constexpr (std::is_same_v<T, protocol::SaveMsg>) {
            if (session) save(false);
          } else if constexpr (std::is_same_v<T, protocol::UnknownMsg>) {
            std::cerr << "brainb serve: ignoring unknown message type '" << msg.type << "'\n";
          } else {
            std::cerr << "brainb serve: ignoring invalid message: " << msg.reason << '\n';
          }
        },
        message);
  }

  void start(const protocol::StartMsg& msg) {
    if (session) {
      std::cerr << "brainb serve: session already running, start ignored\n";
      return;
    }
    try {
      session.emplace(make_session(protocol::apply_start(options.base, msg)));
    } catch (const ConfigError& e) {
      send(protocol::encode_error(e.what()));
      return;
    }
    trace.seed = session->config.rng_seed;
    send(protocol::encode_snapshot(snapshot(*session)));
    deadline = std::chrono::steady_clock::now();
    schedule();
  }

  void schedule() {
    deadline += std::chrono::milliseconds(session->config.tick_ms);
    timer.expires_at(deadline);
    timer.async_wait([this](beast::error_code ec) {
      if (ec || closing) return;
      tick();
    });
  }

  void tick() {
    if (!session->paused) {
      PointerSample sample = latest;
      sample.tick = session->elapsed_ticks;
      run_tick(*session, sample);
      trace.samples.push_back(sample);
    }
    send(protocol::encode_snapshot(snapshot(*session)));
    if (session->finished()) {
      save(true);
      closing = true;
      if (!writing && outbox.empty()) ws->async_close(websocket::close_code::normal, [](beast::error_code) {});
      return;
    }
    schedule();
  }

  void save(bool final) {
    const auto result = finalize(*session, !final);
    const std::string stem = final ? options.stem : options.stem + "-save" + std::to_string(++saves);
    try {
      std::filesystem::create_directories(options.out_dir);
      const auto log_path = options.out_dir / (stem + ".txt");
      std::ofstream(log_path, std::ios::trunc) << write_log(result.record);
      write_final_frame(result.final_frame, session->config.palette, options.out_dir / (stem + ".png"));
      write_trace_file(trace, options.out_dir / (stem + ".trace"));
      last_log = log_path;
      std::cout << "saved " << log_path.string() << '\n';
      if (final) exit_code = 0;
    } catch (const std::exception& e) {
      std::cerr << "brainb serve: " << e.what() << '\n';
    }
    send(protocol::encode_result(result.record, final));
  }
};

LiveServer::LiveServer(Options options) : impl_(std::make_unique<Impl>(std::move(options))) {}

LiveServer::~LiveServer() = default;

std::uint16_t LiveServer::port() const { return impl_->acceptor.local_endpoint().port(); }

std::filesystem::path LiveServer::last_log_path() const { return impl_->last_log; }

int LiveServer::run() {
  Impl& s = *impl_;
  tcp::socket socket = s.acceptor.accept();
  s.ws.emplace(std::move(socket));
  try {
    s.ws->accept();
  } catch (const beast::system_error& e) {
    std::cerr << "brainb serve: handshake failed: " << e.what() << '\n';
    return 1;
  }
  s.ws->text(true);
  s.read_next();
  s.ioc.run();
  return s.exit_code;
}

}  // namespace brainb
