#pragma once

// HTTP routes over SessionManager.

#include <cstdint>
#include <memory>
#include <string>

#include "thuelab/session.hpp"

namespace httplib {
class Server;
}

namespace thuelab {

class SessionServer {
 public:
  explicit SessionServer(SessionManager& sessions);
  ~SessionServer();

  /// Binds to host:port (port 0 picks a free one); returns the bound port or -1.
  int bind(const std::string& host, int port);
  /// Serves until stop(); call after bind().
  bool listen();
  void stop();
  void wait_until_ready() const;

 private:
  SessionManager& sessions_;
  std::unique_ptr<httplib::Server> server_;
};

/// Blocking: serves on 127.0.0.1:port.
int run_server(int port, std::uint64_t default_seed);

}  // namespace thuelab
