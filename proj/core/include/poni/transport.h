// Copyright 2026 The poni Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <atomic>
#include <cstdint>
#include <filesystem>
#include <mutex>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "poni/enc.h"
#include "poni/store.h"
#include "poni/wire.h"

namespace poni {

struct Endpoint {
    std::string host = "127.0.0.1";
    uint16_t port = 0;

    /// "host:port" (IPv4 literal or "localhost").
    static Endpoint parse(const std::string &addr);
    std::string to_string() const;
};

class TransportError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// A connected TCP stream carrying frames.
class Connection {
   public:
    explicit Connection(int fd) : fd_(fd) {}
    Connection(Connection &&other) noexcept;
    Connection &operator=(Connection &&other) noexcept;
    Connection(const Connection &) = delete;
    Connection &operator=(const Connection &) = delete;
    ~Connection();

    static Connection connect(const Endpoint &ep);

    void send(const Frame &f);
    /// Next frame, or nullopt on a clean close between frames. Throws
    /// DecodeError on an oversized or unknown frame and TransportError on a
    /// truncated stream.
    std::optional<Frame> receive();
    void close();
    void set_receive_timeout(int seconds);
    bool is_open() const { return fd_ >= 0; }

   private:
    int fd_ = -1;
    std::vector<uint8_t> buf_;
};

class Listener {
   public:
    explicit Listener(const Endpoint &ep);
    Listener(const Listener &) = delete;
    Listener &operator=(const Listener &) = delete;
    ~Listener();

    uint16_t port() const { return port_; }
    /// Blocks until a client connects; nullopt once shutdown() was called.
    std::optional<Connection> accept();
    void shutdown();

   private:
    int fd_ = -1;
    uint16_t port_ = 0;
    std::atomic<bool> closed_{false};
};

struct DaemonConfig {
    std::filesystem::path store_dir;
    std::string listen_addr = "127.0.0.1:7411";
    /// Where the ideal OSP drops registers. Defaults to <store_dir>/channel.
    std::filesystem::path channel_dir;
    uint64_t seed = 0;
};

/// Serves audit sessions over TCP out of a FileStore, one thread per connection.
class ProverDaemon {
   public:
    explicit ProverDaemon(DaemonConfig cfg, Backends backends = Backends::reference());
    ~ProverDaemon();

    uint16_t port() const { return listener_.port(); }
    std::string banner() const;

    /// Accept loop; returns after stop().
    void run();
    /// Starts run() on a background thread.
    void start();
    void stop();

    uint64_t sessions_served() const { return served_.load(); }

   private:
    void serve(Connection conn, uint64_t conn_id);

    DaemonConfig cfg_;
    Backends backends_;
    FileStore store_;
    FileChannelOsp channel_;
    Listener listener_;
    std::atomic<uint64_t> next_conn_{0};
    std::atomic<uint64_t> served_{0};
    std::thread runner_;
    std::mutex workers_mu_;
    std::vector<std::thread> workers_;
};

struct RemoteAuditResult {
    Decision decision = Decision::Rej;
    std::optional<ErrorMsg> error;
    Transcript transcript;
};

/// Verifier side of one audit against a daemon. The OSP register travels
/// through `osp` (a FileChannelOsp on the daemon's channel directory).
RemoteAuditResult remote_audit(const Endpoint &ep, const PoniEncryption &scheme, const VerificationKey &vk,
                               const PublicKey &pk_ahe, uint64_t index, OspSender &osp, Rng &rng,
                               uint64_t session);

}  // namespace poni
