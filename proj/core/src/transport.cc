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

#include "poni/transport.h"

#include <arpa/inet.h>
#include <netdb.h>
#include <netinet/in.h>
#include <netinet/tcp.h>
#include <sys/socket.h>
#include <sys/time.h>
#include <unistd.h>

#include <cerrno>
#include <cstring>
#include <sstream>

#include "poni/errors.h"

namespace poni {

namespace {

std::string errno_text(const char *what) { return std::string(what) + ": " + std::strerror(errno); }

sockaddr_in resolve(const Endpoint &ep) {
    addrinfo hints{};
    hints.ai_family = AF_INET;
    hints.ai_socktype = SOCK_STREAM;
    addrinfo *res = nullptr;
    if (int rc = ::getaddrinfo(ep.host.c_str(), nullptr, &hints, &res); rc != 0 || res == nullptr) {
        throw TransportError("cannot resolve " + ep.host + ": " + ::gai_strerror(rc));
    }
    sockaddr_in addr{};
    std::memcpy(&addr, res->ai_addr, sizeof(addr));
    ::freeaddrinfo(res);
    addr.sin_port = htons(ep.port);
    return addr;
}

constexpr int kSessionTimeoutSeconds = 30;

}  // namespace

Endpoint Endpoint::parse(const std::string &addr) {
    auto colon = addr.rfind(':');
    if (colon == std::string::npos || colon == 0 || colon + 1 == addr.size()) {
        throw std::invalid_argument("address must look like host:port, got '" + addr + "'");
    }
    Endpoint ep;
    ep.host = addr.substr(0, colon);
    unsigned long port = 0;
    try {
        size_t used = 0;
        port = std::stoul(addr.substr(colon + 1), &used);
        if (used != addr.size() - colon - 1) {
            throw std::invalid_argument("trailing characters");
        }
    } catch (const std::exception &) {
        throw std::invalid_argument("bad port in '" + addr + "'");
    }
    if (port > 65535) {
        throw std::invalid_argument("port out of range in '" + addr + "'");
    }
    ep.port = static_cast<uint16_t>(port);
    return ep;
}

std::string Endpoint::to_string() const { return host + ":" + std::to_string(port); }

Connection::Connection(Connection &&other) noexcept : fd_(std::exchange(other.fd_, -1)), buf_(std::move(other.buf_)) {}

Connection &Connection::operator=(Connection &&other) noexcept {
    if (this != &other) {
        close();
        fd_ = std::exchange(other.fd_, -1);
        buf_ = std::move(other.buf_);
    }
    return *this;
}

Connection::~Connection() { close(); }

Connection Connection::connect(const Endpoint &ep) {
    sockaddr_in addr = resolve(ep);
    int fd = ::socket(AF_INET, SOCK_STREAM, 0);
    if (fd < 0) {
        throw TransportError(errno_text("socket"));
    }
    if (::connect(fd, reinterpret_cast<sockaddr *>(&addr), sizeof(addr)) != 0) {
        std::string msg = errno_text(("connect to " + ep.to_string()).c_str());
        ::close(fd);
        throw TransportError(msg);
    }
    int one = 1;
    ::setsockopt(fd, IPPROTO_TCP, TCP_NODELAY, &one, sizeof(one));
    return Connection(fd);
}

void Connection::send(const Frame &f) {
    if (fd_ < 0) {
        throw TransportError("send on a closed connection");
    }
    auto bytes = encode_frame(f);
    size_t off = 0;
    while (off < bytes.size()) {
        ssize_t n = ::send(fd_, bytes.data() + off, bytes.size() - off, MSG_NOSIGNAL);
        if (n < 0) {
            if (errno == EINTR) {
                continue;
            }
            throw TransportError(errno_text("send"));
        }
        off += static_cast<size_t>(n);
    }
}

std::optional<Frame> Connection::receive() {
    if (fd_ < 0) {
        throw TransportError("receive on a closed connection");
    }
    while (true) {
        auto res = decode_frame(buf_);
        switch (res.status) {
            case DecodeStatus::Ok:
                buf_.erase(buf_.begin(), buf_.begin() + static_cast<std::ptrdiff_t>(res.consumed));
                return std::move(res.frame);
            case DecodeStatus::TooLong:
                throw DecodeError("frame length exceeds the limit");
            case DecodeStatus::UnknownType:
                throw DecodeError("unknown frame type");
            case DecodeStatus::NeedMore:
                break;
        }
        uint8_t chunk[4096];
        ssize_t n = ::recv(fd_, chunk, sizeof(chunk), 0);
        if (n < 0) {
            if (errno == EINTR) {
                continue;
            }
            throw TransportError(errno_text("recv"));
        }
        if (n == 0) {
            if (buf_.empty()) {
                return std::nullopt;
            }
            throw TransportError("connection closed mid-frame");
        }
        buf_.insert(buf_.end(), chunk, chunk + n);
    }
}

void Connection::set_receive_timeout(int seconds) {
    timeval tv{seconds, 0};
    ::setsockopt(fd_, SOL_SOCKET, SO_RCVTIMEO, &tv, sizeof(tv));
}

void Connection::close() {
    if (fd_ >= 0) {
        ::close(std::exchange(fd_, -1));
    }
}

Listener::Listener(const Endpoint &ep) {
    sockaddr_in addr = resolve(ep);
    fd_ = ::socket(AF_INET, SOCK_STREAM, 0);
    if (fd_ < 0) {
        throw TransportError(errno_text("socket"));
    }
    int one = 1;
    ::setsockopt(fd_, SOL_SOCKET, SO_REUSEADDR, &one, sizeof(one));
    if (::bind(fd_, reinterpret_cast<sockaddr *>(&addr), sizeof(addr)) != 0 || ::listen(fd_, 64) != 0) {
        std::string msg = errno_text(("listen on " + ep.to_string()).c_str());
        ::close(fd_);
        throw TransportError(msg);
    }
    socklen_t len = sizeof(addr);
    ::getsockname(fd_, reinterpret_cast<sockaddr *>(&addr), &len);
    port_ = ntohs(addr.sin_port);
}

Listener::~Listener() {
    shutdown();
    if (fd_ >= 0) {
        ::close(fd_);
    }
}

std::optional<Connection> Listener::accept() {
    while (!closed_.load()) {
        int fd = ::accept(fd_, nullptr, nullptr);
        if (fd >= 0) {
            if (closed_.load()) {
                ::close(fd);
                return std::nullopt;
            }
            return Connection(fd);
        }
        if (errno != EINTR && errno != ECONNABORTED) {
            if (closed_.load()) {
                return std::nullopt;
            }
            throw TransportError(errno_text("accept"));
        }
    }
    return std::nullopt;
}

void Listener::shutdown() {
    if (!closed_.exchange(true) && fd_ >= 0) {
        ::shutdown(fd_, SHUT_RDWR);
    }
}

ProverDaemon::ProverDaemon(DaemonConfig cfg, Backends backends)
    : cfg_(std::move(cfg)),
      backends_(backends),
      store_(cfg_.store_dir),
      channel_(cfg_.channel_dir.empty() ? cfg_.store_dir / "channel" : cfg_.channel_dir),
      listener_(Endpoint::parse(cfg_.listen_addr)) {}

ProverDaemon::~ProverDaemon() { stop(); }

std::string ProverDaemon::banner() const {
    std::ostringstream out;
    out << "poni prover daemon listening on " << Endpoint::parse(cfg_.listen_addr).host << ':' << port() << '\n'
        << "  store:   " << store_.dir().string() << '\n'
        << "  channel: " << channel_.dir().string() << '\n'
        << "  seed:    " << cfg_.seed << '\n'
        << "  SIMULATION: quantum registers are symbolic coset states. The OSP is an ideal\n"
        << "  functionality that hands the prepared register over the channel directory,\n"
        << "  out of band; the socket carries classical frames only.\n"
        << "  backends: " << backends_.pke->name() << ", " << backends_.ahe->name() << '\n';
    return out.str();
}

void ProverDaemon::run() {
    while (auto conn = listener_.accept()) {
        uint64_t id = next_conn_++;
        std::lock_guard lock(workers_mu_);
        workers_.emplace_back([this, c = std::move(*conn), id]() mutable { serve(std::move(c), id); });
    }
}

void ProverDaemon::start() {
    runner_ = std::thread([this] { run(); });
}

void ProverDaemon::stop() {
    listener_.shutdown();
    if (runner_.joinable()) {
        runner_.join();
    }
    std::vector<std::thread> workers;
    {
        std::lock_guard lock(workers_mu_);
        workers.swap(workers_);
    }
    for (auto &w : workers) {
        if (w.joinable()) {
            w.join();
        }
    }
}

void ProverDaemon::serve(Connection conn, uint64_t conn_id) {
    conn.set_receive_timeout(kSessionTimeoutSeconds);
    Rng rng = trial_rng(cfg_.seed, conn_id);
    StoreProver prover(backends_, store_, channel_, rng);
    try {
        while (!prover.finished()) {
            auto in = conn.receive();
            if (!in) {
                return;
            }
            std::vector<Frame> out;
            try {
                out = prover.handle(*in);
            } catch (const DecodeError &e) {
                conn.send(to_frame(ErrorMsg{ErrorCode::Malformed, e.what()}));
                return;
            } catch (const ProtocolError &e) {
                conn.send(to_frame(ErrorMsg{ErrorCode::Protocol, e.what()}));
                return;
            } catch (const std::exception &e) {
                conn.send(to_frame(ErrorMsg{ErrorCode::Internal, e.what()}));
                return;
            }
            for (const auto &f : out) {
                conn.send(f);
            }
        }
        if (prover.decision()) {
            ++served_;
        }
    } catch (const DecodeError &e) {
        try {
            conn.send(to_frame(ErrorMsg{ErrorCode::Malformed, e.what()}));
        } catch (const std::exception &) {
        }
    } catch (const std::exception &) {
        // Peer went away; nothing was persisted.
    }
}

RemoteAuditResult remote_audit(const Endpoint &ep, const PoniEncryption &scheme, const VerificationKey &vk,
                               const PublicKey &pk_ahe, uint64_t index, OspSender &osp, Rng &rng,
                               uint64_t session) {
    RemoteAuditResult result;
    if (!vk.issued(index)) {
        result.error = ErrorMsg{ErrorCode::UnknownIndex, "index " + std::to_string(index) + " was never issued"};
        return result;
    }
    Connection conn = Connection::connect(ep);
    conn.set_receive_timeout(kSessionTimeoutSeconds);
    EncVerifierSession verifier(scheme, vk, pk_ahe, index, osp, session, rng);
    auto send_all = [&](const std::vector<Frame> &frames) {
        for (const auto &f : frames) {
            result.transcript.push_back({Party::Verifier, f});
            conn.send(f);
        }
    };
    send_all(verifier.start());
    while (!verifier.done()) {
        std::optional<Frame> in;
        try {
            in = conn.receive();
        } catch (const std::exception &e) {
            result.error = ErrorMsg{ErrorCode::Malformed, e.what()};
            break;
        }
        if (!in) {
            break;
        }
        result.transcript.push_back({Party::Prover, *in});
        if (in->type == MessageType::Error) {
            try {
                result.error = parse_error(*in);
            } catch (const std::exception &) {
                result.error = ErrorMsg{ErrorCode::Malformed, "unparseable ERROR frame"};
            }
        }
        auto out = verifier.handle(*in);
        try {
            send_all(out);
        } catch (const TransportError &) {
            // The prover may already have hung up after an ERROR.
        }
    }
    if (verifier.done() && !verifier.aborted()) {
        result.decision = verifier.decision();
        // The prover closes the connection once the updated record is persisted.
        try {
            while (auto in = conn.receive()) {
                result.transcript.push_back({Party::Prover, *in});
                if (in->type == MessageType::Error && !result.error) {
                    result.error = parse_error(*in);
                }
            }
        } catch (const std::exception &) {
        }
    }
    return result;
}

}  // namespace poni
