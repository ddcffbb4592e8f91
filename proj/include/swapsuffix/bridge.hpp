#pragma once

// Client side of the line-delimited JSON encoder protocol:
//
//   {"op":"meta"}                                  -> {"ok":true,"vocab_size":V,"dim":D,"max_len":N}
//   {"op":"encode","token_ids":[...]}              -> {"ok":true,"values":[n*D numbers]}
//   {"op":"encode","token_ids":[[...],[...]]}      -> {"ok":true,"values":[[...],[...]]}
//   {"op":"grad","token_ids":[...],"cotangent":[...],"positions":[...]}
//                                                  -> {"ok":true,"values":[[V numbers] per position]}
//   failure                                        -> {"ok":false,"error":"..."}
//
// One request per line, one response per line, answered in order.

#include <fcntl.h>
#include <netdb.h>
#include <poll.h>
#include <signal.h>
#include <sys/socket.h>
#include <sys/types.h>
#include <sys/wait.h>
#include <unistd.h>

#include <cerrno>
#include <chrono>
#include <cstring>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "swapsuffix/encoder.hpp"
#include "swapsuffix/error.hpp"

namespace swapsuffix {

/// A bidirectional line channel with a per-read deadline.
class LineTransport {
 public:
  virtual ~LineTransport() = default;
  virtual void send_line(const std::string& line) = 0;
  virtual std::string recv_line(std::chrono::milliseconds timeout) = 0;
};

namespace detail {

class FdLineReader {
 public:
  std::string read_line(int fd, std::chrono::milliseconds timeout) {
    const auto deadline = std::chrono::steady_clock::now() + timeout;
    for (;;) {
      if (auto nl = buf_.find('\n'); nl != std::string::npos) {
        std::string line = buf_.substr(0, nl);
        buf_.erase(0, nl + 1);
        return line;
      }
      const auto left = std::chrono::duration_cast<std::chrono::milliseconds>(deadline - std::chrono::steady_clock::now());
      if (left.count() <= 0) throw TransportError("bridge did not answer within the timeout");
      pollfd p{fd, POLLIN, 0};
      const int rc = ::poll(&p, 1, static_cast<int>(left.count()));
      if (rc < 0) {
        if (errno == EINTR) continue;
        throw TransportError(std::string("poll failed: ") + std::strerror(errno));
      }
      if (rc == 0) throw TransportError("bridge did not answer within the timeout");
      char chunk[65536];
      const ssize_t n = ::read(fd, chunk, sizeof chunk);
      if (n < 0) {
        if (errno == EINTR || errno == EAGAIN) continue;
        throw TransportError(std::string("read failed: ") + std::strerror(errno));
      }
      if (n == 0) throw TransportError("bridge closed the connection");
      buf_.append(chunk, static_cast<std::size_t>(n));
    }
  }

 private:
  std::string buf_;
};

inline void write_all(int fd, const std::string& data, bool socket) {
  std::size_t off = 0;
  while (off < data.size()) {
    const ssize_t n = socket ? ::send(fd, data.data() + off, data.size() - off, MSG_NOSIGNAL)
                             : ::write(fd, data.data() + off, data.size() - off);
    if (n < 0) {
      if (errno == EINTR) continue;
      throw TransportError(std::string("write failed: ") + std::strerror(errno));
    }
    off += static_cast<std::size_t>(n);
  }
}

}  // namespace detail

/// Spawns `/bin/sh -c command` and talks over its stdin/stdout.
class StdioTransport final : public LineTransport {
 public:
  explicit StdioTransport(const std::string& command) {
    // A dead child must surface as a TransportError, not kill the process.
    ::signal(SIGPIPE, SIG_IGN);
    int to_child[2], from_child[2];
    if (::pipe(to_child) != 0) throw TransportError("pipe failed");
    if (::pipe(from_child) != 0) {
      ::close(to_child[0]);
      ::close(to_child[1]);
      throw TransportError("pipe failed");
    }
    pid_ = ::fork();
    if (pid_ < 0) throw TransportError("fork failed");
    if (pid_ == 0) {
      ::dup2(to_child[0], STDIN_FILENO);
      ::dup2(from_child[1], STDOUT_FILENO);
      ::close(to_child[0]);
      ::close(to_child[1]);
      ::close(from_child[0]);
      ::close(from_child[1]);
      ::execl("/bin/sh", "sh", "-c", command.c_str(), static_cast<char*>(nullptr));
      ::_exit(127);
    }
    ::close(to_child[0]);
    ::close(from_child[1]);
    in_ = to_child[1];
    out_ = from_child[0];
    ::fcntl(in_, F_SETFD, FD_CLOEXEC);
    ::fcntl(out_, F_SETFD, FD_CLOEXEC);
  }

  ~StdioTransport() override {
    if (in_ >= 0) ::close(in_);
    if (out_ >= 0) ::close(out_);
    if (pid_ > 0) {
      ::kill(pid_, SIGTERM);
      ::waitpid(pid_, nullptr, 0);
    }
  }

  StdioTransport(const StdioTransport&) = delete;
  StdioTransport& operator=(const StdioTransport&) = delete;

  void send_line(const std::string& line) override { detail::write_all(in_, line + "\n", false); }
  std::string recv_line(std::chrono::milliseconds timeout) override { return reader_.read_line(out_, timeout); }

 private:
  pid_t pid_ = -1;
  int in_ = -1;
  int out_ = -1;
  detail::FdLineReader reader_;
};

class TcpTransport final : public LineTransport {
 public:
  TcpTransport(const std::string& host, const std::string& port) {
    addrinfo hints{};
    hints.ai_family = AF_UNSPEC;
    hints.ai_socktype = SOCK_STREAM;
    addrinfo* res = nullptr;
    if (const int rc = ::getaddrinfo(host.c_str(), port.c_str(), &hints, &res); rc != 0) {
      throw TransportError("cannot resolve " + host + ":" + port + ": " + ::gai_strerror(rc));
    }
    for (addrinfo* a = res; a; a = a->ai_next) {
      fd_ = ::socket(a->ai_family, a->ai_socktype, a->ai_protocol);
      if (fd_ < 0) continue;
      if (::connect(fd_, a->ai_addr, a->ai_addrlen) == 0) break;
      ::close(fd_);
      fd_ = -1;
    }
    ::freeaddrinfo(res);
    if (fd_ < 0) throw TransportError("cannot connect to " + host + ":" + port);
  }

  ~TcpTransport() override {
    if (fd_ >= 0) ::close(fd_);
  }

  TcpTransport(const TcpTransport&) = delete;
  TcpTransport& operator=(const TcpTransport&) = delete;

  void send_line(const std::string& line) override { detail::write_all(fd_, line + "\n", true); }
  std::string recv_line(std::chrono::milliseconds timeout) override { return reader_.read_line(fd_, timeout); }

 private:
  int fd_ = -1;
  detail::FdLineReader reader_;
};

/// "stdio:<shell command>" or "tcp:<host>:<port>".
inline std::unique_ptr<LineTransport> open_transport(const std::string& endpoint) {
  if (endpoint.rfind("stdio:", 0) == 0) return std::make_unique<StdioTransport>(endpoint.substr(6));
  if (endpoint.rfind("tcp:", 0) == 0) {
    const std::string rest = endpoint.substr(4);
    const auto colon = rest.rfind(':');
    if (colon == std::string::npos) throw InvalidArgument("tcp endpoint needs host:port");
    return std::make_unique<TcpTransport>(rest.substr(0, colon), rest.substr(colon + 1));
  }
  throw InvalidArgument("endpoint must start with stdio: or tcp:");
}

struct BridgeMeta {
  std::size_t vocab_size = 0;
  std::size_t dim = 0;
  std::size_t max_len = 0;
};

/// Encoder backed by a remote process speaking the line protocol. Calls are
/// serialized; encode_batch sends one batched request.
class BridgeEncoder final : public Encoder {
 public:
  BridgeEncoder(std::unique_ptr<LineTransport> transport, std::optional<std::size_t> expected_max_len = {},
                std::chrono::milliseconds timeout = std::chrono::seconds(30))
      : transport_(std::move(transport)), timeout_(timeout) {
    const auto resp = call({{"op", "meta"}});
    meta_.vocab_size = positive_field(resp, "vocab_size");
    meta_.dim = positive_field(resp, "dim");
    meta_.max_len = positive_field(resp, "max_len");
    if (expected_max_len && *expected_max_len != meta_.max_len) {
      throw ProtocolError("bridge announces max_len " + std::to_string(meta_.max_len) + " but " +
                          std::to_string(*expected_max_len) + " is configured");
    }
  }

  explicit BridgeEncoder(const std::string& endpoint, std::optional<std::size_t> expected_max_len = {},
                         std::chrono::milliseconds timeout = std::chrono::seconds(30))
      : BridgeEncoder(open_transport(endpoint), expected_max_len, timeout) {}

  FlatEmbedding encode(const TokenSequence& tokens) const override {
    check_tokens(tokens);
    const auto resp = call({{"op", "encode"}, {"token_ids", ids_json(tokens)}});
    return to_embedding(field(resp, "values"), tokens.max_len());
  }

  std::vector<FlatEmbedding> encode_batch(std::span<const TokenSequence> batch) const override {
    nlohmann::json ids = nlohmann::json::array();
    for (const auto& t : batch) {
      check_tokens(t);
      ids.push_back(ids_json(t));
    }
    const auto resp = call({{"op", "encode"}, {"token_ids", std::move(ids)}});
    const auto& values = field(resp, "values");
    if (!values.is_array() || values.size() != batch.size()) throw ProtocolError("batched encode returned wrong count");
    std::vector<FlatEmbedding> out;
    out.reserve(batch.size());
    for (std::size_t i = 0; i < batch.size(); ++i) out.push_back(to_embedding(values[i], batch[i].max_len()));
    return out;
  }

  GradientSheet onehot_gradient(const TokenSequence& tokens, const FlatEmbedding& cotangent,
                                std::span<const std::size_t> positions) const override {
    check_tokens(tokens);
    if (cotangent.size() != tokens.max_len() * meta_.dim) throw DimensionMismatch("cotangent length mismatch");
    nlohmann::json req{{"op", "grad"},
                       {"token_ids", ids_json(tokens)},
                       {"cotangent", std::vector<double>(cotangent.values().begin(), cotangent.values().end())},
                       {"positions", std::vector<std::size_t>(positions.begin(), positions.end())}};
    const auto resp = call(req);
    const auto& rows = field(resp, "values");
    if (!rows.is_array() || rows.size() != positions.size()) throw ProtocolError("grad returned wrong row count");
    GradientSheet sheet(std::vector<std::size_t>(positions.begin(), positions.end()), meta_.vocab_size);
    for (std::size_t k = 0; k < positions.size(); ++k) {
      const auto vals = numbers(rows[k]);
      if (vals.size() != meta_.vocab_size) throw ProtocolError("grad row length != vocab_size");
      std::copy(vals.begin(), vals.end(), sheet.row(k).begin());
    }
    return sheet;
  }

  std::size_t dim() const override { return meta_.dim; }
  std::size_t vocab_size() const override { return meta_.vocab_size; }
  std::size_t max_len() const override { return meta_.max_len; }
  const BridgeMeta& meta() const noexcept { return meta_; }

 private:
  nlohmann::json call(const nlohmann::json& request) const {
    std::lock_guard lock(mu_);
    transport_->send_line(request.dump());
    const std::string line = transport_->recv_line(timeout_);
    nlohmann::json resp;
    try {
      resp = nlohmann::json::parse(line);
    } catch (const nlohmann::json::exception& e) {
      throw ProtocolError(std::string("unparseable bridge response: ") + e.what());
    }
    if (!resp.is_object() || !resp.contains("ok") || !resp["ok"].is_boolean()) {
      throw ProtocolError("bridge response lacks a boolean 'ok'");
    }
    if (!resp["ok"].get<bool>()) {
      const auto it = resp.find("error");
      throw RemoteError(it != resp.end() && it->is_string() ? it->get<std::string>() : "unspecified bridge error");
    }
    return resp;
  }

  static const nlohmann::json& field(const nlohmann::json& obj, const char* name) {
    const auto it = obj.find(name);
    if (it == obj.end()) throw ProtocolError(std::string("bridge response lacks '") + name + "'");
    return *it;
  }

  static std::size_t positive_field(const nlohmann::json& obj, const char* name) {
    const auto& v = field(obj, name);
    if (!v.is_number_unsigned() || v.get<std::size_t>() == 0) {
      throw ProtocolError(std::string("'") + name + "' must be a positive integer");
    }
    return v.get<std::size_t>();
  }

  static std::vector<double> numbers(const nlohmann::json& arr) {
    if (!arr.is_array()) throw ProtocolError("expected a numeric array");
    std::vector<double> out;
    out.reserve(arr.size());
    for (const auto& x : arr) {
      if (!x.is_number()) throw ProtocolError("non-numeric value in bridge array");
      out.push_back(x.get<double>());
    }
    return out;
  }

  FlatEmbedding to_embedding(const nlohmann::json& arr, std::size_t n) const {
    auto vals = numbers(arr);
    if (vals.size() != n * meta_.dim) {
      throw ProtocolError("encode returned " + std::to_string(vals.size()) + " values, expected " +
                          std::to_string(n * meta_.dim));
    }
    return FlatEmbedding(std::move(vals), meta_.dim);
  }

  static nlohmann::json ids_json(const TokenSequence& t) { return std::vector<TokenId>(t.ids().begin(), t.ids().end()); }

  void check_tokens(const TokenSequence& t) const {
    if (t.max_len() > meta_.max_len) throw DimensionMismatch("sequence longer than the bridge's max_len");
    for (TokenId id : t.ids()) {
      if (id >= meta_.vocab_size) throw InvalidArgument("token id beyond the bridge's vocab_size");
    }
  }

  std::unique_ptr<LineTransport> transport_;
  std::chrono::milliseconds timeout_;
  BridgeMeta meta_;
  mutable std::mutex mu_;
};

}  // namespace swapsuffix
