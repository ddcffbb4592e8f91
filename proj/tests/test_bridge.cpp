#include <gtest/gtest.h>

#include <arpa/inet.h>
#include <netinet/in.h>
#include <sys/socket.h>
#include <unistd.h>

#include <thread>

#include "mock_bridge.hpp"
#include "swapsuffix/bridge.hpp"
#include "swapsuffix/objective.hpp"
#include "swapsuffix/search.hpp"

namespace ss = swapsuffix;
using ss::TokenId;
using namespace std::chrono_literals;

namespace {

std::string endpoint(const std::string& args = "") { return std::string("stdio:") + MOCK_BRIDGE_SERVER + " " + args; }

ss::TokenSequence seq(std::vector<TokenId> content) { return ss::TokenSequence(content, 12, 0); }

/// Serves one TCP connection on 127.0.0.1 with the mock handler.
class TcpMock {
 public:
  explicit TcpMock(mock::Options o) : handler_(std::move(o)) {
    listen_fd_ = ::socket(AF_INET, SOCK_STREAM, 0);
    sockaddr_in addr{};
    addr.sin_family = AF_INET;
    addr.sin_addr.s_addr = htonl(INADDR_LOOPBACK);
    addr.sin_port = 0;
    if (::bind(listen_fd_, reinterpret_cast<sockaddr*>(&addr), sizeof addr) != 0 || ::listen(listen_fd_, 1) != 0) {
      throw std::runtime_error("cannot listen");
    }
    socklen_t len = sizeof addr;
    ::getsockname(listen_fd_, reinterpret_cast<sockaddr*>(&addr), &len);
    port_ = ntohs(addr.sin_port);
    thread_ = std::thread([this] { serve(); });
  }
  ~TcpMock() {
    ::shutdown(listen_fd_, SHUT_RDWR);
    ::close(listen_fd_);
    thread_.join();
  }
  std::string endpoint() const { return "tcp:127.0.0.1:" + std::to_string(port_); }

 private:
  void serve() {
    const int fd = ::accept(listen_fd_, nullptr, nullptr);
    if (fd < 0) return;
    ss::detail::FdLineReader reader;
    try {
      for (;;) {
        const auto resp = handler_.handle(reader.read_line(fd, 10s));
        if (resp) ss::detail::write_all(fd, *resp + "\n", true);
      }
    } catch (const ss::TransportError&) {
    }
    ::close(fd);
  }

  mock::Handler handler_;
  int listen_fd_ = -1;
  int port_ = 0;
  std::thread thread_;
};

}  // namespace

TEST(Bridge, MetaHandshake) {
  const ss::BridgeEncoder enc(endpoint(), 12);
  EXPECT_EQ(enc.vocab_size(), 40u);
  EXPECT_EQ(enc.dim(), 8u);
  EXPECT_EQ(enc.max_len(), 12u);
  EXPECT_THROW(ss::BridgeEncoder(endpoint(), 77), ss::ProtocolError);
  EXPECT_THROW(ss::BridgeEncoder(endpoint("--announce-max-len 16"), 12), ss::ProtocolError);
}

TEST(Bridge, EncodeMatchesLocalEncoder) {
  const ss::BridgeEncoder remote(endpoint());
  const auto local = mock::make_encoder({});
  const auto s = seq({1, 5, 6, 7, 2});
  const auto h = remote.encode(s);
  EXPECT_EQ(h.dim(), 8u);
  EXPECT_EQ(h.size(), 12u * 8u);
  EXPECT_EQ(h, local.encode(s)) << "JSON doubles round-trip exactly";
  const std::vector<ss::TokenSequence> batch{s, seq({1, 9, 2}), seq({1, 3, 3, 3, 2})};
  const auto hs = remote.encode_batch(batch);
  ASSERT_EQ(hs.size(), 3u);
  for (std::size_t i = 0; i < 3; ++i) EXPECT_EQ(hs[i], local.encode(batch[i]));
}

TEST(Bridge, GradientShapeAndValues) {
  const ss::BridgeEncoder remote(endpoint());
  const auto local = mock::make_encoder({});
  const auto s = seq({1, 5, 6, 7, 2});
  std::vector<double> g(12 * 8);
  for (std::size_t i = 0; i < g.size(); ++i) g[i] = std::sin(static_cast<double>(i));
  const std::vector<std::size_t> positions{2, 3};
  const auto sheet = remote.onehot_gradient(s, ss::FlatEmbedding(g, 8), positions);
  const auto want = local.onehot_gradient(s, ss::FlatEmbedding(g, 8), positions);
  ASSERT_EQ(sheet.rows(), 2u);
  for (std::size_t k = 0; k < 2; ++k) {
    ASSERT_EQ(sheet.row(k).size(), 40u);
    for (std::size_t v = 0; v < 40; ++v) EXPECT_EQ(sheet.row(k)[v], want.row(k)[v]);
  }
  const auto zero = remote.onehot_gradient(s, ss::FlatEmbedding(std::vector<double>(96, 0.0), 8), positions);
  for (std::size_t k = 0; k < 2; ++k) {
    for (double v : zero.row(k)) EXPECT_EQ(v, 0.0);
  }
  EXPECT_THROW(remote.onehot_gradient(s, ss::FlatEmbedding(std::vector<double>(8, 0.0), 8), positions),
               ss::DimensionMismatch);
}

TEST(Bridge, LocalInputChecks) {
  const ss::BridgeEncoder remote(endpoint());
  EXPECT_THROW(remote.encode(seq({1, 99, 2})), ss::InvalidArgument);
  EXPECT_THROW(remote.encode(ss::TokenSequence(std::vector<TokenId>{1, 2}, 16, 0)), ss::DimensionMismatch);
}

TEST(Bridge, MalformedRequestGetsStructuredError) {
  ss::StdioTransport t(std::string(MOCK_BRIDGE_SERVER));
  t.send_line("{not json");
  auto resp = nlohmann::json::parse(t.recv_line(5s));
  EXPECT_EQ(resp["ok"], false);
  EXPECT_TRUE(resp["error"].is_string());
  t.send_line(R"({"op":"encode","token_ids":"oops"})");
  resp = nlohmann::json::parse(t.recv_line(5s));
  EXPECT_EQ(resp["ok"], false);
  t.send_line(R"({"op":"teleport"})");
  resp = nlohmann::json::parse(t.recv_line(5s));
  EXPECT_EQ(resp["ok"], false);
}

TEST(Bridge, FailureModes) {
  const auto s = seq({1, 5, 2});
  {
    const ss::BridgeEncoder enc(endpoint("--mode hang"), {}, 300ms);
    const auto t0 = std::chrono::steady_clock::now();
    EXPECT_THROW(enc.encode(s), ss::TransportError);
    EXPECT_LT(std::chrono::steady_clock::now() - t0, 5s);
  }
  {
    const ss::BridgeEncoder enc(endpoint("--mode garbage"));
    EXPECT_THROW(enc.encode(s), ss::ProtocolError);
  }
  {
    const ss::BridgeEncoder enc(endpoint("--mode fail"));
    try {
      enc.encode(s);
      ADD_FAILURE() << "expected RemoteError";
    } catch (const ss::RemoteError& e) {
      EXPECT_NE(std::string(e.what()).find("model exploded"), std::string::npos);
    }
  }
  {
    const ss::BridgeEncoder enc(endpoint("--mode short"));
    EXPECT_THROW(enc.encode(s), ss::ProtocolError);
  }
  EXPECT_THROW(ss::BridgeEncoder(endpoint("--no-such-flag 2>/dev/null"), {}, 2s), ss::TransportError)
      << "server exits at once";
  EXPECT_THROW(ss::BridgeEncoder("carrier-pigeon:x"), ss::InvalidArgument);
  EXPECT_THROW(ss::BridgeEncoder("tcp:nohost"), ss::InvalidArgument);
}

TEST(Bridge, TcpTransport) {
  TcpMock server{mock::Options{}};
  const ss::BridgeEncoder remote(server.endpoint(), 12);
  const auto s = seq({1, 5, 6, 2});
  EXPECT_EQ(remote.encode(s), mock::make_encoder({}).encode(s));
}

TEST(Bridge, DrivesAnAttack) {
  const ss::BridgeEncoder remote(endpoint());
  const auto local = mock::make_encoder({});
  const auto src = seq({1, 5, 6, 7, 2}), tgt = seq({1, 5, 8, 7, 2});
  ss::AttackSpec spec;
  spec.steps = 3;
  spec.batch = 8;
  spec.suffix_len = 3;
  const auto a = ss::run_attack(src, ss::AttackTargets::make(remote, src, tgt), spec, remote);
  const auto b = ss::run_attack(src, ss::AttackTargets::make(local, src, tgt), spec, local);
  EXPECT_EQ(a.best_suffix, b.best_suffix);
  EXPECT_EQ(a.score_trajectory, b.score_trajectory);
}
