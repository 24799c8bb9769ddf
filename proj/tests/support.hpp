#pragma once

#include <unistd.h>

#include <httplib.h>

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <json.hpp>

namespace testsupport {

inline std::filesystem::path source_dir() { return CLICKBAIT_SOURCE_DIR; }

inline std::filesystem::path fixture_corpus() { return source_dir() / "data" / "fixtures" / "synthetic_headlines.csv"; }

class TempDir {
 public:
  TempDir() {
    static std::atomic<int> counter{0};
    path_ = std::filesystem::temp_directory_path() /
            ("clickbait-test-" + std::to_string(::getpid()) + "-" + std::to_string(counter++));
    std::filesystem::remove_all(path_);
    std::filesystem::create_directories(path_);
  }
  ~TempDir() {
    std::error_code ec;
    std::filesystem::remove_all(path_, ec);
  }
  TempDir(const TempDir&) = delete;
  TempDir& operator=(const TempDir&) = delete;

  const std::filesystem::path& path() const { return path_; }
  std::filesystem::path operator/(const std::string& name) const { return path_ / name; }

 private:
  std::filesystem::path path_;
};

inline std::string read_file(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline void write_file(const std::filesystem::path& p, const std::string& content) {
  std::ofstream out(p, std::ios::binary | std::ios::trunc);
  out << content;
}

/// Local HTTP server on an ephemeral port, running on a background thread.
class StubServer {
 public:
  httplib::Server& server() { return server_; }

  void start() {
    port_ = server_.bind_to_any_port("127.0.0.1");
    thread_ = std::thread([this] { server_.listen_after_bind(); });
    server_.wait_until_ready();
  }

  ~StubServer() {
    server_.stop();
    if (thread_.joinable()) thread_.join();
  }

  int port() const { return port_; }
  std::string url(const std::string& path = "/v1") const {
    return "http://127.0.0.1:" + std::to_string(port_) + path;
  }

 private:
  httplib::Server server_;
  std::thread thread_;
  int port_ = 0;
};

inline std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

/// Deterministic hashed bag-of-words embedding of lowercased whitespace tokens.
inline std::vector<double> hashed_embedding(const std::string& text, std::size_t dim) {
  std::vector<double> v(dim, 0.0);
  std::string token;
  auto flush = [&] {
    if (token.empty()) return;
    const auto h = fnv1a(token);
    v[h % dim] += (h >> 63) ? 1.0 : -1.0;
    v[(h >> 20) % dim] += 0.5;
    v[(h >> 7) % std::min<std::size_t>(dim, 30)] += (h & 1) ? 1.0 : -0.75;
    token.clear();
  };
  for (char c : text) {
    if (std::isalnum(static_cast<unsigned char>(c)) || c == '\'') {
      token.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
    } else {
      flush();
    }
  }
  flush();
  v[0] += 0.25;
  return v;
}

/// Installs an OpenAI-shaped /v1/embeddings handler returning hashed embeddings.
inline void install_embedding_handler(StubServer& stub, std::size_t dim, std::atomic<int>* calls = nullptr) {
  stub.server().Post("/v1/embeddings", [dim, calls](const httplib::Request& req, httplib::Response& res) {
    if (calls) ++*calls;
    if (req.get_header_value("Authorization") != "Bearer test-key") {
      res.status = 401;
      res.set_content(R"({"error":"bad key"})", "application/json");
      return;
    }
    const auto body = nlohmann::json::parse(req.body);
    nlohmann::json data = nlohmann::json::array();
    std::size_t i = 0;
    for (const auto& text : body.at("input")) {
      data.push_back({{"object", "embedding"}, {"index", i++}, {"embedding", hashed_embedding(text.get<std::string>(), dim)}});
    }
    res.set_content(nlohmann::json{{"object", "list"}, {"data", data}}.dump(), "application/json");
  });
}

}  // namespace testsupport
