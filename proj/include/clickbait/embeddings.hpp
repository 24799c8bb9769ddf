#pragma once

#include <atomic>
#include <filesystem>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "clickbait/cache.hpp"
#include "clickbait/http.hpp"
#include "clickbait/vectors.hpp"

namespace clickbait::representations {

inline constexpr std::size_t kEmbeddingDims[] = {3072, 1000, 100, 30};

/// Throws DomainError unless dim is one of kEmbeddingDims.
void check_embedding_dim(std::size_t dim);

struct RemoteEmbeddingConfig {
  std::string base_url;
  std::string api_key;
  std::string model = "text-embedding-3-large";
  std::size_t max_batch = 64;
  std::size_t concurrent_batches = 2;
  net::HttpOptions http;
  /// Empty disables the disk cache.
  std::filesystem::path cache_dir;

  /// Reads EMBEDDING_API_BASE_URL and EMBEDDING_API_KEY; other fields keep defaults.
  static RemoteEmbeddingConfig from_environment();
};

class RemoteEmbeddingClient {
 public:
  /// Throws ConfigurationError if the base URL or key is missing.
  explicit RemoteEmbeddingClient(RemoteEmbeddingConfig config);

  /// Returns one vector per text, truncated to target_dim and L2-normalized.
  /// Texts already cached for (model, target_dim) do not touch the network.
  std::vector<DenseVector> fetch(const std::vector<std::string>& texts, std::size_t target_dim);

  /// Number of HTTP requests issued so far.
  std::size_t network_requests() const noexcept { return requests_.load(); }
  const RemoteEmbeddingConfig& config() const noexcept { return config_; }

 private:
  std::vector<std::vector<double>> request_batch(const std::vector<std::string>& batch);
  DiskCache* cache_for(std::size_t dim);

  RemoteEmbeddingConfig config_;
  net::BaseUrl base_;
  std::atomic<std::size_t> requests_{0};
  std::mutex cache_mutex_;
  std::map<std::size_t, std::unique_ptr<DiskCache>> caches_;
};

/// Parses an embeddings response body. Entries may carry an "index" field, in
/// which case they are reordered by it. Throws ProtocolError on anything
/// malformed or on a count mismatch.
std::vector<std::vector<double>> parse_embedding_response(const nlohmann::json& response, std::size_t expected);

}  // namespace clickbait::representations
