#pragma once

#include <chrono>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

namespace clickbait::net {

struct BaseUrl {
  /// "http" or "https".
  std::string scheme;
  std::string host;
  int port = 0;
  /// Path prefix without trailing slash, e.g. "/v1".
  std::string path;

  std::string origin() const;
};

/// Throws ConfigurationError on anything but http(s)://host[:port][/path].
BaseUrl parse_base_url(std::string_view url);

struct RetryPolicy {
  int max_attempts = 4;
  std::chrono::milliseconds initial_backoff{500};
  double multiplier = 2.0;
  std::chrono::milliseconds max_backoff{8000};
};

struct HttpOptions {
  std::chrono::seconds timeout{60};
  RetryPolicy retry;
};

/// POSTs a JSON body with a bearer token and returns the decoded response.
/// Connection failures, 429 and 5xx are retried with exponential backoff;
/// other statuses fail immediately. Exhausted or non-retryable failures throw
/// TransportError; a 2xx body that is not JSON throws ProtocolError.
nlohmann::json post_json(const BaseUrl& base, std::string_view endpoint, const nlohmann::json& body,
                         std::string_view bearer_token, const HttpOptions& options);

}  // namespace clickbait::net
