#include "clickbait/http.hpp"

#include <httplib.h>

#include <algorithm>
#include <thread>

#include "clickbait/error.hpp"

namespace clickbait::net {

std::string BaseUrl::origin() const { return scheme + "://" + host + ":" + std::to_string(port); }

BaseUrl parse_base_url(std::string_view url) {
  BaseUrl b;
  const auto sep = url.find("://");
  if (sep == std::string_view::npos) throw ConfigurationError("base URL lacks a scheme: " + std::string(url));
  b.scheme = std::string(url.substr(0, sep));
  if (b.scheme != "http" && b.scheme != "https") throw ConfigurationError("unsupported URL scheme: " + b.scheme);
  std::string_view rest = url.substr(sep + 3);
  const auto slash = rest.find('/');
  std::string_view authority = rest.substr(0, slash);
  if (slash != std::string_view::npos) b.path = std::string(rest.substr(slash));
  while (!b.path.empty() && b.path.back() == '/') b.path.pop_back();
  const auto colon = authority.rfind(':');
  if (colon != std::string_view::npos) {
    b.host = std::string(authority.substr(0, colon));
    try {
      b.port = std::stoi(std::string(authority.substr(colon + 1)));
    } catch (const std::exception&) {
      throw ConfigurationError("bad port in base URL: " + std::string(url));
    }
  } else {
    b.host = std::string(authority);
    b.port = b.scheme == "https" ? 443 : 80;
  }
  if (b.host.empty()) throw ConfigurationError("base URL has no host: " + std::string(url));
  return b;
}

nlohmann::json post_json(const BaseUrl& base, std::string_view endpoint, const nlohmann::json& body,
                         std::string_view bearer_token, const HttpOptions& options) {
  httplib::Client client(base.origin());
  client.set_connection_timeout(options.timeout);
  client.set_read_timeout(options.timeout);
  client.set_write_timeout(options.timeout);
  const httplib::Headers headers = {{"Authorization", "Bearer " + std::string(bearer_token)}};
  const std::string path = base.path + std::string(endpoint);
  const std::string payload = body.dump();

  auto backoff = options.retry.initial_backoff;
  const int attempts = std::max(1, options.retry.max_attempts);
  for (int attempt = 1;; ++attempt) {
    auto res = client.Post(path, headers, payload, "application/json");
    std::string failure;
    int status = 0;
    bool retryable = true;
    if (!res) {
      failure = "request to " + base.origin() + path + " failed: " + httplib::to_string(res.error());
    } else {
      status = res->status;
      if (status >= 200 && status < 300) {
        try {
          return nlohmann::json::parse(res->body);
        } catch (const nlohmann::json::parse_error& e) {
          throw ProtocolError(std::string("response is not JSON: ") + e.what());
        }
      }
      retryable = status == 429 || status >= 500;
      failure = "HTTP " + std::to_string(status) + " from " + base.origin() + path;
      if (status == 401 || status == 403) failure += " (check the API key)";
    }
    if (!retryable || attempt >= attempts) throw TransportError(failure, status, retryable);
    std::this_thread::sleep_for(backoff);
    backoff = std::min(options.retry.max_backoff,
                       std::chrono::milliseconds(static_cast<long long>(static_cast<double>(backoff.count()) *
                                                                        options.retry.multiplier)));
  }
}

}  // namespace clickbait::net
