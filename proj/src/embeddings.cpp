#include "clickbait/embeddings.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <future>
#include <unordered_map>

#include "clickbait/error.hpp"
#include "clickbait/hashing.hpp"

namespace clickbait::representations {

using nlohmann::json;

void check_embedding_dim(std::size_t dim) {
  for (auto d : kEmbeddingDims) {
    if (d == dim) return;
  }
  throw DomainError("embedding dimension must be one of 3072, 1000, 100, 30; got " + std::to_string(dim));
}

RemoteEmbeddingConfig RemoteEmbeddingConfig::from_environment() {
  RemoteEmbeddingConfig c;
  if (const char* v = std::getenv("EMBEDDING_API_BASE_URL")) c.base_url = v;
  if (const char* v = std::getenv("EMBEDDING_API_KEY")) c.api_key = v;
  return c;
}

RemoteEmbeddingClient::RemoteEmbeddingClient(RemoteEmbeddingConfig config) : config_(std::move(config)) {
  if (config_.base_url.empty()) throw ConfigurationError("EMBEDDING_API_BASE_URL is not set");
  if (config_.api_key.empty()) throw ConfigurationError("EMBEDDING_API_KEY is not set");
  if (config_.max_batch == 0) throw ConfigurationError("embedding batch size must be positive");
  base_ = net::parse_base_url(config_.base_url);
}

std::vector<std::vector<double>> parse_embedding_response(const json& response, std::size_t expected) {
  if (!response.is_object() || !response.contains("data") || !response["data"].is_array())
    throw ProtocolError("embedding response lacks a data array");
  const auto& data = response["data"];
  if (data.size() != expected)
    throw ProtocolError("embedding response has " + std::to_string(data.size()) + " entries, expected " +
                        std::to_string(expected));
  std::vector<std::vector<double>> out(expected);
  std::vector<bool> filled(expected, false);
  for (std::size_t i = 0; i < data.size(); ++i) {
    const auto& item = data[i];
    if (!item.is_object() || !item.contains("embedding") || !item["embedding"].is_array())
      throw ProtocolError("embedding entry " + std::to_string(i) + " is malformed");
    std::size_t slot = i;
    if (item.contains("index")) {
      if (!item["index"].is_number_unsigned() && !item["index"].is_number_integer())
        throw ProtocolError("embedding entry index is not an integer");
      const auto idx = item["index"].get<long long>();
      if (idx < 0 || static_cast<std::size_t>(idx) >= expected) throw ProtocolError("embedding index out of range");
      slot = static_cast<std::size_t>(idx);
    }
    if (filled[slot]) throw ProtocolError("duplicate embedding index " + std::to_string(slot));
    filled[slot] = true;
    auto& vec = out[slot];
    vec.reserve(item["embedding"].size());
    for (const auto& x : item["embedding"]) {
      if (!x.is_number()) throw ProtocolError("embedding component is not a number");
      const double v = x.get<double>();
      if (!std::isfinite(v)) throw ProtocolError("embedding component is not finite");
      vec.push_back(v);
    }
    if (vec.empty()) throw ProtocolError("empty embedding");
  }
  return out;
}

std::vector<std::vector<double>> RemoteEmbeddingClient::request_batch(const std::vector<std::string>& batch) {
  ++requests_;
  const json body{{"model", config_.model}, {"input", batch}};
  return parse_embedding_response(net::post_json(base_, "/embeddings", body, config_.api_key, config_.http),
                                  batch.size());
}

DiskCache* RemoteEmbeddingClient::cache_for(std::size_t dim) {
  if (config_.cache_dir.empty()) return nullptr;
  std::lock_guard lock(cache_mutex_);
  auto& slot = caches_[dim];
  if (!slot) {
    const auto file = config_.cache_dir / (sanitize_file_component(config_.model) + "." + std::to_string(dim) + ".jsonl");
    slot = std::make_unique<DiskCache>(file);
  }
  return slot.get();
}

std::vector<DenseVector> RemoteEmbeddingClient::fetch(const std::vector<std::string>& texts, std::size_t target_dim) {
  check_embedding_dim(target_dim);
  DiskCache* cache = cache_for(target_dim);

  std::vector<DenseVector> out(texts.size());
  std::vector<bool> done(texts.size(), false);
  std::vector<std::string> pending;
  std::unordered_map<std::string, std::vector<std::size_t>> positions;
  std::vector<std::string> keys(texts.size());

  for (std::size_t i = 0; i < texts.size(); ++i) {
    keys[i] = sha256_hex(texts[i]);
    if (cache) {
      if (auto hit = cache->get(keys[i])) {
        DenseVector v;
        v.provenance = Provenance::remote_embedding;
        v.values = hit->get<std::vector<double>>();
        v.zero = l2_norm(v.values) == 0.0;
        v.normalized = !v.zero;
        out[i] = std::move(v);
        done[i] = true;
        continue;
      }
    }
    auto [it, inserted] = positions.try_emplace(texts[i]);
    if (inserted) pending.push_back(texts[i]);
    it->second.push_back(i);
  }

  std::vector<std::vector<std::string>> batches;
  for (std::size_t i = 0; i < pending.size(); i += config_.max_batch) {
    const auto end = std::min(pending.size(), i + config_.max_batch);
    batches.emplace_back(pending.begin() + static_cast<std::ptrdiff_t>(i),
                         pending.begin() + static_cast<std::ptrdiff_t>(end));
  }

  const std::size_t wave = std::max<std::size_t>(1, config_.concurrent_batches);
  for (std::size_t b = 0; b < batches.size(); b += wave) {
    std::vector<std::future<std::vector<std::vector<double>>>> futures;
    const auto end = std::min(batches.size(), b + wave);
    for (std::size_t k = b; k < end; ++k)
      futures.push_back(std::async(std::launch::async, [this, &batches, k] { return request_batch(batches[k]); }));
    for (std::size_t k = b; k < end; ++k) {
      auto raw = futures[k - b].get();
      for (std::size_t j = 0; j < batches[k].size(); ++j) {
        const auto& text = batches[k][j];
        if (raw[j].size() < target_dim)
          throw ProtocolError("embedding has " + std::to_string(raw[j].size()) + " components, fewer than " +
                              std::to_string(target_dim));
        DenseVector v = truncate_normalize(raw[j], target_dim, Provenance::remote_embedding);
        const auto& where = positions.at(text);
        if (cache) cache->put(keys[where.front()], v.values);
        for (auto i : where) {
          out[i] = v;
          done[i] = true;
        }
      }
    }
  }
  return out;
}

}  // namespace clickbait::representations
