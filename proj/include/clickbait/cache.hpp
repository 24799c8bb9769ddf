#pragma once

#include <filesystem>
#include <mutex>
#include <optional>
#include <string>
#include <unordered_map>

#include <json.hpp>

namespace clickbait {

/// Append-only JSONL key/value store: one {"key": ..., "value": ...} object per
/// line. Appends hold an exclusive advisory file lock and write whole lines,
/// so concurrent readers never observe a partial record; a torn trailing line
/// left by a crashed writer is ignored on load.
class DiskCache {
 public:
  explicit DiskCache(std::filesystem::path file);

  std::optional<nlohmann::json> get(const std::string& key) const;
  void put(const std::string& key, const nlohmann::json& value);

  std::size_t size() const;
  const std::filesystem::path& file() const noexcept { return file_; }

 private:
  std::filesystem::path file_;
  mutable std::mutex mutex_;
  std::unordered_map<std::string, nlohmann::json> entries_;
};

/// Makes an arbitrary model name safe to use as a file-name component.
std::string sanitize_file_component(std::string_view name);

}  // namespace clickbait
