#include "clickbait/cache.hpp"

#include <fcntl.h>
#include <sys/file.h>
#include <unistd.h>

#include <fstream>

#include "clickbait/error.hpp"

namespace clickbait {

DiskCache::DiskCache(std::filesystem::path file) : file_(std::move(file)) {
  if (file_.has_parent_path()) std::filesystem::create_directories(file_.parent_path());
  std::ifstream in(file_, std::ios::binary);
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    try {
      auto j = nlohmann::json::parse(line);
      entries_.insert_or_assign(j.at("key").get<std::string>(), j.at("value"));
    } catch (const nlohmann::json::exception&) {
      continue;
    }
  }
}

std::optional<nlohmann::json> DiskCache::get(const std::string& key) const {
  std::lock_guard lock(mutex_);
  auto it = entries_.find(key);
  if (it == entries_.end()) return std::nullopt;
  return std::optional<nlohmann::json>(std::in_place, it->second);
}

void DiskCache::put(const std::string& key, const nlohmann::json& value) {
  std::lock_guard lock(mutex_);
  const std::string line = nlohmann::json{{"key", key}, {"value", value}}.dump() + "\n";
  const int fd = ::open(file_.c_str(), O_WRONLY | O_CREAT | O_APPEND | O_CLOEXEC, 0644);
  if (fd < 0) throw Error("cannot open cache file " + file_.string());
  ::flock(fd, LOCK_EX);
  std::size_t written = 0;
  while (written < line.size()) {
    const ssize_t n = ::write(fd, line.data() + written, line.size() - written);
    if (n <= 0) break;
    written += static_cast<std::size_t>(n);
  }
  ::flock(fd, LOCK_UN);
  ::close(fd);
  if (written != line.size()) throw Error("short write to cache file " + file_.string());
  entries_.insert_or_assign(key, value);
}

std::size_t DiskCache::size() const {
  std::lock_guard lock(mutex_);
  return entries_.size();
}

std::string sanitize_file_component(std::string_view name) {
  std::string out;
  for (char c : name) {
    const bool ok = (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') || c == '-' || c == '.' ||
                    c == '_';
    out.push_back(ok ? c : '_');
  }
  return out.empty() ? "_" : out;
}

}  // namespace clickbait
