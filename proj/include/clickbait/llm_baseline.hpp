#pragma once

#include <atomic>
#include <filesystem>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "clickbait/cache.hpp"
#include "clickbait/corpus.hpp"
#include "clickbait/http.hpp"

namespace clickbait::llm {

enum class PromptMode { zero_shot, few_shot };

std::string_view to_string(PromptMode m);

/// Exact prompt bodies. The few-shot body carries the <CLICKBAIT_EXAMPLES> and
/// <NON_CLICKBAIT_EXAMPLES> placeholders.
std::string_view zero_shot_body();
std::string_view few_shot_body();

struct PromptTemplate {
  PromptMode mode = PromptMode::zero_shot;
  std::vector<std::string> clickbait_examples;
  std::vector<std::string> non_clickbait_examples;

  static PromptTemplate zero_shot();
  static PromptTemplate few_shot(std::vector<std::string> clickbait, std::vector<std::string> non_clickbait);

  /// Body with placeholders substituted by newline-joined example titles.
  /// Throws TemplateError in few-shot mode when either list is empty.
  std::string system_text() const;
};

struct RenderedPrompt {
  std::string system;
  std::string user;
};

/// System message is the template, user message is the bare title.
RenderedPrompt render_prompt(const PromptTemplate& t, std::string_view title);

/// Picks the first k titles of each class in record order.
PromptTemplate select_few_shot(const std::vector<corpus::CorpusRecord>& train, std::size_t k = 5);

/// Accepts exactly "0" or "1" after trimming surrounding whitespace;
/// anything else throws ProtocolError.
int parse_label_reply(std::string_view reply);

struct LlmConfig {
  std::string base_url;
  std::string api_key;
  std::string model;
  std::size_t concurrency = 4;
  net::HttpOptions http;
  /// Empty keeps the reply cache in memory only.
  std::filesystem::path cache_dir;

  /// Reads LLM_API_BASE_URL, LLM_API_KEY and LLM_MODEL_NAME.
  static LlmConfig from_environment();
};

class LlmClassifier {
 public:
  /// Throws ConfigurationError if the base URL, key or model name is missing.
  explicit LlmClassifier(LlmConfig config);

  int classify(const PromptTemplate& t, std::string_view title);
  std::vector<int> classify_batch(const PromptTemplate& t, const std::vector<std::string>& titles);

  std::size_t network_requests() const noexcept { return requests_.load(); }

 private:
  LlmConfig config_;
  net::BaseUrl base_;
  std::atomic<std::size_t> requests_{0};
  std::mutex mutex_;
  std::unordered_map<std::string, int> memory_;
  std::unique_ptr<DiskCache> disk_;
};

}  // namespace clickbait::llm
