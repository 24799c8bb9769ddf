#include "clickbait/llm_baseline.hpp"

#include <cstdlib>
#include <future>

#include "clickbait/error.hpp"
#include "clickbait/hashing.hpp"

namespace clickbait::llm {

using nlohmann::json;

namespace {

constexpr std::string_view kZeroShot = R"(You are a strict classifier.

Task:
Determine whether a news article title is clickbait.

Definition:
Clickbait is a title that is intentionally sensational, misleading, or emotionally manipulative
in order to attract clicks, often by exaggerating, omitting key facts, or creating a curiosity gap.

Labels:
0 - non-clickbait
1 - clickbait

Rules:
- Base your decision only on the title.
- Do not provide explanations or justifications.
- Output only a single digit: 0 or 1.)";

constexpr std::string_view kFewShotTail = R"(

Clickbait examples:
<CLICKBAIT_EXAMPLES>

Non-clickbait examples:
<NON_CLICKBAIT_EXAMPLES>)";

constexpr std::string_view kClickbaitSlot = "<CLICKBAIT_EXAMPLES>";
constexpr std::string_view kNonClickbaitSlot = "<NON_CLICKBAIT_EXAMPLES>";

std::string join_lines(const std::vector<std::string>& items) {
  std::string out;
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i) out.push_back('\n');
    out += items[i];
  }
  return out;
}

void replace_once(std::string& s, std::string_view slot, const std::string& value) {
  const auto pos = s.find(slot);
  if (pos == std::string::npos) throw TemplateError("template lacks placeholder " + std::string(slot));
  s.replace(pos, slot.size(), value);
}

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' || c == '\v'; }

}  // namespace

std::string_view to_string(PromptMode m) { return m == PromptMode::zero_shot ? "zero_shot" : "few_shot"; }

std::string_view zero_shot_body() { return kZeroShot; }

std::string_view few_shot_body() {
  static const std::string body = std::string(kZeroShot) + std::string(kFewShotTail);
  return body;
}

PromptTemplate PromptTemplate::zero_shot() { return {}; }

PromptTemplate PromptTemplate::few_shot(std::vector<std::string> clickbait, std::vector<std::string> non_clickbait) {
  PromptTemplate t;
  t.mode = PromptMode::few_shot;
  t.clickbait_examples = std::move(clickbait);
  t.non_clickbait_examples = std::move(non_clickbait);
  return t;
}

std::string PromptTemplate::system_text() const {
  if (mode == PromptMode::zero_shot) return std::string(kZeroShot);
  if (clickbait_examples.empty()) throw TemplateError("few-shot prompt needs at least one clickbait example");
  if (non_clickbait_examples.empty()) throw TemplateError("few-shot prompt needs at least one non-clickbait example");
  std::string s(few_shot_body());
  replace_once(s, kClickbaitSlot, join_lines(clickbait_examples));
  replace_once(s, kNonClickbaitSlot, join_lines(non_clickbait_examples));
  return s;
}

RenderedPrompt render_prompt(const PromptTemplate& t, std::string_view title) {
  return {t.system_text(), std::string(title)};
}

PromptTemplate select_few_shot(const std::vector<corpus::CorpusRecord>& train, std::size_t k) {
  std::vector<std::string> pos, neg;
  for (const auto& r : train) {
    auto& bucket = r.label ? pos : neg;
    if (bucket.size() < k) bucket.push_back(r.title);
  }
  return PromptTemplate::few_shot(std::move(pos), std::move(neg));
}

int parse_label_reply(std::string_view reply) {
  while (!reply.empty() && is_space(reply.front())) reply.remove_prefix(1);
  while (!reply.empty() && is_space(reply.back())) reply.remove_suffix(1);
  if (reply == "0") return 0;
  if (reply == "1") return 1;
  std::string shown(reply.substr(0, 80));
  throw ProtocolError("model reply is not a single 0/1 digit: \"" + shown + "\"");
}

LlmConfig LlmConfig::from_environment() {
  LlmConfig c;
  if (const char* v = std::getenv("LLM_API_BASE_URL")) c.base_url = v;
  if (const char* v = std::getenv("LLM_API_KEY")) c.api_key = v;
  if (const char* v = std::getenv("LLM_MODEL_NAME")) c.model = v;
  return c;
}

LlmClassifier::LlmClassifier(LlmConfig config) : config_(std::move(config)) {
  if (config_.base_url.empty()) throw ConfigurationError("LLM_API_BASE_URL is not set");
  if (config_.api_key.empty()) throw ConfigurationError("LLM_API_KEY is not set");
  if (config_.model.empty()) throw ConfigurationError("LLM_MODEL_NAME is not set");
  base_ = net::parse_base_url(config_.base_url);
  if (!config_.cache_dir.empty())
    disk_ = std::make_unique<DiskCache>(config_.cache_dir / ("llm." + sanitize_file_component(config_.model) + ".jsonl"));
}

int LlmClassifier::classify(const PromptTemplate& t, std::string_view title) {
  const auto prompt = render_prompt(t, title);
  const std::string key = sha256_hex(sha256_hex(prompt.system) + '\x1f' + prompt.user);
  {
    std::lock_guard lock(mutex_);
    if (auto it = memory_.find(key); it != memory_.end()) return it->second;
    if (disk_) {
      if (auto hit = disk_->get(key)) {
        const int label = hit->get<int>();
        memory_.emplace(key, label);
        return label;
      }
    }
  }
  ++requests_;
  const json body{{"model", config_.model},
                  {"temperature", 0},
                  {"messages",
                   json::array({{{"role", "system"}, {"content", prompt.system}},
                                {{"role", "user"}, {"content", prompt.user}}})}};
  const json response = net::post_json(base_, "/chat/completions", body, config_.api_key, config_.http);
  std::string content;
  try {
    content = response.at("choices").at(0).at("message").at("content").get<std::string>();
  } catch (const json::exception& e) {
    throw ProtocolError(std::string("chat response is malformed: ") + e.what());
  }
  const int label = parse_label_reply(content);
  std::lock_guard lock(mutex_);
  memory_.emplace(key, label);
  if (disk_) disk_->put(key, label);
  return label;
}

std::vector<int> LlmClassifier::classify_batch(const PromptTemplate& t, const std::vector<std::string>& titles) {
  std::vector<int> out(titles.size(), 0);
  const std::size_t wave = std::max<std::size_t>(1, config_.concurrency);
  for (std::size_t b = 0; b < titles.size(); b += wave) {
    const std::size_t end = std::min(titles.size(), b + wave);
    std::vector<std::future<int>> futures;
    for (std::size_t i = b; i < end; ++i)
      futures.push_back(std::async(std::launch::async, [&, i] { return classify(t, titles[i]); }));
    for (std::size_t i = b; i < end; ++i) out[i] = futures[i - b].get();
  }
  return out;
}

}  // namespace clickbait::llm
