#include "clickbait/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "clickbait/baitness.hpp"
#include "clickbait/corpus.hpp"
#include "clickbait/csv.hpp"
#include "clickbait/error.hpp"
#include "clickbait/evaluation.hpp"
#include "clickbait/hashing.hpp"
#include "clickbait/informativeness.hpp"
#include "clickbait/llm_baseline.hpp"
#include "clickbait/pipeline.hpp"
#include "clickbait/unicode.hpp"

namespace clickbait::cli {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

struct Options {
  std::uint64_t seed = 42;
  std::string out_dir = "out";
  std::string lexicon_dir;

  // prepare
  std::vector<std::string> inputs;
  std::vector<std::string> schemas;
  std::size_t balance = 0;
  double near_dup = 0.9;
  bool no_near_dup = false;
  std::size_t min_chars = 11;
  std::size_t max_chars = 124;
  std::string language = "all";
  std::vector<double> ratios{0.8, 0.1, 0.1};

  // analyze / score / predict
  std::string input;
  std::string title;
  std::string format = "csv";
  std::string out_file;
  std::string word_vectors;

  // train / evaluate / predict
  std::string split_dir;
  std::string model_dir;
  std::string repr = "features";
  std::string model_kind = "gradient_boosted";
  std::string subset = "default15";
  bool with_baitness = false;
  bool tfidf_cleaned = false;
  std::size_t tfidf_max_features = 1000;
  std::size_t dim = 1000;
  std::string embedding_model = "text-embedding-3-large";
  std::string hybrid_source = "remote_embedding";
  bool no_standardize = false;
  std::string cache_dir;
  std::size_t batch_size = 64;
  std::optional<std::size_t> trees;
  std::optional<std::size_t> max_depth;
  std::optional<double> learning_rate;
  std::optional<double> subsample;
  std::optional<double> feature_subsample;
  std::optional<std::size_t> min_samples_leaf;
  std::size_t threads = 0;
  std::string split = "test";
  double threshold = 0.5;
  std::string tag;
  std::string llm_mode;
  std::size_t shots = 5;

  // compare
  std::vector<std::string> reports;
  std::string report_format = "text";
};

class Manifest {
 public:
  Manifest(std::string command, fs::path out_dir) : command_(std::move(command)), out_dir_(std::move(out_dir)) {}

  void set_options(json options) { options_ = std::move(options); }
  void add_input(const fs::path& p) { inputs_.push_back(p); }
  void add_output(const fs::path& p) { outputs_.push_back(p); }

  void write() const {
    json inputs = json::array();
    for (const auto& p : inputs_) inputs.push_back({{"path", p.generic_string()}, {"sha256", file_digest(p)}});
    json outputs = json::array();
    for (const auto& p : outputs_) {
      outputs.push_back({{"path", fs::relative(p, out_dir_).generic_string()}, {"sha256", file_digest(p)}});
    }
    const json m{{"schema_version", 1},
                 {"tool", "clickbait"},
                 {"command", command_},
                 {"options", options_},
                 {"inputs", inputs},
                 {"outputs", outputs}};
    fs::create_directories(out_dir_);
    std::ofstream out(out_dir_ / ("manifest." + command_ + ".json"), std::ios::binary | std::ios::trunc);
    if (!out) throw Error("cannot write manifest in " + out_dir_.string());
    out << m.dump(2) << '\n';
  }

 private:
  static std::string file_digest(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    if (!in) return "";
    std::stringstream ss;
    ss << in.rdbuf();
    return sha256_hex(ss.str());
  }

  std::string command_;
  fs::path out_dir_;
  json options_ = json::object();
  std::vector<fs::path> inputs_;
  std::vector<fs::path> outputs_;
};

json resolved_options(const CLI::App& app, const CLI::App& sub) {
  json j = json::object();
  auto collect = [&j](const CLI::App& a) {
    for (const CLI::Option* opt : a.get_options()) {
      if (opt->get_lnames().empty()) continue;
      const std::string name = opt->get_lnames().front();
      if (name == "help" || name == "config") continue;
      const auto& res = opt->results();
      if (opt->get_expected_max() > 1 || res.size() > 1) {
        j[name] = res;
      } else if (!res.empty()) {
        j[name] = res.front();
      } else if (opt->get_type_size() == 0) {
        j[name] = false;
      } else {
        j[name] = opt->get_default_str();
      }
    }
  };
  collect(app);
  collect(sub);
  return j;
}

std::string error_kind(const std::exception& e) {
#define CLICKBAIT_KIND(T) \
  if (dynamic_cast<const T*>(&e)) return #T
  CLICKBAIT_KIND(SchemaError);
  CLICKBAIT_KIND(FormatError);
  CLICKBAIT_KIND(DomainError);
  CLICKBAIT_KIND(CapacityError);
  CLICKBAIT_KIND(StratificationError);
  CLICKBAIT_KIND(ShapeError);
  CLICKBAIT_KIND(NumericError);
  CLICKBAIT_KIND(FitError);
  CLICKBAIT_KIND(LoadError);
  CLICKBAIT_KIND(TrainingError);
  CLICKBAIT_KIND(StateError);
  CLICKBAIT_KIND(CompatibilityError);
  CLICKBAIT_KIND(IntegrityError);
  CLICKBAIT_KIND(ConfigurationError);
  CLICKBAIT_KIND(ProtocolError);
  CLICKBAIT_KIND(TransportError);
  CLICKBAIT_KIND(TemplateError);
  CLICKBAIT_KIND(UndefinedMetricError);
  CLICKBAIT_KIND(Error);
#undef CLICKBAIT_KIND
  return "InternalError";
}

textstats::LexiconSet lexicons_for(const Options& o) {
  if (o.lexicon_dir.empty()) return textstats::LexiconSet::defaults();
  auto lex = textstats::LexiconSet::from_directory(o.lexicon_dir);
  lex.validate();
  return lex;
}

std::string number(double v) { return json(v).dump(); }

/// Loads records from a canonical split file, a plain list of titles (.txt),
/// or any corpus file the auto-detecting loader understands.
std::vector<corpus::CorpusRecord> load_records(const fs::path& path, bool require_labels) {
  if (path.extension() == ".txt") {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw LoadError("cannot open " + path.string());
    std::vector<corpus::CorpusRecord> out;
    std::string line;
    std::size_t n = 0;
    while (std::getline(in, line)) {
      ++n;
      auto t = unicode::trim(line);
      if (t.empty()) continue;
      corpus::CorpusRecord r;
      r.id = path.stem().string() + ":" + std::to_string(n);
      r.title = unicode::to_nfc(t);
      out.push_back(std::move(r));
    }
    if (require_labels) throw SchemaError(path.string() + " has no labels");
    return out;
  }
  const auto format = corpus::format_from_path(path);
  if (format == corpus::Format::jsonl) {
    try {
      return corpus::read_jsonl(path);
    } catch (const Error&) {
    }
  }
  return corpus::load_corpus(path, format, corpus::SchemaMap{}).records;
}

std::vector<corpus::CorpusRecord> records_from(const Options& o, bool require_labels) {
  if (!o.title.empty()) {
    corpus::CorpusRecord r;
    r.id = "title";
    r.title = unicode::to_nfc(o.title);
    return {r};
  }
  if (o.input.empty()) throw ConfigurationError("provide --in or --title");
  return load_records(o.input, require_labels);
}

class OutputSink {
 public:
  OutputSink(const std::string& path, std::ostream& fallback) {
    if (!path.empty()) {
      const fs::path p(path);
      if (p.has_parent_path()) fs::create_directories(p.parent_path());
      file_.open(p, std::ios::binary | std::ios::trunc);
      if (!file_) throw Error("cannot write " + path);
    }
    stream_ = path.empty() ? &fallback : &file_;
  }
  std::ostream& stream() { return *stream_; }

 private:
  std::ofstream file_;
  std::ostream* stream_;
};

fs::path split_dir_of(const Options& o) { return o.split_dir.empty() ? fs::path(o.out_dir) : fs::path(o.split_dir); }
fs::path model_dir_of(const Options& o) {
  return o.model_dir.empty() ? fs::path(o.out_dir) / "model" : fs::path(o.model_dir);
}

void configure_embeddings(const Options& o, pipeline::Resources& resources) {
  auto config = representations::RemoteEmbeddingConfig::from_environment();
  config.model = o.embedding_model;
  config.max_batch = o.batch_size;
  config.cache_dir = o.cache_dir.empty() ? fs::path(o.out_dir) / "cache" : fs::path(o.cache_dir);
  resources.set_embedding_config(std::move(config));
}

void write_json_file(const fs::path& p, const json& j, Manifest& m) {
  if (p.has_parent_path()) fs::create_directories(p.parent_path());
  std::ofstream out(p, std::ios::binary | std::ios::trunc);
  if (!out) throw Error("cannot write " + p.string());
  out << j.dump(2) << '\n';
  out.close();
  m.add_output(p);
}

int cmd_prepare(const Options& o, Manifest& m, std::ostream& out) {
  if (o.inputs.empty()) throw ConfigurationError("prepare needs at least one --in file");
  if (!o.schemas.empty() && o.schemas.size() != 1 && o.schemas.size() != o.inputs.size())
    throw ConfigurationError("give one --schema for all inputs or one per input");
  if (o.ratios.size() != 3) throw ConfigurationError("--ratios takes three values: train validation test");

  std::vector<corpus::CorpusRecord> all;
  json loads = json::array();
  for (std::size_t i = 0; i < o.inputs.size(); ++i) {
    corpus::SchemaMap schema;
    if (!o.schemas.empty()) {
      schema = corpus::SchemaMap::from_config(o.schemas.size() == 1 ? o.schemas[0] : o.schemas[i]);
      m.add_input(o.schemas.size() == 1 ? o.schemas[0] : o.schemas[i]);
      if (schema.label_file) m.add_input(*schema.label_file);
    }
    const fs::path path(o.inputs[i]);
    auto loaded = corpus::load_corpus(path, corpus::format_from_path(path), schema);
    m.add_input(path);
    loads.push_back({{"path", path.generic_string()},
                     {"rows", loaded.rows_read},
                     {"records", loaded.records.size()},
                     {"dropped_empty_title", loaded.dropped_empty_title},
                     {"dropped_missing_label", loaded.dropped_missing_label}});
    all.insert(all.end(), std::make_move_iterator(loaded.records.begin()), std::make_move_iterator(loaded.records.end()));
  }

  const std::size_t loaded_count = all.size();
  std::optional<double> near;
  if (!o.no_near_dup) near = o.near_dup;
  all = corpus::deduplicate(all, near);
  const std::size_t after_dedup = all.size();
  all = corpus::filter_length(all, o.min_chars, o.max_chars);
  const std::size_t after_length = all.size();
  corpus::LanguagePredicate keep;
  if (o.language == "all") keep = corpus::accept_all_languages();
  else if (o.language == "english") keep = corpus::heuristic_english();
  else throw ConfigurationError("--language must be 'all' or 'english'");
  all = corpus::filter_language(all, keep);
  const std::size_t after_language = all.size();
  if (o.balance > 0) all = corpus::balance(all, o.balance, o.seed);

  const auto split = corpus::stratified_split(all, {o.ratios[0], o.ratios[1], o.ratios[2]}, o.seed);
  const json filters{{"near_duplicate_jaccard", near ? json(*near) : json(nullptr)},
                     {"min_chars", o.min_chars},
                     {"max_chars", o.max_chars},
                     {"language", o.language},
                     {"balance_per_class", o.balance},
                     {"ratios", o.ratios}};
  const fs::path dir(o.out_dir);
  corpus::write_split(split, dir, filters);
  for (const char* f : {"train.jsonl", "validation.jsonl", "test.jsonl", "split_meta.json"}) m.add_output(dir / f);

  const json summary{{"inputs", loads},
                     {"loaded", loaded_count},
                     {"after_dedup", after_dedup},
                     {"after_length_filter", after_length},
                     {"after_language_filter", after_language},
                     {"train", split.train.size()},
                     {"validation", split.validation.size()},
                     {"test", split.test.size()}};
  out << summary.dump(2) << '\n';
  return kExitOk;
}

int cmd_analyze(const Options& o, Manifest& m, std::ostream& out) {
  const auto records = records_from(o, false);
  if (!o.input.empty()) m.add_input(o.input);
  const auto lex = lexicons_for(o);
  std::optional<representations::WordVectorTable> table;
  if (!o.word_vectors.empty()) {
    table = representations::WordVectorTable::load(o.word_vectors);
    m.add_input(o.word_vectors);
  }
  if (o.format != "csv" && o.format != "jsonl") throw ConfigurationError("--format must be csv or jsonl");
  OutputSink sink(o.out_file, out);
  auto& s = sink.stream();
  const auto& names = informativeness::FeatureVector::names();
  if (o.format == "csv") {
    std::vector<std::string> header{"id"};
    header.insert(header.end(), names.begin(), names.end());
    header.emplace_back("similarity_available");
    s << csv::join(header) << '\n';
  }
  for (const auto& r : records) {
    const auto f = informativeness::extract_features(r, lex, table ? &*table : nullptr);
    const auto values = f.values();
    if (o.format == "csv") {
      std::vector<std::string> row{r.id};
      for (double v : values) row.push_back(number(v));
      row.emplace_back(f.similarity_available ? "1" : "0");
      s << csv::join(row) << '\n';
    } else {
      json j = json::object();
      j["id"] = r.id;
      for (std::size_t k = 0; k < values.size(); ++k) j[std::string(names[k])] = values[k];
      j["similarity_available"] = f.similarity_available;
      s << j.dump() << '\n';
    }
  }
  if (!o.out_file.empty()) {
    s.flush();
    m.add_output(o.out_file);
  }
  return kExitOk;
}

json baitness_json(const corpus::CorpusRecord& r, const informativeness::FeatureVector& f) {
  const auto b = baitness::baitness(f);
  json feats = json::object();
  const auto values = f.values();
  const auto& names = informativeness::FeatureVector::names();
  for (std::size_t k = 0; k < values.size(); ++k) feats[std::string(names[k])] = values[k];
  return {{"id", r.id},
          {"title", r.title},
          {"composite", b.composite},
          {"eye_catch", b.eye_catch},
          {"curiosity", b.curiosity},
          {"sentiment", b.sentiment},
          {"ease_of_text", b.ease_of_text},
          {"ease_of_text_raw", b.ease_of_text_raw},
          {"features", feats}};
}

int cmd_score(const Options& o, Manifest& m, std::ostream& out) {
  const auto records = records_from(o, false);
  if (!o.input.empty()) m.add_input(o.input);
  const auto lex = lexicons_for(o);
  OutputSink sink(o.out_file, out);
  for (const auto& r : records) sink.stream() << baitness_json(r, informativeness::extract_features(r, lex)).dump() << '\n';
  if (!o.out_file.empty()) {
    sink.stream().flush();
    m.add_output(o.out_file);
  }
  return kExitOk;
}

ensemble::EnsembleParams params_of(const Options& o, ensemble::ModelKind kind) {
  auto p = kind == ensemble::ModelKind::random_forest ? ensemble::EnsembleParams::forest_defaults()
                                                      : ensemble::EnsembleParams::boosted_defaults();
  if (o.trees) p.n_trees = *o.trees;
  if (o.max_depth) p.max_depth = *o.max_depth;
  if (o.learning_rate) p.learning_rate = *o.learning_rate;
  if (o.subsample) p.subsample_ratio = *o.subsample;
  if (o.feature_subsample) p.feature_subsample = *o.feature_subsample;
  if (o.min_samples_leaf) p.min_samples_leaf = *o.min_samples_leaf;
  p.threads = o.threads;
  p.seed = o.seed;
  return p;
}

int cmd_train(const Options& o, Manifest& m, std::ostream& out) {
  const fs::path train_path = split_dir_of(o) / "train.jsonl";
  const auto train = corpus::read_jsonl(train_path);
  m.add_input(train_path);

  pipeline::FeaturizerConfig fc;
  fc.representation = pipeline::parse_representation(o.repr);
  fc.subset = o.subset;
  fc.include_baitness = o.with_baitness;
  fc.tfidf.cleaned = o.tfidf_cleaned;
  fc.tfidf.max_features = o.tfidf_max_features;
  fc.word_vectors = o.word_vectors;
  fc.embedding_dim = o.dim;
  fc.embedding_model = o.embedding_model;
  if (o.hybrid_source == "word_vectors") fc.hybrid_source = pipeline::HybridSource::word_vectors;
  else if (o.hybrid_source != "remote_embedding") throw ConfigurationError("--hybrid-source must be remote_embedding or word_vectors");
  fc.standardize = !o.no_standardize;
  if (!o.word_vectors.empty()) m.add_input(o.word_vectors);

  pipeline::Resources resources(lexicons_for(o));
  configure_embeddings(o, resources);
  auto featurizer = pipeline::Featurizer::fit(fc, train, resources);
  const auto X = featurizer.transform(train, resources);
  const auto y = pipeline::labels_of(train);
  const auto kind = ensemble::parse_model_kind(o.model_kind);
  auto model = ensemble::train(kind, X, y, params_of(o, kind), featurizer.column_names());

  pipeline::ModelBundle bundle{std::move(featurizer), std::move(model)};
  const fs::path dir = model_dir_of(o);
  bundle.save(dir);
  m.add_output(dir / "model.json");
  m.add_output(dir / "featurizer.json");

  const auto probas = ensemble::predict_proba(bundle.model, X);
  auto report = evaluation::evaluate(y, probas, std::string(ensemble::to_string(kind)) + "/" + o.repr, "train");
  json importance = json::object();
  for (const auto& [name, v] : ensemble::feature_importance(bundle.model)) {
    if (bundle.model.n_features() <= 64 || v > 0.0) importance[name] = v;
  }
  const json summary{{"model", to_json(report)},
                     {"dim", X.cols},
                     {"rows", X.rows},
                     {"trees", bundle.model.trees.size()},
                     {"training_loss", bundle.model.training_loss},
                     {"feature_importance", importance}};
  write_json_file(dir / "training_summary.json", summary, m);
  out << evaluation::to_json(report).dump(2) << '\n';
  return kExitOk;
}

int cmd_evaluate(const Options& o, Manifest& m, std::ostream& out) {
  const fs::path split_path = split_dir_of(o) / (o.split + ".jsonl");
  const auto records = corpus::read_jsonl(split_path);
  m.add_input(split_path);
  const auto y = pipeline::labels_of(records);
  std::vector<double> probas;
  std::string tag = o.tag;

  if (!o.llm_mode.empty()) {
    llm::PromptTemplate t;
    if (o.llm_mode == "zero_shot") {
      t = llm::PromptTemplate::zero_shot();
    } else if (o.llm_mode == "few_shot" || o.llm_mode == "one_shot") {
      const fs::path train_path = split_dir_of(o) / "train.jsonl";
      m.add_input(train_path);
      t = llm::select_few_shot(corpus::read_jsonl(train_path), o.llm_mode == "one_shot" ? 1 : o.shots);
    } else {
      throw ConfigurationError("--llm must be zero_shot, one_shot or few_shot");
    }
    auto config = llm::LlmConfig::from_environment();
    config.cache_dir = o.cache_dir.empty() ? fs::path(o.out_dir) / "cache" : fs::path(o.cache_dir);
    llm::LlmClassifier classifier(config);
    std::vector<std::string> titles;
    for (const auto& r : records) titles.push_back(r.title);
    for (int label : classifier.classify_batch(t, titles)) probas.push_back(label);
    if (tag.empty()) tag = "llm/" + o.llm_mode;
  } else {
    const fs::path dir = model_dir_of(o);
    auto bundle = pipeline::ModelBundle::load(dir);
    m.add_input(dir / "model.json");
    m.add_input(dir / "featurizer.json");
    pipeline::Resources resources(lexicons_for(o));
    configure_embeddings(o, resources);
    const auto X = bundle.featurizer.transform(records, resources);
    probas = ensemble::predict_proba(bundle.model, X);
    if (tag.empty())
      tag = std::string(ensemble::to_string(bundle.model.kind)) + "/" +
            std::string(pipeline::to_string(bundle.featurizer.config().representation));
  }

  const auto report = evaluation::evaluate(y, probas, tag, o.split, o.threshold);
  const fs::path dir(o.out_dir);
  const std::string stem = o.tag.empty() ? "report." + o.split : "report." + o.tag + "." + o.split;
  write_json_file(dir / (stem + ".json"), evaluation::to_json(report), m);
  {
    const fs::path md = dir / (stem + ".md");
    std::ofstream f(md, std::ios::binary | std::ios::trunc);
    if (!f) throw Error("cannot write " + md.string());
    f << evaluation::compare_report({report}, evaluation::ReportFormat::markdown);
    f.close();
    m.add_output(md);
  }
  out << evaluation::to_json(report).dump(2) << '\n';
  return kExitOk;
}

int cmd_predict(const Options& o, Manifest& m, std::ostream& out) {
  const auto records = records_from(o, false);
  if (!o.input.empty()) m.add_input(o.input);
  const fs::path dir = model_dir_of(o);
  auto bundle = pipeline::ModelBundle::load(dir);
  m.add_input(dir / "model.json");
  m.add_input(dir / "featurizer.json");
  pipeline::Resources resources(lexicons_for(o));
  configure_embeddings(o, resources);
  const auto X = bundle.featurizer.transform(records, resources);
  const auto probas = ensemble::predict_proba(bundle.model, X);
  OutputSink sink(o.out_file, out);
  for (std::size_t i = 0; i < records.size(); ++i) {
    sink.stream() << json{{"id", records[i].id},
                          {"title", records[i].title},
                          {"proba", probas[i]},
                          {"label", probas[i] >= o.threshold ? 1 : 0}}
                         .dump()
                  << '\n';
  }
  if (!o.out_file.empty()) {
    sink.stream().flush();
    m.add_output(o.out_file);
  }
  return kExitOk;
}

int cmd_compare(const Options& o, Manifest& m, std::ostream& out) {
  if (o.reports.empty()) throw ConfigurationError("compare needs at least one --report");
  std::vector<evaluation::EvalReport> reports;
  for (const auto& p : o.reports) {
    std::ifstream in(p, std::ios::binary);
    if (!in) throw LoadError("cannot open " + p);
    try {
      reports.push_back(evaluation::report_from_json(json::parse(in)));
    } catch (const json::parse_error& e) {
      throw LoadError(p + ": " + e.what());
    }
    m.add_input(p);
  }
  const auto rendered = evaluation::compare_report(reports, evaluation::parse_report_format(o.report_format));
  OutputSink sink(o.out_file, out);
  sink.stream() << rendered;
  if (!o.out_file.empty()) {
    sink.stream().flush();
    m.add_output(o.out_file);
  }
  return kExitOk;
}

void add_model_options(CLI::App* s, Options& o) {
  s->add_option("--model-dir", o.model_dir, "Model directory (default <out-dir>/model)");
  s->add_option("--lexicon-dir", o.lexicon_dir, "Directory overriding the built-in lexicons");
  s->add_option("--cache-dir", o.cache_dir, "Embedding and LLM reply cache (default <out-dir>/cache)");
  s->add_option("--embedding-model", o.embedding_model, "Remote embedding model name")->capture_default_str();
  s->add_option("--batch-size", o.batch_size, "Texts per embedding request")->capture_default_str();
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Clickbait headline analysis and classification toolkit", "clickbait"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_config("--config", "", "Read options from a TOML/INI file");
  app.add_option("--seed", o.seed, "Random seed")->capture_default_str();
  app.add_option("--out-dir", o.out_dir, "Directory for every artifact and manifest")->capture_default_str();

  auto* prepare = app.add_subcommand("prepare", "Load, clean, balance and split corpora");
  prepare->add_option("--in", o.inputs, "Input corpus (CSV or JSONL); repeatable")->required();
  prepare->add_option("--schema", o.schemas, "Column mapping file, one for all inputs or one per input");
  prepare->add_option("--balance", o.balance, "Records kept per class (0 disables balancing)")->capture_default_str();
  prepare->add_option("--near-dup", o.near_dup, "Title Jaccard threshold for near-duplicate removal")
      ->capture_default_str();
  prepare->add_flag("--no-near-dup", o.no_near_dup, "Only remove exact duplicates");
  prepare->add_option("--min-chars", o.min_chars, "Minimum title length in code points")->capture_default_str();
  prepare->add_option("--max-chars", o.max_chars, "Maximum title length in code points")->capture_default_str();
  prepare->add_option("--language", o.language, "all or english")->capture_default_str();
  prepare->add_option("--ratios", o.ratios, "Train, validation and test fractions")->expected(3)->capture_default_str();

  auto* analyze = app.add_subcommand("analyze", "Emit the 25 informativeness measures per record");
  analyze->add_option("--in", o.input, "Records to analyze");
  analyze->add_option("--title", o.title, "Analyze a single headline");
  analyze->add_option("--format", o.format, "csv or jsonl")->capture_default_str();
  analyze->add_option("--out", o.out_file, "Output file (default stdout)");
  analyze->add_option("--word-vectors", o.word_vectors, "Word-vector file for title/body similarity");
  analyze->add_option("--lexicon-dir", o.lexicon_dir, "Directory overriding the built-in lexicons");

  auto* score = app.add_subcommand("score", "Compute baitness scores");
  score->add_option("--in", o.input, "Records to score");
  score->add_option("--title", o.title, "Score a single headline");
  score->add_option("--out", o.out_file, "Output file (default stdout)");
  score->add_option("--lexicon-dir", o.lexicon_dir, "Directory overriding the built-in lexicons");

  auto* train = app.add_subcommand("train", "Train a tree ensemble on the training split");
  train->add_option("--split-dir", o.split_dir, "Directory holding train.jsonl (default <out-dir>)");
  train->add_option("--repr", o.repr, "features, tfidf, word_vectors, remote_embedding or hybrid")
      ->capture_default_str();
  train->add_option("--model", o.model_kind, "random_forest or gradient_boosted")->capture_default_str();
  train->add_option("--subset", o.subset, "default15, all25 or a comma-separated list of measures")
      ->capture_default_str();
  train->add_flag("--baitness", o.with_baitness, "Append the composite baitness score as a feature");
  train->add_flag("--tfidf-cleaned", o.tfidf_cleaned, "Drop punctuation tokens before building n-grams");
  train->add_option("--tfidf-max-features", o.tfidf_max_features, "Vocabulary cap (0 keeps every term)")
      ->capture_default_str();
  train->add_option("--word-vectors", o.word_vectors, "Pre-trained word-vector file");
  train->add_option("--dim", o.dim, "Remote embedding dimension (3072, 1000, 100 or 30)")->capture_default_str();
  train->add_option("--hybrid-source", o.hybrid_source, "remote_embedding or word_vectors")->capture_default_str();
  train->add_flag("--no-standardize", o.no_standardize, "Concatenate raw feature values in hybrid rows");
  train->add_option("--trees", o.trees, "Number of trees");
  train->add_option("--max-depth", o.max_depth, "Maximum tree depth (0 = unlimited)");
  train->add_option("--learning-rate", o.learning_rate, "Boosting learning rate");
  train->add_option("--subsample", o.subsample, "Row sampling ratio");
  train->add_option("--feature-subsample", o.feature_subsample, "Column sampling fraction");
  train->add_option("--min-samples-leaf", o.min_samples_leaf, "Minimum samples per leaf");
  train->add_option("--threads", o.threads, "Worker threads (0 = all cores)")->capture_default_str();
  add_model_options(train, o);

  auto* evaluate = app.add_subcommand("evaluate", "Score a model or an LLM baseline on a split");
  evaluate->add_option("--split-dir", o.split_dir, "Directory holding the split files (default <out-dir>)");
  evaluate->add_option("--split", o.split, "train, validation or test")->capture_default_str();
  evaluate->add_option("--threshold", o.threshold, "Decision threshold")->capture_default_str();
  evaluate->add_option("--tag", o.tag, "Model label used in reports");
  evaluate->add_option("--llm", o.llm_mode, "Evaluate a prompted LLM instead: zero_shot, one_shot or few_shot");
  evaluate->add_option("--shots", o.shots, "Examples per class for few_shot")->capture_default_str();
  add_model_options(evaluate, o);

  auto* predict = app.add_subcommand("predict", "Predict clickbait probabilities");
  predict->add_option("--in", o.input, "Records or a .txt file with one title per line");
  predict->add_option("--title", o.title, "Predict a single headline");
  predict->add_option("--out", o.out_file, "Output file (default stdout)");
  predict->add_option("--threshold", o.threshold, "Decision threshold")->capture_default_str();
  add_model_options(predict, o);

  auto* compare = app.add_subcommand("compare", "Render evaluation reports side by side");
  compare->add_option("--report", o.reports, "Report JSON file; repeatable")->required();
  compare->add_option("--format", o.report_format, "text, json or markdown")->capture_default_str();
  compare->add_option("--out", o.out_file, "Output file (default stdout)");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  CLI::App* sub = app.get_subcommands().front();
  Manifest manifest(sub->get_name(), o.out_dir);
  manifest.set_options(resolved_options(app, *sub));
  try {
    int code = kExitFailure;
    if (sub == prepare) code = cmd_prepare(o, manifest, out);
    else if (sub == analyze) code = cmd_analyze(o, manifest, out);
    else if (sub == score) code = cmd_score(o, manifest, out);
    else if (sub == train) code = cmd_train(o, manifest, out);
    else if (sub == evaluate) code = cmd_evaluate(o, manifest, out);
    else if (sub == predict) code = cmd_predict(o, manifest, out);
    else if (sub == compare) code = cmd_compare(o, manifest, out);
    manifest.write();
    return code;
  } catch (const std::exception& e) {
    err << json{{"error", error_kind(e)}, {"message", e.what()}, {"command", sub->get_name()}}.dump() << '\n';
    return kExitFailure;
  }
}

int run(int argc, char** argv) {
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  return run(args, std::cout, std::cerr);
}

}  // namespace clickbait::cli
