#include "clickbait/ensemble.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <fstream>
#include <future>
#include <numeric>
#include <sstream>
#include <thread>

#include "clickbait/error.hpp"
#include "clickbait/hashing.hpp"
#include "clickbait/rng.hpp"

namespace clickbait::ensemble {

using nlohmann::json;

Matrix Matrix::from_rows(const std::vector<std::vector<double>>& rows) {
  Matrix m;
  m.rows = rows.size();
  m.cols = rows.empty() ? 0 : rows.front().size();
  m.data.reserve(m.rows * m.cols);
  for (const auto& r : rows) {
    if (r.size() != m.cols) throw ShapeError("matrix rows have differing lengths");
    m.data.insert(m.data.end(), r.begin(), r.end());
  }
  return m;
}

std::string_view to_string(ModelKind k) {
  return k == ModelKind::random_forest ? "random_forest" : "gradient_boosted";
}

ModelKind parse_model_kind(std::string_view s) {
  if (s == "random_forest" || s == "rf" || s == "forest") return ModelKind::random_forest;
  if (s == "gradient_boosted" || s == "gbt" || s == "xgboost" || s == "boosted") return ModelKind::gradient_boosted;
  throw DomainError("unknown model kind: " + std::string(s));
}

EnsembleParams EnsembleParams::forest_defaults() {
  EnsembleParams p;
  p.n_trees = 100;
  p.max_depth = 0;
  return p;
}

EnsembleParams EnsembleParams::boosted_defaults() {
  EnsembleParams p;
  p.n_trees = 200;
  p.max_depth = 6;
  p.learning_rate = 0.1;
  p.feature_subsample = 0.0;
  return p;
}

json EnsembleParams::to_json() const {
  return {{"n_trees", n_trees},
          {"max_depth", max_depth},
          {"learning_rate", learning_rate},
          {"subsample_ratio", subsample_ratio},
          {"feature_subsample", feature_subsample},
          {"min_samples_leaf", min_samples_leaf},
          {"seed", seed},
          {"lambda", lambda},
          {"histogram_threshold", histogram_threshold},
          {"histogram_bins", histogram_bins}};
}

EnsembleParams EnsembleParams::from_json(const json& j) {
  EnsembleParams p;
  p.n_trees = j.at("n_trees").get<std::size_t>();
  p.max_depth = j.at("max_depth").get<std::size_t>();
  p.learning_rate = j.at("learning_rate").get<double>();
  p.subsample_ratio = j.at("subsample_ratio").get<double>();
  p.feature_subsample = j.at("feature_subsample").get<double>();
  p.min_samples_leaf = j.at("min_samples_leaf").get<std::size_t>();
  p.seed = j.at("seed").get<std::uint64_t>();
  p.lambda = j.at("lambda").get<double>();
  p.histogram_threshold = j.at("histogram_threshold").get<std::size_t>();
  p.histogram_bins = j.at("histogram_bins").get<std::size_t>();
  return p;
}

double DecisionTree::predict(std::span<const double> x) const {
  if (feature.empty()) return 0.0;
  std::size_t node = 0;
  while (feature[node] >= 0) {
    node = static_cast<std::size_t>(x[static_cast<std::size_t>(feature[node])] < threshold[node] ? left[node]
                                                                                                   : right[node]);
  }
  return value[node];
}

std::size_t DecisionTree::depth() const {
  if (feature.empty()) return 0;
  std::vector<std::size_t> d(feature.size(), 0);
  std::size_t best = 0;
  for (std::size_t i = 0; i < feature.size(); ++i) {
    best = std::max(best, d[i]);
    if (feature[i] >= 0) {
      d[static_cast<std::size_t>(left[i])] = d[i] + 1;
      d[static_cast<std::size_t>(right[i])] = d[i] + 1;
    }
  }
  return best;
}

void DecisionTree::validate(std::size_t n_features) const {
  const std::size_t n = feature.size();
  if (n == 0) throw IntegrityError("tree has no nodes");
  if (threshold.size() != n || left.size() != n || right.size() != n || value.size() != n || gain.size() != n)
    throw IntegrityError("tree arrays have differing lengths");
  std::vector<int> parents(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    if (!std::isfinite(value[i])) throw IntegrityError("tree value is not finite");
    if (feature[i] < 0) {
      if (left[i] != -1 || right[i] != -1) throw IntegrityError("leaf has children");
      continue;
    }
    if (static_cast<std::size_t>(feature[i]) >= n_features) throw IntegrityError("split feature out of range");
    for (auto c : {left[i], right[i]}) {
      if (c <= static_cast<std::int32_t>(i) || static_cast<std::size_t>(c) >= n)
        throw IntegrityError("child index is out of range or points backward");
      ++parents[static_cast<std::size_t>(c)];
    }
  }
  for (std::size_t i = 1; i < n; ++i) {
    if (parents[i] != 1) throw IntegrityError("tree node does not have exactly one parent");
  }
}

double sigmoid(double z) {
  if (z >= 0) return 1.0 / (1.0 + std::exp(-z));
  const double e = std::exp(z);
  return e / (1.0 + e);
}

double log_loss(std::span<const int> y, std::span<const double> p) {
  if (y.size() != p.size()) throw ShapeError("log_loss: length mismatch");
  if (y.empty()) return 0.0;
  constexpr double eps = 1e-15;
  double total = 0.0;
  for (std::size_t i = 0; i < y.size(); ++i) {
    const double q = std::clamp(p[i], eps, 1.0 - eps);
    total -= y[i] ? std::log(q) : std::log(1.0 - q);
  }
  return total / static_cast<double>(y.size());
}

namespace {

std::size_t resolve_threads(std::size_t requested) {
  if (requested > 0) return requested;
  return std::max(1u, std::thread::hardware_concurrency());
}

/// Forest: (weight of class 0, weight of class 1). Boosted: (sum of
/// gradients, sum of hessians). `n` is the sample weight used for
/// min_samples_leaf.
struct Stats {
  double a = 0.0;
  double b = 0.0;
  double n = 0.0;

  void add(const Stats& o) {
    a += o.a;
    b += o.b;
    n += o.n;
  }
  Stats minus(const Stats& o) const { return {a - o.a, b - o.b, n - o.n}; }
};

struct Criterion {
  bool boosted = false;
  double lambda = 1.0;

  /// Lower is better; split gain is quality(parent) - quality(left) - quality(right).
  double quality(const Stats& s) const {
    if (boosted) return -0.5 * s.a * s.a / (s.b + lambda);
    const double w = s.a + s.b;
    return w > 0.0 ? w - (s.a * s.a + s.b * s.b) / w : 0.0;
  }

  double leaf(const Stats& s) const {
    if (boosted) return -s.a / (s.b + lambda);
    const double w = s.a + s.b;
    return w > 0.0 ? s.b / w : 0.0;
  }

  bool pure(const Stats& s) const { return !boosted && (s.a <= 0.0 || s.b <= 0.0); }
};

/// Quantized copy of X used by histogram split finding. Sample x falls in bin
/// k when exactly k edges are <= x, so x < edges[k] iff bin(x) <= k.
struct Binned {
  std::vector<std::vector<double>> edges;
  std::vector<std::uint16_t> bins;  // column-major
  std::size_t rows = 0;

  std::uint16_t at(std::size_t r, std::size_t f) const { return bins[f * rows + r]; }
};

double midpoint(double lo, double hi) {
  const double t = lo + (hi - lo) / 2.0;
  return t > lo ? t : hi;
}

Binned make_bins(const Matrix& X, std::size_t max_bins) {
  Binned b;
  b.rows = X.rows;
  b.edges.resize(X.cols);
  b.bins.resize(X.rows * X.cols);
  max_bins = std::clamp<std::size_t>(max_bins, 2, 65535);
  std::vector<double> col(X.rows);
  for (std::size_t f = 0; f < X.cols; ++f) {
    for (std::size_t r = 0; r < X.rows; ++r) col[r] = X.at(r, f);
    std::vector<double> sorted = col;
    std::sort(sorted.begin(), sorted.end());
    std::vector<double> uniq = sorted;
    uniq.erase(std::unique(uniq.begin(), uniq.end()), uniq.end());
    auto& edges = b.edges[f];
    if (uniq.size() <= max_bins) {
      for (std::size_t i = 0; i + 1 < uniq.size(); ++i) edges.push_back(midpoint(uniq[i], uniq[i + 1]));
    } else {
      for (std::size_t k = 1; k < max_bins; ++k) {
        const double c = sorted[k * sorted.size() / max_bins];
        if (c > sorted.front() && (edges.empty() || c > edges.back())) edges.push_back(c);
      }
    }
    for (std::size_t r = 0; r < X.rows; ++r) {
      b.bins[f * X.rows + r] =
          static_cast<std::uint16_t>(std::upper_bound(edges.begin(), edges.end(), col[r]) - edges.begin());
    }
  }
  return b;
}

struct Split {
  bool valid = false;
  double gain = 0.0;
  std::int32_t feature = -1;
  double threshold = 0.0;

  bool better_than(const Split& o) const {
    if (!valid) return false;
    if (!o.valid) return true;
    if (gain != o.gain) return gain > o.gain;
    if (feature != o.feature) return feature < o.feature;
    return threshold < o.threshold;
  }
};

constexpr double kMinGain = 1e-12;

struct TreeBuilder {
  const Matrix& X;
  Criterion crit;
  std::vector<Stats> sample;  // per-row contribution
  std::size_t max_depth = 0;
  double min_leaf = 1.0;
  const Binned* binned = nullptr;
  std::size_t histogram_threshold = 4096;
  /// Candidate features for this tree, ascending.
  std::vector<std::size_t> features;
  /// Forest: stop after this many non-constant features (0 = all).
  std::size_t per_split = 0;
  Rng* rng = nullptr;
  std::size_t threads = 1;

  std::vector<std::uint32_t> idx;
  DecisionTree tree;

  TreeBuilder(const Matrix& x) : X(x) {}

  /// Returns the best split on feature f and whether f varies in the node.
  std::pair<Split, bool> eval_feature(std::size_t f, std::size_t begin, std::size_t end, const Stats& total,
                                      double parent_q) const {
    Split best;
    const std::size_t m = end - begin;
    if (binned && m > histogram_threshold) {
      const auto& edges = binned->edges[f];
      std::vector<Stats> hist(edges.size() + 1);
      for (std::size_t k = begin; k < end; ++k) hist[binned->at(idx[k], f)].add(sample[idx[k]]);
      std::size_t occupied = 0;
      for (const auto& h : hist) occupied += h.n > 0.0 ? 1 : 0;
      if (occupied < 2) return {best, false};
      Stats left;
      for (std::size_t k = 0; k + 1 < hist.size(); ++k) {
        left.add(hist[k]);
        const Stats right = total.minus(left);
        if (hist[k].n <= 0.0 && k > 0) continue;
        if (left.n < min_leaf || right.n < min_leaf || left.n <= 0.0 || right.n <= 0.0) continue;
        Split s{true, parent_q - crit.quality(left) - crit.quality(right), static_cast<std::int32_t>(f), edges[k]};
        if (s.gain > kMinGain && s.better_than(best)) best = s;
      }
      return {best, true};
    }
    std::vector<std::pair<double, std::uint32_t>> vals(m);
    for (std::size_t k = 0; k < m; ++k) vals[k] = {X.at(idx[begin + k], f), idx[begin + k]};
    std::sort(vals.begin(), vals.end());
    if (vals.front().first == vals.back().first) return {best, false};
    Stats left;
    for (std::size_t k = 0; k + 1 < m; ++k) {
      left.add(sample[vals[k].second]);
      if (vals[k].first == vals[k + 1].first) continue;
      const Stats right = total.minus(left);
      if (left.n < min_leaf || right.n < min_leaf) continue;
      Split s{true, parent_q - crit.quality(left) - crit.quality(right), static_cast<std::int32_t>(f),
              midpoint(vals[k].first, vals[k + 1].first)};
      if (s.gain > kMinGain && s.better_than(best)) best = s;
    }
    return {best, true};
  }

  Split find_split(std::size_t begin, std::size_t end, const Stats& total) {
    const double parent_q = crit.quality(total);
    Split best;
    if (per_split > 0) {
      std::vector<std::size_t> order = features;
      rng->shuffle(std::span<std::size_t>(order));
      std::size_t tried = 0;
      for (auto f : order) {
        auto [s, varies] = eval_feature(f, begin, end, total, parent_q);
        if (!varies) continue;
        if (s.better_than(best)) best = s;
        if (++tried >= per_split) break;
      }
      return best;
    }
    const std::size_t work = (end - begin) * features.size();
    if (threads <= 1 || work < 200000 || features.size() < 2) {
      for (auto f : features) {
        auto s = eval_feature(f, begin, end, total, parent_q).first;
        if (s.better_than(best)) best = s;
      }
      return best;
    }
    const std::size_t t = std::min(threads, features.size());
    std::vector<std::future<Split>> parts;
    for (std::size_t w = 0; w < t; ++w) {
      parts.push_back(std::async(std::launch::async, [&, w] {
        Split local;
        for (std::size_t k = w; k < features.size(); k += t) {
          auto s = eval_feature(features[k], begin, end, total, parent_q).first;
          if (s.better_than(local)) local = s;
        }
        return local;
      }));
    }
    for (auto& p : parts) {
      auto s = p.get();
      if (s.better_than(best)) best = s;
    }
    return best;
  }

  std::int32_t new_node(double value) {
    tree.feature.push_back(-1);
    tree.threshold.push_back(0.0);
    tree.left.push_back(-1);
    tree.right.push_back(-1);
    tree.value.push_back(value);
    tree.gain.push_back(0.0);
    return static_cast<std::int32_t>(tree.feature.size() - 1);
  }

  std::int32_t grow(std::size_t begin, std::size_t end, std::size_t depth) {
    Stats total;
    for (std::size_t k = begin; k < end; ++k) total.add(sample[idx[k]]);
    const std::int32_t id = new_node(crit.leaf(total));
    if (max_depth > 0 && depth >= max_depth) return id;
    if (total.n < 2.0 * min_leaf || end - begin < 2 || crit.pure(total)) return id;
    const Split s = find_split(begin, end, total);
    if (!s.valid) return id;
    const auto f = static_cast<std::size_t>(s.feature);
    auto mid_it = std::stable_partition(idx.begin() + static_cast<std::ptrdiff_t>(begin),
                                        idx.begin() + static_cast<std::ptrdiff_t>(end),
                                        [&](std::uint32_t r) { return X.at(r, f) < s.threshold; });
    const auto mid = static_cast<std::size_t>(mid_it - idx.begin());
    if (mid == begin || mid == end) return id;
    tree.feature[static_cast<std::size_t>(id)] = s.feature;
    tree.threshold[static_cast<std::size_t>(id)] = s.threshold;
    tree.gain[static_cast<std::size_t>(id)] = s.gain;
    const auto l = grow(begin, mid, depth + 1);
    tree.left[static_cast<std::size_t>(id)] = l;
    const auto r = grow(mid, end, depth + 1);
    tree.right[static_cast<std::size_t>(id)] = r;
    return id;
  }

  DecisionTree build() {
    if (idx.empty()) {
      new_node(crit.leaf(Stats{}));
    } else {
      grow(0, idx.size(), 0);
    }
    return std::move(tree);
  }
};

void check_training_input(const Matrix& X, std::span<const int> y) {
  if (X.rows != y.size())
    throw ShapeError("X has " + std::to_string(X.rows) + " rows but y has " + std::to_string(y.size()) + " labels");
  if (X.rows < 2) throw TrainingError("at least two training rows are required");
  if (X.cols == 0) throw ShapeError("X has no columns");
  if (X.data.size() != X.rows * X.cols) throw ShapeError("matrix data size does not match its shape");
  std::size_t pos = 0;
  for (int v : y) {
    if (v != 0 && v != 1) throw DomainError("labels must be 0 or 1");
    pos += static_cast<std::size_t>(v);
  }
  if (pos == 0 || pos == y.size()) throw TrainingError("training labels contain a single class");
  for (double v : X.data) {
    if (!std::isfinite(v)) throw NumericError("training matrix contains a non-finite value");
  }
}

std::vector<std::string> resolve_schema(std::vector<std::string> schema, std::size_t cols) {
  if (schema.empty()) {
    for (std::size_t j = 0; j < cols; ++j) schema.push_back("f" + std::to_string(j));
  }
  if (schema.size() != cols)
    throw ShapeError("feature schema has " + std::to_string(schema.size()) + " names for " + std::to_string(cols) +
                     " columns");
  return schema;
}

std::vector<std::size_t> all_features(std::size_t d) {
  std::vector<std::size_t> f(d);
  std::iota(f.begin(), f.end(), 0);
  return f;
}

}  // namespace

DecisionTree fit_gini_tree(const Matrix& X, std::span<const int> y, std::span<const double> weights,
                           std::size_t max_depth, std::size_t min_samples_leaf) {
  if (X.rows != y.size() || (!weights.empty() && weights.size() != y.size()))
    throw ShapeError("fit_gini_tree: length mismatch");
  TreeBuilder b(X);
  b.crit = Criterion{false, 0.0};
  b.max_depth = max_depth;
  b.min_leaf = static_cast<double>(std::max<std::size_t>(1, min_samples_leaf));
  b.features = all_features(X.cols);
  b.sample.resize(X.rows);
  for (std::size_t i = 0; i < X.rows; ++i) {
    const double w = weights.empty() ? 1.0 : weights[i];
    if (w <= 0.0) continue;
    b.sample[i] = y[i] ? Stats{0.0, w, w} : Stats{w, 0.0, w};
    b.idx.push_back(static_cast<std::uint32_t>(i));
  }
  return b.build();
}

EnsembleModel train_random_forest(const Matrix& X, std::span<const int> y, const EnsembleParams& params,
                                  std::vector<std::string> feature_schema) {
  check_training_input(X, y);
  EnsembleModel model;
  model.kind = ModelKind::random_forest;
  model.params = params;
  model.feature_schema = resolve_schema(std::move(feature_schema), X.cols);

  const std::size_t d = X.cols;
  std::size_t per_split;
  if (params.feature_subsample <= 0.0) {
    per_split = static_cast<std::size_t>(std::floor(std::sqrt(static_cast<double>(d))));
  } else {
    per_split = static_cast<std::size_t>(std::llround(std::min(1.0, params.feature_subsample) * static_cast<double>(d)));
  }
  per_split = std::clamp<std::size_t>(per_split, 1, d);
  const std::size_t draws = std::max<std::size_t>(
      1, static_cast<std::size_t>(std::llround(params.subsample_ratio * static_cast<double>(X.rows))));

  std::unique_ptr<Binned> binned;
  if (X.rows > params.histogram_threshold) binned = std::make_unique<Binned>(make_bins(X, params.histogram_bins));

  model.trees.resize(params.n_trees);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t t = next++; t < params.n_trees; t = next++) {
      Rng rng(mix_seed(params.seed, t));
      std::vector<double> counts(X.rows, 0.0);
      for (std::size_t k = 0; k < draws; ++k) counts[rng.index(X.rows)] += 1.0;
      TreeBuilder b(X);
      b.crit = Criterion{false, 0.0};
      b.max_depth = params.max_depth;
      b.min_leaf = static_cast<double>(std::max<std::size_t>(1, params.min_samples_leaf));
      b.binned = binned.get();
      b.histogram_threshold = params.histogram_threshold;
      b.features = all_features(d);
      b.per_split = per_split >= d ? 0 : per_split;
      b.rng = &rng;
      b.sample.resize(X.rows);
      for (std::size_t i = 0; i < X.rows; ++i) {
        if (counts[i] <= 0.0) continue;
        b.sample[i] = y[i] ? Stats{0.0, counts[i], counts[i]} : Stats{counts[i], 0.0, counts[i]};
        b.idx.push_back(static_cast<std::uint32_t>(i));
      }
      model.trees[t] = b.build();
    }
  };
  const std::size_t n_threads = std::min(resolve_threads(params.threads), std::max<std::size_t>(1, params.n_trees));
  std::vector<std::thread> pool;
  for (std::size_t k = 1; k < n_threads; ++k) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();
  return model;
}

EnsembleModel train_gradient_boosted(const Matrix& X, std::span<const int> y, const EnsembleParams& params,
                                     std::vector<std::string> feature_schema) {
  check_training_input(X, y);
  EnsembleModel model;
  model.kind = ModelKind::gradient_boosted;
  model.params = params;
  model.feature_schema = resolve_schema(std::move(feature_schema), X.cols);

  const std::size_t n = X.rows;
  const std::size_t d = X.cols;
  const double pos = static_cast<double>(std::count(y.begin(), y.end(), 1));
  const double prior = pos / static_cast<double>(n);
  model.base_score = std::log(prior / (1.0 - prior));

  std::unique_ptr<Binned> binned;
  if (n > params.histogram_threshold) binned = std::make_unique<Binned>(make_bins(X, params.histogram_bins));

  std::vector<double> margin(n, model.base_score);
  std::vector<double> prob(n, prior);
  model.training_loss.push_back(log_loss(y, prob));

  const std::size_t rows_per_round = std::clamp<std::size_t>(
      static_cast<std::size_t>(std::llround(params.subsample_ratio * static_cast<double>(n))), 1, n);
  std::size_t cols_per_tree = d;
  if (params.feature_subsample > 0.0 && params.feature_subsample < 1.0)
    cols_per_tree = std::clamp<std::size_t>(
        static_cast<std::size_t>(std::llround(params.feature_subsample * static_cast<double>(d))), 1, d);
  const std::size_t threads = resolve_threads(params.threads);

  for (std::size_t t = 0; t < params.n_trees; ++t) {
    Rng rng(mix_seed(params.seed, t));
    TreeBuilder b(X);
    b.crit = Criterion{true, params.lambda};
    b.max_depth = params.max_depth;
    b.min_leaf = static_cast<double>(std::max<std::size_t>(1, params.min_samples_leaf));
    b.binned = binned.get();
    b.histogram_threshold = params.histogram_threshold;
    b.threads = threads;
    b.features = all_features(d);
    if (cols_per_tree < d) {
      rng.shuffle(std::span<std::size_t>(b.features));
      b.features.resize(cols_per_tree);
      std::sort(b.features.begin(), b.features.end());
    }
    std::vector<std::uint32_t> rows(n);
    std::iota(rows.begin(), rows.end(), 0u);
    if (rows_per_round < n) {
      rng.shuffle(std::span<std::uint32_t>(rows));
      rows.resize(rows_per_round);
      std::sort(rows.begin(), rows.end());
    }
    b.sample.resize(n);
    for (auto r : rows) {
      const double p = prob[r];
      b.sample[r] = Stats{p - static_cast<double>(y[r]), std::max(p * (1.0 - p), 1e-16), 1.0};
    }
    b.idx = std::move(rows);
    model.trees.push_back(b.build());
    const auto& tree = model.trees.back();
    for (std::size_t i = 0; i < n; ++i) {
      margin[i] += params.learning_rate * tree.predict(X.row(i));
      prob[i] = sigmoid(margin[i]);
    }
    model.training_loss.push_back(log_loss(y, prob));
  }
  return model;
}

EnsembleModel train(ModelKind kind, const Matrix& X, std::span<const int> y, const EnsembleParams& params,
                    std::vector<std::string> feature_schema) {
  return kind == ModelKind::random_forest ? train_random_forest(X, y, params, std::move(feature_schema))
                                          : train_gradient_boosted(X, y, params, std::move(feature_schema));
}

double predict_proba(const EnsembleModel& model, std::span<const double> x) {
  if (!model.trained()) throw StateError("model is not trained");
  if (x.size() != model.n_features())
    throw ShapeError("model expects " + std::to_string(model.n_features()) + " features, got " +
                     std::to_string(x.size()));
  if (model.kind == ModelKind::random_forest) {
    if (model.trees.empty()) return 0.5;
    double sum = 0.0;
    for (const auto& t : model.trees) sum += t.predict(x);
    return std::clamp(sum / static_cast<double>(model.trees.size()), 0.0, 1.0);
  }
  double score = 0.0;
  for (const auto& t : model.trees) score += t.predict(x);
  return sigmoid(model.base_score + model.params.learning_rate * score);
}

std::vector<double> predict_proba(const EnsembleModel& model, const Matrix& X) {
  std::vector<double> out(X.rows);
  for (std::size_t i = 0; i < X.rows; ++i) out[i] = predict_proba(model, X.row(i));
  return out;
}

std::vector<std::pair<std::string, double>> feature_importance(const EnsembleModel& model) {
  if (!model.trained()) throw StateError("feature importance requested on an untrained model");
  std::vector<double> imp(model.n_features(), 0.0);
  for (const auto& t : model.trees) {
    for (std::size_t i = 0; i < t.node_count(); ++i) {
      if (t.feature[i] >= 0) imp[static_cast<std::size_t>(t.feature[i])] += std::max(0.0, t.gain[i]);
    }
  }
  const double total = std::accumulate(imp.begin(), imp.end(), 0.0);
  std::vector<std::pair<std::string, double>> out;
  out.reserve(imp.size());
  for (std::size_t j = 0; j < imp.size(); ++j) {
    const double v = total > 0.0 ? imp[j] / total : 1.0 / static_cast<double>(imp.size());
    out.emplace_back(model.feature_schema[j], v);
  }
  return out;
}

namespace {

json tree_to_json(const DecisionTree& t) {
  return {{"feature", t.feature}, {"threshold", t.threshold}, {"left", t.left},
          {"right", t.right},     {"value", t.value},         {"gain", t.gain}};
}

DecisionTree tree_from_json(const json& j) {
  DecisionTree t;
  t.feature = j.at("feature").get<std::vector<std::int32_t>>();
  t.threshold = j.at("threshold").get<std::vector<double>>();
  t.left = j.at("left").get<std::vector<std::int32_t>>();
  t.right = j.at("right").get<std::vector<std::int32_t>>();
  t.value = j.at("value").get<std::vector<double>>();
  t.gain = j.at("gain").get<std::vector<double>>();
  return t;
}

constexpr const char* kFormatName = "clickbait-ensemble";

}  // namespace

json model_to_json(const EnsembleModel& model) {
  json trees = json::array();
  for (const auto& t : model.trees) trees.push_back(tree_to_json(t));
  json body{{"format", kFormatName},
            {"version", kModelFormatVersion},
            {"kind", to_string(model.kind)},
            {"params", model.params.to_json()},
            {"feature_schema", model.feature_schema},
            {"base_score", model.base_score},
            {"training_loss", model.training_loss},
            {"trees", std::move(trees)}};
  body["checksum"] = sha256_hex(body.dump());
  return body;
}

EnsembleModel model_from_json(const json& j) {
  if (!j.is_object() || !j.contains("version") || !j.contains("format"))
    throw IntegrityError("model file lacks a format header");
  if (j["format"] != kFormatName) throw IntegrityError("not a clickbait ensemble model file");
  if (!j["version"].is_number_integer() || j["version"].get<int>() != kModelFormatVersion)
    throw CompatibilityError("model format version " + j["version"].dump() + " is not supported (expected " +
                             std::to_string(kModelFormatVersion) + ")");
  if (!j.contains("checksum") || !j["checksum"].is_string()) throw IntegrityError("model file lacks a checksum");
  json body = j;
  body.erase("checksum");
  if (sha256_hex(body.dump()) != j["checksum"].get<std::string>()) throw IntegrityError("model checksum mismatch");
  EnsembleModel m;
  try {
    m.kind = parse_model_kind(j.at("kind").get<std::string>());
    m.params = EnsembleParams::from_json(j.at("params"));
    m.feature_schema = j.at("feature_schema").get<std::vector<std::string>>();
    m.base_score = j.at("base_score").get<double>();
    m.training_loss = j.at("training_loss").get<std::vector<double>>();
    for (const auto& t : j.at("trees")) m.trees.push_back(tree_from_json(t));
  } catch (const json::exception& e) {
    throw IntegrityError(std::string("malformed model file: ") + e.what());
  } catch (const DomainError& e) {
    throw IntegrityError(e.what());
  }
  if (m.feature_schema.empty()) throw IntegrityError("model has an empty feature schema");
  for (const auto& t : m.trees) t.validate(m.feature_schema.size());
  return m;
}

void save_model(const EnsembleModel& model, const std::filesystem::path& path) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error("cannot write model file " + path.string());
  out << model_to_json(model).dump() << '\n';
  if (!out) throw Error("failed writing model file " + path.string());
}

EnsembleModel load_model(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IntegrityError("cannot open model file " + path.string());
  std::stringstream ss;
  ss << in.rdbuf();
  json j;
  try {
    j = json::parse(ss.str());
  } catch (const json::parse_error& e) {
    throw IntegrityError(std::string("model file is not valid JSON: ") + e.what());
  }
  return model_from_json(j);
}

}  // namespace clickbait::ensemble
