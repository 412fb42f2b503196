// xlam -- cross-lingual argument mining toolkit
#include "core/tagger.h"

#include <algorithm>
#include <bit>
#include <charconv>
#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>

#include "core/error.h"
#include "core/eval.h"
#include "core/rng.h"

namespace xlam {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

std::string to_shortest(double value) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value);
  (void)ec;
  return std::string(buf, ptr);
}

}  // namespace

void validate_config(const FeatureConfig &config) {
  if (config.window < 0) {
    throw ValidationError("window radius must be nonnegative");
  }
  if (config.use_char) {
    if (config.char_buckets <= 0) {
      throw ValidationError("character feature bucket count must be positive");
    }
    if (config.char_orders.empty()) {
      throw ValidationError("character features enabled but no n-gram orders given");
    }
    std::vector<int> orders = config.char_orders;
    std::sort(orders.begin(), orders.end());
    for (size_t i = 0; i < orders.size(); ++i) {
      if (orders[i] <= 0) {
        throw ValidationError("character n-gram orders must be positive");
      }
      if (i > 0 && orders[i] == orders[i - 1]) {
        throw ValidationError("duplicate character n-gram order " + std::to_string(orders[i]));
      }
    }
  }
}

std::vector<uint32_t> char_gram_buckets(const std::string &token, const FeatureConfig &config) {
  std::vector<uint32_t> buckets;
  if (!config.use_char) {
    return buckets;
  }
  std::string padded = "^" + token + "$";
  for (int order : config.char_orders) {
    if (static_cast<size_t>(order) > padded.size()) continue;
    uint32_t order_le = static_cast<uint32_t>(order);
    unsigned char order_bytes[4] = {
        static_cast<unsigned char>(order_le & 0xff),
        static_cast<unsigned char>((order_le >> 8) & 0xff),
        static_cast<unsigned char>((order_le >> 16) & 0xff),
        static_cast<unsigned char>((order_le >> 24) & 0xff),
    };
    uint64_t basis = fnv1a64(order_bytes, sizeof(order_bytes));
    for (size_t i = 0; i + static_cast<size_t>(order) <= padded.size(); ++i) {
      uint64_t hash = fnv1a64(padded.data() + i, static_cast<size_t>(order), basis);
      buckets.push_back(static_cast<uint32_t>(hash % static_cast<uint64_t>(config.char_buckets)));
    }
  }
  return buckets;
}

FeatureVector featurize(const std::vector<std::string> &tokens, int position,
                        const EmbeddingTable &table, const FeatureConfig &config) {
  int dim = table.dim();
  FeatureVector fv;
  fv.dense.assign(static_cast<size_t>(2 * config.window + 1) * static_cast<size_t>(dim), 0.0);
  for (int offset = -config.window; offset <= config.window; ++offset) {
    int pos = position + offset;
    if (pos < 0 || pos >= static_cast<int>(tokens.size())) continue;
    if (!table.contains(tokens[static_cast<size_t>(pos)])) continue;
    const std::vector<double> &vec = table.vector_of(tokens[static_cast<size_t>(pos)]);
    size_t base = static_cast<size_t>(offset + config.window) * static_cast<size_t>(dim);
    std::copy(vec.begin(), vec.end(), fv.dense.begin() + static_cast<long>(base));
  }
  fv.char_buckets = char_gram_buckets(tokens[static_cast<size_t>(position)], config);
  return fv;
}

ViterbiResult viterbi_decode(const std::vector<std::vector<double>> &emissions,
                             const std::vector<std::vector<double>> &transition,
                             const std::vector<double> &start, const std::vector<double> &stop) {
  if (emissions.empty()) {
    throw ValidationError("cannot decode an empty sentence");
  }
  size_t num_labels = start.size();
  if (num_labels == 0 || stop.size() != num_labels || transition.size() != num_labels) {
    throw ValidationError("inconsistent score table shapes");
  }
  for (const std::vector<double> &row : transition) {
    if (row.size() != num_labels) {
      throw ValidationError("inconsistent score table shapes");
    }
  }
  size_t len = emissions.size();
  for (const std::vector<double> &row : emissions) {
    if (row.size() != num_labels) {
      throw ValidationError("emission row does not match label count");
    }
  }

  std::vector<std::vector<double>> delta(len, std::vector<double>(num_labels, kNegInf));
  std::vector<std::vector<int>> back(len, std::vector<int>(num_labels, -1));
  for (size_t y = 0; y < num_labels; ++y) {
    delta[0][y] = start[y] + emissions[0][y];
  }
  for (size_t t = 1; t < len; ++t) {
    for (size_t y = 0; y < num_labels; ++y) {
      double best = kNegInf;
      int best_from = -1;
      for (size_t x = 0; x < num_labels; ++x) {
        double cand = delta[t - 1][x] + transition[x][y];
        if (cand > best) {
          best = cand;
          best_from = static_cast<int>(x);
        }
      }
      delta[t][y] = best + emissions[t][y];
      back[t][y] = best_from;
    }
  }

  double best = kNegInf;
  int best_label = -1;
  for (size_t y = 0; y < num_labels; ++y) {
    double cand = delta[len - 1][y] + stop[y];
    if (cand > best) {
      best = cand;
      best_label = static_cast<int>(y);
    }
  }
  if (best_label < 0 || best == kNegInf) {
    throw ValidationError("every label path is banned");
  }

  ViterbiResult result;
  result.score = best;
  result.labels.assign(len, 0);
  result.labels[len - 1] = best_label;
  for (size_t t = len - 1; t > 0; --t) {
    result.labels[t - 1] = back[t][static_cast<size_t>(result.labels[t])];
  }
  return result;
}

TaggerModel::TaggerModel(LabelSpace space, FeatureConfig config, int emb_dim, bool bio_bans)
    : space_(std::move(space)), config_(std::move(config)), emb_dim_(emb_dim),
      bio_bans_(bio_bans) {
  validate_config(config_);
  if (emb_dim_ <= 0) {
    throw ValidationError("embedding dimension must be positive");
  }
  size_t labels = static_cast<size_t>(space_.num_labels());
  emission_.assign(labels, std::vector<double>(static_cast<size_t>(feature_dim()), 0.0));
  transition_.assign(labels, std::vector<double>(labels, 0.0));
  start_.assign(labels, 0.0);
  stop_.assign(labels, 0.0);
}

int TaggerModel::feature_dim() const {
  int dim = (2 * config_.window + 1) * emb_dim_;
  if (config_.use_char) {
    dim += config_.char_buckets;
  }
  return dim;
}

double TaggerModel::emission_score(int label, const FeatureVector &fv) const {
  const std::vector<double> &w = emission_[static_cast<size_t>(label)];
  double score = 0.0;
  for (size_t i = 0; i < fv.dense.size(); ++i) {
    score += w[i] * fv.dense[i];
  }
  size_t base = fv.dense.size();
  for (uint32_t bucket : fv.char_buckets) {
    score += w[base + bucket];
  }
  return score;
}

std::vector<std::vector<double>> TaggerModel::effective_transition() const {
  std::vector<std::vector<double>> eff = transition_;
  if (bio_bans_) {
    for (int to = 0; to < space_.num_labels(); ++to) {
      Label to_label = space_.label_from_id(to);
      if (to_label.kind != BioKind::kI) continue;
      for (int from = 0; from < space_.num_labels(); ++from) {
        Label from_label = space_.label_from_id(from);
        bool ok = !from_label.is_o() && from_label.type == to_label.type;
        if (!ok) {
          eff[static_cast<size_t>(from)][static_cast<size_t>(to)] = kNegInf;
        }
      }
    }
  }
  return eff;
}

std::vector<double> TaggerModel::effective_start() const {
  std::vector<double> eff = start_;
  if (bio_bans_) {
    for (int y = 0; y < space_.num_labels(); ++y) {
      if (space_.label_from_id(y).kind == BioKind::kI) {
        eff[static_cast<size_t>(y)] = kNegInf;
      }
    }
  }
  return eff;
}

std::vector<int> TaggerModel::decode(const std::vector<std::string> &tokens,
                                     const EmbeddingTable &table) const {
  if (table.dim() != emb_dim_) {
    throw ValidationError("embedding table dim " + std::to_string(table.dim()) +
                          " does not match model dim " + std::to_string(emb_dim_));
  }
  std::vector<std::vector<double>> emissions(tokens.size());
  for (size_t t = 0; t < tokens.size(); ++t) {
    FeatureVector fv = featurize(tokens, static_cast<int>(t), table, config_);
    emissions[t].resize(static_cast<size_t>(space_.num_labels()));
    for (int y = 0; y < space_.num_labels(); ++y) {
      emissions[t][static_cast<size_t>(y)] = emission_score(y, fv);
    }
  }
  return viterbi_decode(emissions, effective_transition(), effective_start(), stop_).labels;
}

bool TaggerModel::operator==(const TaggerModel &other) const {
  return space_ == other.space_ && config_.window == other.config_.window &&
         config_.use_char == other.config_.use_char &&
         config_.char_orders == other.config_.char_orders &&
         config_.char_buckets == other.config_.char_buckets && emb_dim_ == other.emb_dim_ &&
         bio_bans_ == other.bio_bans_ && emission_ == other.emission_ &&
         transition_ == other.transition_ && start_ == other.start_ && stop_ == other.stop_ &&
         seed == other.seed && epochs_run == other.epochs_run && best_epoch == other.best_epoch &&
         best_dev_f1 == other.best_dev_f1;
}

namespace {

struct Instance {
  std::vector<std::string> tokens;
  std::vector<int> gold;
  std::vector<FeatureVector> features;
};

std::vector<Instance> build_instances(const Corpus &corpus, const EmbeddingTable &table,
                                      const LabelSpace &space, const FeatureConfig &config) {
  std::vector<Instance> instances;
  for (const Document &doc : corpus.documents) {
    for (const Sentence &sentence : doc.sentences) {
      Instance inst;
      for (const Token &token : sentence.tokens) {
        inst.tokens.push_back(token.surface);
        inst.gold.push_back(space.label_id(token.label));
      }
      for (size_t t = 0; t < inst.tokens.size(); ++t) {
        inst.features.push_back(featurize(inst.tokens, static_cast<int>(t), table, config));
      }
      instances.push_back(std::move(inst));
    }
  }
  return instances;
}

// Averaged-perceptron bookkeeping: w is the live weight, u accumulates
// step-weighted deltas so the average is w - u/c without storing a history.
struct Weights {
  std::vector<std::vector<double>> emission;
  std::vector<std::vector<double>> transition;
  std::vector<double> start;
  std::vector<double> stop;

  explicit Weights(const TaggerModel &shape)
      : emission(shape.emission().size(),
                 std::vector<double>(shape.emission().empty() ? 0 : shape.emission()[0].size(),
                                     0.0)),
        transition(shape.transition().size(),
                   std::vector<double>(shape.transition().size(), 0.0)),
        start(shape.start().size(), 0.0),
        stop(shape.stop().size(), 0.0) {}
};

void bump_feature(std::vector<double> *w, std::vector<double> *u, const FeatureVector &fv,
                  double sign, double c) {
  for (size_t i = 0; i < fv.dense.size(); ++i) {
    (*w)[i] += sign * fv.dense[i];
    (*u)[i] += c * sign * fv.dense[i];
  }
  size_t base = fv.dense.size();
  for (uint32_t bucket : fv.char_buckets) {
    (*w)[base + bucket] += sign;
    (*u)[base + bucket] += c * sign;
  }
}

TaggerModel averaged_snapshot(const TaggerModel &live, const Weights &u, double c) {
  TaggerModel avg = live;
  for (size_t y = 0; y < avg.emission().size(); ++y) {
    for (size_t i = 0; i < avg.emission()[y].size(); ++i) {
      avg.emission()[y][i] -= u.emission[y][i] / c;
    }
  }
  for (size_t x = 0; x < avg.transition().size(); ++x) {
    for (size_t y = 0; y < avg.transition()[x].size(); ++y) {
      avg.transition()[x][y] -= u.transition[x][y] / c;
    }
  }
  for (size_t y = 0; y < avg.start().size(); ++y) {
    avg.start()[y] -= u.start[y] / c;
    avg.stop()[y] -= u.stop[y] / c;
  }
  return avg;
}

std::vector<int> decode_instance(const TaggerModel &model, const Instance &inst) {
  std::vector<std::vector<double>> emissions(inst.features.size());
  for (size_t t = 0; t < inst.features.size(); ++t) {
    emissions[t].resize(static_cast<size_t>(model.space().num_labels()));
    for (int y = 0; y < model.space().num_labels(); ++y) {
      emissions[t][static_cast<size_t>(y)] = model.emission_score(y, inst.features[t]);
    }
  }
  return viterbi_decode(emissions, model.effective_transition(), model.effective_start(),
                        model.stop())
      .labels;
}

double dev_macro_f1(const TaggerModel &model, const std::vector<Instance> &dev,
                    const LabelSpace &space) {
  std::vector<std::vector<int>> gold;
  std::vector<std::vector<int>> pred;
  for (const Instance &inst : dev) {
    gold.push_back(inst.gold);
    pred.push_back(decode_instance(model, inst));
  }
  return evaluate_rows(gold, pred, space, LabelSetMode::kUnion).macro_f1;
}

}  // namespace

TaggerModel train_tagger(const Corpus &train, const Corpus &dev, const EmbeddingTable &table,
                         const LabelSpace &space, const FeatureConfig &config,
                         const TrainOptions &options) {
  validate_config(config);
  if (train.num_sentences() == 0) {
    throw ValidationError("training corpus is empty");
  }
  if (table.dim() <= 0) {
    throw ValidationError("embedding table is empty");
  }
  if (options.epochs < 0 || options.patience < 0) {
    throw ValidationError("epochs and patience must be nonnegative");
  }

  std::vector<Instance> train_instances = build_instances(train, table, space, config);
  std::vector<Instance> dev_instances = build_instances(dev, table, space, config);

  TaggerModel live(space, config, table.dim(), options.bio_bans);
  live.seed = options.seed;
  Weights accum(live);
  double c = 1.0;
  Rng rng(options.seed);

  TaggerModel best = live;  // epochs == 0 falls through to the zero model
  double best_f1 = -1.0;
  int best_epoch = 0;
  int since_best = 0;
  int epoch = 0;

  std::vector<size_t> order(train_instances.size());
  for (size_t i = 0; i < order.size(); ++i) order[i] = i;

  while (epoch < options.epochs) {
    ++epoch;
    rng.shuffle(&order);
    long updates = 0;
    for (size_t idx : order) {
      const Instance &inst = train_instances[idx];
      std::vector<int> pred = decode_instance(live, inst);
      if (pred != inst.gold) {
        ++updates;
        for (size_t t = 0; t < inst.gold.size(); ++t) {
          int g = inst.gold[t];
          int p = pred[t];
          if (g == p) continue;
          bump_feature(&live.emission()[static_cast<size_t>(g)],
                       &accum.emission[static_cast<size_t>(g)], inst.features[t], 1.0, c);
          bump_feature(&live.emission()[static_cast<size_t>(p)],
                       &accum.emission[static_cast<size_t>(p)], inst.features[t], -1.0, c);
        }
        for (size_t t = 1; t < inst.gold.size(); ++t) {
          size_t gf = static_cast<size_t>(inst.gold[t - 1]);
          size_t gt = static_cast<size_t>(inst.gold[t]);
          size_t pf = static_cast<size_t>(pred[t - 1]);
          size_t pt = static_cast<size_t>(pred[t]);
          live.transition()[gf][gt] += 1.0;
          accum.transition[gf][gt] += c;
          live.transition()[pf][pt] -= 1.0;
          accum.transition[pf][pt] -= c;
        }
        size_t g0 = static_cast<size_t>(inst.gold.front());
        size_t p0 = static_cast<size_t>(pred.front());
        size_t gl = static_cast<size_t>(inst.gold.back());
        size_t pl = static_cast<size_t>(pred.back());
        live.start()[g0] += 1.0;
        accum.start[g0] += c;
        live.start()[p0] -= 1.0;
        accum.start[p0] -= c;
        live.stop()[gl] += 1.0;
        accum.stop[gl] += c;
        live.stop()[pl] -= 1.0;
        accum.stop[pl] -= c;
      }
      c += 1.0;
    }

    TaggerModel averaged = averaged_snapshot(live, accum, c);
    averaged.epochs_run = epoch;
    if (dev_instances.empty()) {
      best = averaged;
      best_epoch = epoch;
      if (options.log != nullptr) {
        (*options.log) << "epoch=" << epoch << " updates=" << updates << '\n';
      }
      continue;
    }
    double f1 = dev_macro_f1(averaged, dev_instances, space);
    if (options.log != nullptr) {
      (*options.log) << "epoch=" << epoch << " dev_macro_f1=" << to_shortest(f1)
                     << " updates=" << updates << '\n';
    }
    if (f1 > best_f1) {
      best_f1 = f1;
      best = averaged;
      best_epoch = epoch;
      since_best = 0;
    } else {
      ++since_best;
      if (since_best >= options.patience) {
        break;
      }
    }
  }

  best.seed = options.seed;
  best.epochs_run = epoch;
  best.best_epoch = best_epoch;
  best.best_dev_f1 = best_f1 < 0.0 ? 0.0 : best_f1;
  return best;
}

Corpus predict(const TaggerModel &model, const EmbeddingTable &table, const TokenCorpus &tokens) {
  std::vector<std::vector<Label>> rows;
  rows.reserve(tokens.sentences.size());
  for (const std::vector<std::string> &sentence : tokens.sentences) {
    std::vector<int> ids = model.decode(sentence, table);
    std::vector<Label> row(ids.size());
    for (size_t i = 0; i < ids.size(); ++i) {
      row[i] = model.space().label_from_id(ids[i]);
    }
    rows.push_back(std::move(row));
  }
  return corpus_from_labels(tokens, rows, model.space());
}

Corpus predict(const TaggerModel &model, const EmbeddingTable &table, const Corpus &corpus) {
  return predict(model, table, tokens_of(corpus));
}

// --- persistence ---

namespace {

constexpr char kMagic[8] = {'x', 'l', 'a', 'm', '.', 'm', 'd', 'l'};
constexpr uint32_t kVersion = 1;

void put_u8(std::ostream &out, uint8_t v) { out.put(static_cast<char>(v)); }

void put_u32(std::ostream &out, uint32_t v) {
  for (int i = 0; i < 4; ++i) out.put(static_cast<char>((v >> (8 * i)) & 0xff));
}

void put_u64(std::ostream &out, uint64_t v) {
  for (int i = 0; i < 8; ++i) out.put(static_cast<char>((v >> (8 * i)) & 0xff));
}

void put_i32(std::ostream &out, int32_t v) { put_u32(out, static_cast<uint32_t>(v)); }

void put_f64(std::ostream &out, double v) { put_u64(out, std::bit_cast<uint64_t>(v)); }

void put_str(std::ostream &out, const std::string &s) {
  put_u32(out, static_cast<uint32_t>(s.size()));
  out.write(s.data(), static_cast<long>(s.size()));
}

uint8_t get_u8(std::istream &in) {
  int c = in.get();
  if (c == EOF) throw ParseError("truncated model file");
  return static_cast<uint8_t>(c);
}

uint32_t get_u32(std::istream &in) {
  uint32_t v = 0;
  for (int i = 0; i < 4; ++i) v |= static_cast<uint32_t>(get_u8(in)) << (8 * i);
  return v;
}

uint64_t get_u64(std::istream &in) {
  uint64_t v = 0;
  for (int i = 0; i < 8; ++i) v |= static_cast<uint64_t>(get_u8(in)) << (8 * i);
  return v;
}

int32_t get_i32(std::istream &in) { return static_cast<int32_t>(get_u32(in)); }

double get_f64(std::istream &in) { return std::bit_cast<double>(get_u64(in)); }

std::string get_str(std::istream &in) {
  uint32_t len = get_u32(in);
  if (len > (1u << 20)) throw ParseError("unreasonable string length in model file");
  std::string s(len, '\0');
  in.read(s.data(), static_cast<long>(len));
  if (in.gcount() != static_cast<long>(len)) throw ParseError("truncated model file");
  return s;
}

}  // namespace

void save_model(const TaggerModel &model, std::ostream &out) {
  out.write(kMagic, sizeof(kMagic));
  put_u32(out, kVersion);
  const LabelSpace &space = model.space();
  put_u32(out, static_cast<uint32_t>(space.num_types()));
  for (const std::string &type : space.component_types()) put_str(out, type);
  const FeatureConfig &config = model.config();
  put_i32(out, config.window);
  put_u8(out, config.use_char ? 1 : 0);
  put_u32(out, static_cast<uint32_t>(config.char_orders.size()));
  for (int order : config.char_orders) put_i32(out, order);
  put_i32(out, config.char_buckets);
  put_i32(out, model.emb_dim());
  put_u8(out, model.bio_bans() ? 1 : 0);
  put_u64(out, model.seed);
  put_i32(out, model.epochs_run);
  put_i32(out, model.best_epoch);
  put_f64(out, model.best_dev_f1);
  put_u32(out, static_cast<uint32_t>(space.num_labels()));
  put_u32(out, static_cast<uint32_t>(model.feature_dim()));
  for (const std::vector<double> &row : model.emission()) {
    for (double v : row) put_f64(out, v);
  }
  for (const std::vector<double> &row : model.transition()) {
    for (double v : row) put_f64(out, v);
  }
  for (double v : model.start()) put_f64(out, v);
  for (double v : model.stop()) put_f64(out, v);
}

void save_model_file(const TaggerModel &model, const std::string &path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw IoError("cannot open '" + path + "' for writing");
  }
  save_model(model, out);
  if (!out.good()) {
    throw IoError("failed writing '" + path + "'");
  }
}

TaggerModel load_model(std::istream &in) {
  char magic[8];
  in.read(magic, sizeof(magic));
  if (in.gcount() != sizeof(magic) || !std::equal(magic, magic + 8, kMagic)) {
    throw ParseError("not a model file (bad magic)");
  }
  uint32_t version = get_u32(in);
  if (version != kVersion) {
    throw ParseError("unsupported model version " + std::to_string(version));
  }
  uint32_t num_types = get_u32(in);
  if (num_types > 1024) throw ParseError("unreasonable type count in model file");
  std::vector<std::string> types;
  for (uint32_t i = 0; i < num_types; ++i) types.push_back(get_str(in));
  FeatureConfig config;
  config.window = get_i32(in);
  config.use_char = get_u8(in) != 0;
  uint32_t num_orders = get_u32(in);
  if (num_orders > 64) throw ParseError("unreasonable order count in model file");
  config.char_orders.clear();
  for (uint32_t i = 0; i < num_orders; ++i) config.char_orders.push_back(get_i32(in));
  config.char_buckets = get_i32(in);
  int emb_dim = get_i32(in);
  bool bio_bans = get_u8(in) != 0;
  uint64_t seed = get_u64(in);
  int epochs_run = get_i32(in);
  int best_epoch = get_i32(in);
  double best_dev_f1 = get_f64(in);

  TaggerModel model;
  try {
    model = TaggerModel(LabelSpace(types), config, emb_dim, bio_bans);
  } catch (const ValidationError &err) {
    throw ParseError(std::string("model file is internally inconsistent: ") + err.what());
  }
  model.seed = seed;
  model.epochs_run = epochs_run;
  model.best_epoch = best_epoch;
  model.best_dev_f1 = best_dev_f1;

  uint32_t num_labels = get_u32(in);
  uint32_t feature_dim = get_u32(in);
  if (num_labels != static_cast<uint32_t>(model.space().num_labels()) ||
      feature_dim != static_cast<uint32_t>(model.feature_dim())) {
    throw ParseError("model file is internally inconsistent: dimension mismatch");
  }
  for (std::vector<double> &row : model.emission()) {
    for (double &v : row) v = get_f64(in);
  }
  for (std::vector<double> &row : model.transition()) {
    for (double &v : row) v = get_f64(in);
  }
  for (double &v : model.start()) v = get_f64(in);
  for (double &v : model.stop()) v = get_f64(in);
  if (in.peek() != EOF) {
    throw ParseError("trailing bytes after model payload");
  }
  return model;
}

TaggerModel load_model_file(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw IoError("cannot open '" + path + "' for reading");
  }
  try {
    return load_model(in);
  } catch (const ParseError &err) {
    throw ParseError(path + ": " + err.what());
  }
}

std::string model_text(const TaggerModel &model) {
  std::ostringstream out;
  const LabelSpace &space = model.space();
  out << "types=";
  for (int t = 0; t < space.num_types(); ++t) {
    if (t > 0) out << ',';
    out << space.type_name(t);
  }
  out << '\n';
  out << "window=" << model.config().window << '\n';
  out << "use_char=" << (model.config().use_char ? 1 : 0) << '\n';
  out << "char_orders=";
  for (size_t i = 0; i < model.config().char_orders.size(); ++i) {
    if (i > 0) out << ',';
    out << model.config().char_orders[i];
  }
  out << '\n';
  out << "char_buckets=" << model.config().char_buckets << '\n';
  out << "emb_dim=" << model.emb_dim() << '\n';
  out << "bio_bans=" << (model.bio_bans() ? 1 : 0) << '\n';
  out << "seed=" << model.seed << '\n';
  out << "epochs_run=" << model.epochs_run << '\n';
  out << "best_epoch=" << model.best_epoch << '\n';
  out << "best_dev_f1=" << to_shortest(model.best_dev_f1) << '\n';
  for (int y = 0; y < space.num_labels(); ++y) {
    out << "emission." << space.label_name_from_id(y) << '=';
    const std::vector<double> &row = model.emission()[static_cast<size_t>(y)];
    for (size_t i = 0; i < row.size(); ++i) {
      if (i > 0) out << ',';
      out << to_shortest(row[i]);
    }
    out << '\n';
  }
  for (int x = 0; x < space.num_labels(); ++x) {
    out << "transition." << space.label_name_from_id(x) << '=';
    const std::vector<double> &row = model.transition()[static_cast<size_t>(x)];
    for (size_t y = 0; y < row.size(); ++y) {
      if (y > 0) out << ',';
      out << to_shortest(row[y]);
    }
    out << '\n';
  }
  out << "start=";
  for (size_t y = 0; y < model.start().size(); ++y) {
    if (y > 0) out << ',';
    out << to_shortest(model.start()[y]);
  }
  out << '\n';
  out << "stop=";
  for (size_t y = 0; y < model.stop().size(); ++y) {
    if (y > 0) out << ',';
    out << to_shortest(model.stop()[y]);
  }
  out << '\n';
  return out.str();
}

}  // namespace xlam
