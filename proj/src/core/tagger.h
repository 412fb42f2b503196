// xlam -- cross-lingual argument mining toolkit
//
// Transition-structured sequence tagger: a linear per-token scorer over
// window embeddings and hashed character n-grams, a label-transition matrix
// with start/stop scores, exact Viterbi decoding, and averaged
// structured-perceptron training with dev-based early stopping.
//
// Feature layout for a token at position p with window radius r and
// embedding dim d: (2r+1) dense blocks of d values (positions p-r..p+r,
// zero-filled for out-of-vocabulary or out-of-sentence), then, when character
// features are on, a bucket space of counts. Character n-grams are taken
// over the token padded with single '^'/'$' boundary markers; a gram of
// order n hashes as FNV-1a over its bytes seeded with the order, modulo the
// bucket count.
//
// BIO transition bans (on by default) forbid starting at I-t and entering
// I-t from anything but B-t/I-t, so decoded sequences are always valid BIO.
// Argmax ties break toward the lowest label id.
#ifndef XLAM_CORE_TAGGER_H_
#define XLAM_CORE_TAGGER_H_

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "core/conll.h"
#include "core/corpus.h"
#include "core/embeddings.h"
#include "core/label.h"

namespace xlam {

struct FeatureConfig {
  int window = 1;  // radius; 0 = token embedding only
  bool use_char = true;
  std::vector<int> char_orders = {2, 3};
  int char_buckets = 4096;
};

// Throws ValidationError on negative window, nonpositive orders or bucket
// count (when enabled), or duplicate orders.
void validate_config(const FeatureConfig &config);

struct FeatureVector {
  std::vector<double> dense;           // (2r+1) * dim values
  std::vector<uint32_t> char_buckets;  // active buckets, one entry per occurrence
};

FeatureVector featurize(const std::vector<std::string> &tokens, int position,
                        const EmbeddingTable &table, const FeatureConfig &config);

// Bucket indices for one token (order-hashed, modulo bucket count).
std::vector<uint32_t> char_gram_buckets(const std::string &token, const FeatureConfig &config);

struct ViterbiResult {
  std::vector<int> labels;
  double score = 0.0;
};

// emissions[t][y]; transition[from][to]; -inf entries ban moves. Throws
// ValidationError on an empty sentence or when every path is banned.
ViterbiResult viterbi_decode(const std::vector<std::vector<double>> &emissions,
                             const std::vector<std::vector<double>> &transition,
                             const std::vector<double> &start, const std::vector<double> &stop);

class TaggerModel {
 public:
  TaggerModel() = default;
  // Zero-weight model (decodes to the tie-break label everywhere).
  TaggerModel(LabelSpace space, FeatureConfig config, int emb_dim, bool bio_bans);

  const LabelSpace &space() const { return space_; }
  const FeatureConfig &config() const { return config_; }
  int emb_dim() const { return emb_dim_; }
  int feature_dim() const;
  bool bio_bans() const { return bio_bans_; }

  std::vector<std::vector<double>> &emission() { return emission_; }
  const std::vector<std::vector<double>> &emission() const { return emission_; }
  std::vector<std::vector<double>> &transition() { return transition_; }
  const std::vector<std::vector<double>> &transition() const { return transition_; }
  std::vector<double> &start() { return start_; }
  const std::vector<double> &start() const { return start_; }
  std::vector<double> &stop() { return stop_; }
  const std::vector<double> &stop() const { return stop_; }

  uint64_t seed = 0;
  int epochs_run = 0;
  int best_epoch = 0;
  double best_dev_f1 = 0.0;

  double emission_score(int label, const FeatureVector &fv) const;
  // Transition tables with bans applied (when enabled).
  std::vector<std::vector<double>> effective_transition() const;
  std::vector<double> effective_start() const;

  // Label ids for one sentence. Table dim must match emb_dim.
  std::vector<int> decode(const std::vector<std::string> &tokens,
                          const EmbeddingTable &table) const;

  bool operator==(const TaggerModel &other) const;

 private:
  LabelSpace space_;
  FeatureConfig config_;
  int emb_dim_ = 0;
  bool bio_bans_ = true;
  std::vector<std::vector<double>> emission_;    // [label][feature_dim]
  std::vector<std::vector<double>> transition_;  // [from][to]
  std::vector<double> start_;
  std::vector<double> stop_;
};

struct TrainOptions {
  int epochs = 50;
  int patience = 10;
  uint64_t seed = 1;
  bool bio_bans = true;
  std::ostream *log = nullptr;  // "epoch=N dev_macro_f1=V updates=U" lines
};

// Averaged structured perceptron against Viterbi predictions. Dev macro-F1
// (union label set) drives early stopping: training stops after `patience`
// epochs without strict improvement and the averaged weights of the best
// epoch are returned. An empty dev corpus disables early stopping. Throws
// ValidationError on an empty train corpus or a table/config mismatch.
TaggerModel train_tagger(const Corpus &train, const Corpus &dev, const EmbeddingTable &table,
                         const LabelSpace &space, const FeatureConfig &config,
                         const TrainOptions &options);

// Labels every sentence; document structure and tokens pass through.
Corpus predict(const TaggerModel &model, const EmbeddingTable &table, const TokenCorpus &tokens);
Corpus predict(const TaggerModel &model, const EmbeddingTable &table, const Corpus &corpus);

// Versioned little-endian binary container.
void save_model(const TaggerModel &model, std::ostream &out);
void save_model_file(const TaggerModel &model, const std::string &path);
TaggerModel load_model(std::istream &in);
TaggerModel load_model_file(const std::string &path);

// Lossless line-oriented dump (shortest round-trip floats) for diffing.
std::string model_text(const TaggerModel &model);

}  // namespace xlam

#endif  // XLAM_CORE_TAGGER_H_
