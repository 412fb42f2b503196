// xlam -- cross-lingual argument mining toolkit
//
// Synthetic parallel corpora with exact ground truth. Two pseudo-languages
// share a word inventory: source word k is "s<k>", its target twin "t<k>".
// Word identity determines the label (word ids are partitioned by label id
// modulo the label count), source sentences are built from component and O
// segments in seeded random order, and the target side applies adjacent
// segment swaps so components move as units. The true token bijection, minus
// noise-dropped links, becomes the alignment, so projection quality can be
// checked against constructed gold labels. A companion embedding table maps
// both twins of word k to one class-anchored vector, giving a perfect shared
// bilingual space for transfer experiments.
#ifndef XLAM_CORE_SYNTH_H_
#define XLAM_CORE_SYNTH_H_

#include <cstdint>
#include <vector>

#include "core/alignment.h"
#include "core/conll.h"
#include "core/corpus.h"
#include "core/embeddings.h"
#include "core/label.h"

namespace xlam {

struct SynthConfig {
  int documents = 20;
  int sentences_per_doc = 10;
  int min_len = 5;
  int max_len = 12;
  // Per type, the probability a sentence hosts a component of that type.
  std::vector<double> type_probs = {0.25, 0.35, 0.5};
  long vocab_size = 200;  // per pseudo-language; must cover every label class
  int swaps = 1;          // adjacent segment swaps applied to the target side
  double noise = 0.0;     // fraction of alignment links dropped
  int emb_dim = 16;       // must be >= the label count for class separability
  uint64_t seed = 1;
};

struct SynthResult {
  Corpus source;             // labeled pseudo-L1
  TokenCorpus target_tokens; // pseudo-L2 surface only
  BitextAlignment alignment; // true bijection minus dropped links
  Corpus gold_target;        // pseudo-L2 with moved gold labels
};

// Throws ValidationError on out-of-range config fields.
void validate_synth_config(const SynthConfig &config, const LabelSpace &space);

SynthResult generate_bitext(const SynthConfig &config, const LabelSpace &space);

// Both "s<k>" and "t<k>" map to the same vector: a unit basis on the word's
// label-class axis plus small word-specific jitter (drawn from a stream
// derived from the seed).
EmbeddingTable synth_embeddings(const SynthConfig &config, const LabelSpace &space);

}  // namespace xlam

#endif  // XLAM_CORE_SYNTH_H_
