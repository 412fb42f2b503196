// xlam -- cross-lingual argument mining toolkit
#include "core/synth.h"

#include <algorithm>
#include <cstdio>
#include <string>

#include "core/error.h"
#include "core/rng.h"

namespace xlam {

namespace {

// One movable unit: a component (type >= 0) or a single O token (type -1).
struct Segment {
  int type = -1;
  std::vector<long> words;  // word ids
  std::vector<long> origin; // source token indices, filled after layout
};

std::string doc_name(int index) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "synth-%04d", index + 1);
  return buf;
}

// Word ids of label class c are {c, c + L, c + 2L, ...}.
long sample_class_word(Rng *rng, long vocab, int label_class, int num_labels) {
  long count = (vocab - label_class + num_labels - 1) / num_labels;
  return label_class + num_labels * static_cast<long>(rng->next_below(static_cast<uint64_t>(count)));
}

}  // namespace

void validate_synth_config(const SynthConfig &config, const LabelSpace &space) {
  if (config.documents < 1 || config.sentences_per_doc < 1) {
    throw ValidationError("document and sentence counts must be positive");
  }
  if (config.min_len < 1 || config.max_len < config.min_len) {
    throw ValidationError("length bounds must satisfy 1 <= min <= max");
  }
  if (static_cast<int>(config.type_probs.size()) != space.num_types()) {
    throw ValidationError("need one placement probability per component type (" +
                          std::to_string(space.num_types()) + ")");
  }
  for (double p : config.type_probs) {
    if (p < 0.0 || p > 1.0) {
      throw ValidationError("placement probabilities must lie in [0,1]");
    }
  }
  if (config.noise < 0.0 || config.noise > 1.0) {
    throw ValidationError("noise rate must lie in [0,1]");
  }
  if (config.vocab_size < space.num_labels()) {
    throw ValidationError("vocabulary must cover all " + std::to_string(space.num_labels()) +
                          " label classes");
  }
  if (config.swaps < 0) {
    throw ValidationError("swap count must be nonnegative");
  }
  if (config.emb_dim < space.num_labels()) {
    throw ValidationError("embedding dim must be at least the label count (" +
                          std::to_string(space.num_labels()) + ")");
  }
}

SynthResult generate_bitext(const SynthConfig &config, const LabelSpace &space) {
  validate_synth_config(config, space);
  Rng rng(config.seed);
  int num_labels = space.num_labels();

  SynthResult result;
  result.source.label_space = space;
  result.gold_target.label_space = space;
  for (int d = 0; d < config.documents; ++d) {
    Document src_doc;
    Document gold_doc;
    src_doc.id = doc_name(d);
    gold_doc.id = src_doc.id;
    for (int s = 0; s < config.sentences_per_doc; ++s) {
      long len = rng.next_int(config.min_len, config.max_len);

      // Lay out segments: optional component per type, then O fillers.
      std::vector<Segment> segments;
      long avail = len;
      for (int t = 0; t < space.num_types(); ++t) {
        if (avail == 0) break;
        if (rng.next_unit() >= config.type_probs[static_cast<size_t>(t)]) continue;
        long want = rng.next_int(1, 3);
        long clen = std::min(want, avail);
        Segment seg;
        seg.type = t;
        for (long i = 0; i < clen; ++i) {
          int label_class = space.label_id(i == 0 ? Label::B(t) : Label::I(t));
          seg.words.push_back(sample_class_word(&rng, config.vocab_size, label_class, num_labels));
        }
        segments.push_back(std::move(seg));
        avail -= clen;
      }
      for (long i = 0; i < avail; ++i) {
        Segment seg;
        seg.words.push_back(sample_class_word(&rng, config.vocab_size, space.o_id(), num_labels));
        segments.push_back(std::move(seg));
      }
      rng.shuffle(&segments);

      // Source sentence + source indices per segment.
      Sentence src_sentence;
      long index = 0;
      for (Segment &seg : segments) {
        for (size_t i = 0; i < seg.words.size(); ++i) {
          Label label = seg.type < 0 ? Label::O()
                                     : (i == 0 ? Label::B(seg.type) : Label::I(seg.type));
          src_sentence.tokens.push_back(Token{"s" + std::to_string(seg.words[i]), label});
          seg.origin.push_back(index++);
        }
      }

      // Target order: adjacent swaps over the segment list.
      if (segments.size() >= 2 && config.swaps > 0) {
        for (int k = 0; k < config.swaps; ++k) {
          size_t at = static_cast<size_t>(rng.next_below(segments.size() - 1));
          std::swap(segments[at], segments[at + 1]);
        }
      }

      Sentence gold_sentence;
      SentenceAlignment alignment;
      alignment.source_len = static_cast<int>(len);
      alignment.target_len = static_cast<int>(len);
      long target_index = 0;
      for (const Segment &seg : segments) {
        for (size_t i = 0; i < seg.words.size(); ++i) {
          Label label = seg.type < 0 ? Label::O()
                                     : (i == 0 ? Label::B(seg.type) : Label::I(seg.type));
          gold_sentence.tokens.push_back(Token{"t" + std::to_string(seg.words[i]), label});
          bool keep = config.noise == 0.0 || rng.next_unit() >= config.noise;
          if (keep) {
            alignment.links.push_back(AlignmentLink{static_cast<int>(seg.origin[i]),
                                                    static_cast<int>(target_index)});
          }
          ++target_index;
        }
      }
      std::sort(alignment.links.begin(), alignment.links.end());

      src_doc.sentences.push_back(std::move(src_sentence));
      gold_doc.sentences.push_back(std::move(gold_sentence));
      result.alignment.sentences.push_back(std::move(alignment));
    }
    result.source.documents.push_back(std::move(src_doc));
    result.gold_target.documents.push_back(std::move(gold_doc));
  }
  result.target_tokens = tokens_of(result.gold_target);
  return result;
}

EmbeddingTable synth_embeddings(const SynthConfig &config, const LabelSpace &space) {
  validate_synth_config(config, space);
  // Separate stream so corpus and vectors can be regenerated independently.
  Rng rng(config.seed ^ 0x9e3779b97f4a7c15ull);
  int num_labels = space.num_labels();
  EmbeddingTable table(config.emb_dim);
  for (long w = 0; w < config.vocab_size; ++w) {
    std::vector<double> vec(static_cast<size_t>(config.emb_dim));
    for (double &x : vec) {
      x = 0.1 * rng.next_gaussian();
    }
    vec[static_cast<size_t>(w % num_labels)] += 1.0;
    table.add("s" + std::to_string(w), vec);
    table.add("t" + std::to_string(w), std::move(vec));
  }
  return table;
}

}  // namespace xlam
