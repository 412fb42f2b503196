#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "core/corpus.h"
#include "core/error.h"
#include "core/projection.h"
#include "core/synth.h"

using namespace xlam;

namespace {

const LabelSpace &essay() {
  static LabelSpace space = LabelSpace::essay_types();
  return space;
}

SynthConfig small_config() {
  SynthConfig config;
  config.documents = 3;
  config.sentences_per_doc = 4;
  config.min_len = 5;
  config.max_len = 9;
  config.vocab_size = 40;
  config.emb_dim = 8;
  config.seed = 11;
  return config;
}

long word_id(const std::string &surface) { return std::stol(surface.substr(1)); }

}  // namespace

TEST_SUITE("synth") {

TEST_CASE("config validation") {
  CHECK_NOTHROW(validate_synth_config(SynthConfig{}, essay()));
  SynthConfig config = small_config();
  config.documents = 0;
  CHECK_THROWS_AS(validate_synth_config(config, essay()), ValidationError);
  config = small_config();
  config.max_len = config.min_len - 1;
  CHECK_THROWS_AS(validate_synth_config(config, essay()), ValidationError);
  config = small_config();
  config.type_probs = {0.5, 0.5};
  CHECK_THROWS_AS(validate_synth_config(config, essay()), ValidationError);
  config = small_config();
  config.type_probs = {0.5, 1.5, 0.5};
  CHECK_THROWS_AS(validate_synth_config(config, essay()), ValidationError);
  config = small_config();
  config.noise = -0.1;
  CHECK_THROWS_AS(validate_synth_config(config, essay()), ValidationError);
  config = small_config();
  config.vocab_size = 6;  // seven label classes need seven words
  CHECK_THROWS_AS(validate_synth_config(config, essay()), ValidationError);
  config = small_config();
  config.swaps = -1;
  CHECK_THROWS_AS(validate_synth_config(config, essay()), ValidationError);
  config = small_config();
  config.emb_dim = 6;
  CHECK_THROWS_AS(validate_synth_config(config, essay()), ValidationError);
}

TEST_CASE("generated shapes follow the config") {
  SynthConfig config = small_config();
  SynthResult result = generate_bitext(config, essay());
  REQUIRE(result.source.num_documents() == 3);
  CHECK(result.source.documents[0].id == "synth-0001");
  CHECK(result.source.documents[2].id == "synth-0003");
  CHECK(result.source.num_sentences() == 12);
  CHECK(result.gold_target.num_sentences() == 12);
  CHECK(result.alignment.num_sentences() == 12);
  CHECK(result.target_tokens.num_sentences() == 12);
  for (size_t d = 0; d < result.source.documents.size(); ++d) {
    const Document &src_doc = result.source.documents[d];
    const Document &gold_doc = result.gold_target.documents[d];
    CHECK(src_doc.id == gold_doc.id);
    CHECK(src_doc.sentences.size() == 4);
    for (size_t s = 0; s < src_doc.sentences.size(); ++s) {
      int len = src_doc.sentences[s].size();
      CHECK(len >= 5);
      CHECK(len <= 9);
      CHECK(gold_doc.sentences[s].size() == len);
    }
  }
  for (size_t s = 0; s < result.alignment.sentences.size(); ++s) {
    CHECK(result.alignment.sentences[s].source_len ==
          static_cast<int>(result.target_tokens.sentences[s].size()));
    CHECK(result.alignment.sentences[s].source_len == result.alignment.sentences[s].target_len);
  }
}

TEST_CASE("same seed reproduces the corpus exactly") {
  SynthConfig config = small_config();
  SynthResult a = generate_bitext(config, essay());
  SynthResult b = generate_bitext(config, essay());
  CHECK(a.source == b.source);
  CHECK(a.gold_target == b.gold_target);
  for (size_t s = 0; s < a.alignment.sentences.size(); ++s) {
    CHECK(a.alignment.sentences[s].links == b.alignment.sentences[s].links);
  }
  config.seed = 12;
  SynthResult c = generate_bitext(config, essay());
  CHECK(a.source != c.source);
}

TEST_CASE("word identity determines the label on both sides") {
  SynthResult result = generate_bitext(small_config(), essay());
  for (const Corpus *corpus : {&result.source, &result.gold_target}) {
    const char prefix = corpus == &result.source ? 's' : 't';
    for (const Document &doc : corpus->documents) {
      for (const Sentence &sentence : doc.sentences) {
        CHECK(validate_bio(sentence).valid);
        for (const Token &token : sentence.tokens) {
          REQUIRE(token.surface[0] == prefix);
          CHECK(word_id(token.surface) % essay().num_labels() ==
                essay().label_id(token.label));
        }
      }
    }
  }
}

TEST_CASE("target is a segment permutation of the source") {
  SynthConfig config = small_config();
  config.swaps = 3;
  SynthResult result = generate_bitext(config, essay());
  for (size_t d = 0; d < result.source.documents.size(); ++d) {
    for (size_t s = 0; s < result.source.documents[d].sentences.size(); ++s) {
      std::vector<long> src_words;
      std::vector<long> tgt_words;
      for (const Token &t : result.source.documents[d].sentences[s].tokens) {
        src_words.push_back(word_id(t.surface));
      }
      for (const Token &t : result.gold_target.documents[d].sentences[s].tokens) {
        tgt_words.push_back(word_id(t.surface));
      }
      std::sort(src_words.begin(), src_words.end());
      std::sort(tgt_words.begin(), tgt_words.end());
      CHECK(src_words == tgt_words);
    }
  }
}

TEST_CASE("zero swaps yield the identity alignment and mirrored labels") {
  SynthConfig config = small_config();
  config.swaps = 0;
  SynthResult result = generate_bitext(config, essay());
  for (size_t s = 0; s < result.alignment.sentences.size(); ++s) {
    const SentenceAlignment &alignment = result.alignment.sentences[s];
    CHECK(alignment.links == SentenceAlignment::identity(alignment.source_len).links);
  }
  for (size_t d = 0; d < result.source.documents.size(); ++d) {
    for (size_t s = 0; s < result.source.documents[d].sentences.size(); ++s) {
      const Sentence &src = result.source.documents[d].sentences[s];
      const Sentence &tgt = result.gold_target.documents[d].sentences[s];
      for (int i = 0; i < src.size(); ++i) {
        CHECK(src.tokens[static_cast<size_t>(i)].label ==
              tgt.tokens[static_cast<size_t>(i)].label);
        CHECK("t" + src.tokens[static_cast<size_t>(i)].surface.substr(1) ==
              tgt.tokens[static_cast<size_t>(i)].surface);
      }
    }
  }
}

TEST_CASE("noise-free links form a twin-consistent bijection") {
  SynthConfig config = small_config();
  config.swaps = 2;
  SynthResult result = generate_bitext(config, essay());
  for (size_t s = 0; s < result.alignment.sentences.size(); ++s) {
    const SentenceAlignment &alignment = result.alignment.sentences[s];
    const Sentence &src = result.source.documents[s / 4].sentences[s % 4];
    const Sentence &tgt = result.gold_target.documents[s / 4].sentences[s % 4];
    REQUIRE(static_cast<int>(alignment.links.size()) == alignment.source_len);
    std::vector<bool> src_seen(static_cast<size_t>(alignment.source_len), false);
    std::vector<bool> tgt_seen(static_cast<size_t>(alignment.target_len), false);
    for (const AlignmentLink &link : alignment.links) {
      CHECK_FALSE(src_seen[static_cast<size_t>(link.source)]);
      CHECK_FALSE(tgt_seen[static_cast<size_t>(link.target)]);
      src_seen[static_cast<size_t>(link.source)] = true;
      tgt_seen[static_cast<size_t>(link.target)] = true;
      CHECK(word_id(src.tokens[static_cast<size_t>(link.source)].surface) ==
            word_id(tgt.tokens[static_cast<size_t>(link.target)].surface));
    }
  }
}

TEST_CASE("projection over the true alignment reproduces the gold target") {
  SynthConfig config = small_config();
  config.swaps = 2;
  SynthResult result = generate_bitext(config, essay());
  auto [projected, report] = project_corpus(result.source, result.target_tokens, result.alignment);
  CHECK(projected == result.gold_target);
  CHECK(report.components_dropped == 0);
  CHECK(report.collisions_resolved == 0);
}

TEST_CASE("noise drops links at the configured rate") {
  SynthConfig config = small_config();
  config.documents = 10;
  config.sentences_per_doc = 10;
  config.noise = 0.3;
  SynthResult result = generate_bitext(config, essay());
  long tokens = 0;
  long links = 0;
  for (const SentenceAlignment &alignment : result.alignment.sentences) {
    tokens += alignment.source_len;
    links += static_cast<long>(alignment.links.size());
  }
  double kept = static_cast<double>(links) / static_cast<double>(tokens);
  CHECK(kept > 0.6);   // ~0.7 expected, wide 3-sigma style margin
  CHECK(kept < 0.8);
  CHECK(links < tokens);

  config.noise = 1.0;
  SynthResult none = generate_bitext(config, essay());
  for (const SentenceAlignment &alignment : none.alignment.sentences) {
    CHECK(alignment.links.empty());
  }
}

TEST_CASE("type probabilities drive component placement") {
  SynthConfig config = small_config();
  config.type_probs = {0.0, 0.0, 0.0};
  SynthResult all_o = generate_bitext(config, essay());
  CHECK(corpus_stats(all_o.source).components_total() == 0);

  config.type_probs = {1.0, 1.0, 1.0};
  config.min_len = 9;  // room for three components of up to three tokens
  config.max_len = 12;
  SynthResult full = generate_bitext(config, essay());
  for (const Document &doc : full.source.documents) {
    for (const Sentence &sentence : doc.sentences) {
      std::vector<Component> components = extract_components(sentence);
      std::vector<bool> has(3, false);
      for (const Component &component : components) {
        has[static_cast<size_t>(component.type)] = true;
      }
      CHECK(has == std::vector<bool>{true, true, true});
    }
  }
}

TEST_CASE("embeddings give twins one class-anchored vector") {
  SynthConfig config = small_config();
  EmbeddingTable table = synth_embeddings(config, essay());
  CHECK(table.dim() == 8);
  CHECK(table.size() == 2 * config.vocab_size);
  for (long w = 0; w < config.vocab_size; ++w) {
    const std::vector<double> &sv = table.vector_of("s" + std::to_string(w));
    const std::vector<double> &tv = table.vector_of("t" + std::to_string(w));
    CHECK(sv == tv);
    size_t axis = static_cast<size_t>(w % essay().num_labels());
    // The class axis carries 1 + 0.1*N(0,1); every other axis only the jitter.
    CHECK(sv[axis] > 0.5);
    for (size_t d = 0; d < sv.size(); ++d) {
      if (d != axis) CHECK(std::abs(sv[d]) < 0.5);
    }
  }
  CHECK(synth_embeddings(config, essay()).vector_of("s0") == table.vector_of("s0"));
  config.seed = 99;
  CHECK(synth_embeddings(config, essay()).vector_of("s0") != table.vector_of("s0"));
}

}  // TEST_SUITE
