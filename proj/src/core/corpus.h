// xlam -- cross-lingual argument mining toolkit
//
// Corpus data model plus the span-level operations defined on it: BIO
// validation and repair, component extraction, corpus statistics, and
// deterministic document-level splits. Corpora are treated as immutable
// values once built; every operation here returns fresh data.
#ifndef XLAM_CORE_CORPUS_H_
#define XLAM_CORE_CORPUS_H_

#include <cstdint>
#include <string>
#include <vector>

#include "core/label.h"

namespace xlam {

struct Token {
  std::string surface;
  Label label;
  bool operator==(const Token &other) const = default;
};

struct Sentence {
  std::vector<Token> tokens;
  int size() const { return static_cast<int>(tokens.size()); }
  bool operator==(const Sentence &other) const = default;
};

struct Document {
  std::string id;
  std::vector<Sentence> sentences;
  bool operator==(const Document &other) const = default;
};

struct Corpus {
  LabelSpace label_space;
  std::vector<Document> documents;

  long num_documents() const { return static_cast<long>(documents.size()); }
  long num_sentences() const;
  long num_tokens() const;
  bool operator==(const Corpus &other) const = default;
};

// A maximal contiguous typed span: tokens [start, end] labeled
// B-type, I-type, ..., I-type within one sentence.
struct Component {
  int type = -1;
  int start = 0;  // inclusive
  int end = 0;    // inclusive
  bool operator==(const Component &other) const = default;
};

struct BioVerdict {
  bool valid = true;
  int index = -1;      // first offending token when invalid
  std::string reason;  // empty when valid
};

// Valid iff no I opens the sentence or follows O, and no I-t follows a
// token of a different component type.
BioVerdict validate_bio(const Sentence &sentence);

// Turns every offending I into a B of the same type. Returns the number of
// labels changed; the sentence passes validate_bio afterwards.
int repair_bio(Sentence *sentence);

// Left-to-right components of a valid-BIO sentence. Throws ValidationError
// (naming the first offending index) when validate_bio fails.
std::vector<Component> extract_components(const Sentence &sentence);

struct CorpusStats {
  long documents = 0;
  long sentences = 0;
  long tokens = 0;
  std::vector<long> components_by_type;  // label-space type order
  long components_total() const;
};

CorpusStats corpus_stats(const Corpus &corpus);
std::string stats_text(const CorpusStats &stats, const LabelSpace &space);
std::string stats_json(const CorpusStats &stats, const LabelSpace &space);

struct SplitResult {
  Corpus train;
  Corpus dev;
  Corpus test;
};

// test := documents named in test_ids; dev := seeded sample of
// round(dev_fraction * remainder) of the remaining documents; train := rest.
// All three preserve the corpus document order. Throws ValidationError on
// unknown test ids or dev_fraction outside [0, 1).
SplitResult split_corpus(const Corpus &corpus,
                         const std::vector<std::string> &test_ids,
                         double dev_fraction, uint64_t seed);

}  // namespace xlam

#endif  // XLAM_CORE_CORPUS_H_
