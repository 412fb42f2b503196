// xlam -- cross-lingual argument mining toolkit
//
// File I/O. Two formats live here:
//
//   CoNLL TSV  one "surface<TAB>label" token per line, a blank line ends a
//              sentence, "# doc = <id>" starts a document. UTF-8, LF. The
//              writer emits the canonical form (a blank line after every
//              sentence), which round-trips byte-exactly.
//
//   token text one sentence per line, tokens separated by single spaces;
//              used for unlabeled projection targets and bitext halves.
#ifndef XLAM_CORE_CONLL_H_
#define XLAM_CORE_CONLL_H_

#include <iosfwd>
#include <string>
#include <vector>

#include "core/corpus.h"

namespace xlam {

struct ParseOptions {
  // When set, invalid BIO sequences are repaired (offending I becomes B)
  // instead of rejected.
  bool repair = false;
};

struct ParseResult {
  Corpus corpus;
  long repaired_labels = 0;
};

ParseResult parse_conll(std::istream &in, const LabelSpace &space,
                        const ParseOptions &options = {});
ParseResult parse_conll_string(const std::string &text, const LabelSpace &space,
                               const ParseOptions &options = {});
ParseResult parse_conll_file(const std::string &path, const LabelSpace &space,
                             const ParseOptions &options = {});

void write_conll(const Corpus &corpus, std::ostream &out);
std::string write_conll_string(const Corpus &corpus);
void write_conll_file(const Corpus &corpus, const std::string &path);

// Unlabeled tokenized text with optional document structure. Reading plain
// token text yields a single document named "text"; tokens_of() keeps the
// source corpus structure so projected or predicted labels can be written
// back with the original document ids.
struct TokenCorpus {
  struct Doc {
    std::string id;
    long begin = 0;  // sentence range [begin, end)
    long end = 0;
  };
  std::vector<std::vector<std::string>> sentences;
  std::vector<Doc> docs;

  long num_sentences() const { return static_cast<long>(sentences.size()); }
  std::vector<int> sentence_lengths() const;
};

TokenCorpus read_tokens(std::istream &in);
TokenCorpus read_tokens_file(const std::string &path);
TokenCorpus tokens_of(const Corpus &corpus);
void write_tokens(const TokenCorpus &tokens, std::ostream &out);
void write_tokens_file(const TokenCorpus &tokens, const std::string &path);

// Rebuilds a corpus from per-token labels, reusing the token corpus document
// structure. labels must match the sentence shapes exactly.
Corpus corpus_from_labels(const TokenCorpus &tokens,
                          const std::vector<std::vector<Label>> &labels,
                          const LabelSpace &space);

std::vector<int> sentence_lengths(const Corpus &corpus);

// Opens a file for reading/writing, throwing IoError on failure.
std::string read_file(const std::string &path);
void write_file(const std::string &path, const std::string &contents);

}  // namespace xlam

#endif  // XLAM_CORE_CONLL_H_
