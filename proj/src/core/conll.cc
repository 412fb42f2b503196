// xlam -- cross-lingual argument mining toolkit

#include "core/conll.h"

#include <fstream>
#include <sstream>
#include <unordered_set>

#include "core/error.h"

namespace xlam {

namespace {

const char kDocPrefix[] = "# doc = ";
const size_t kDocPrefixLen = sizeof(kDocPrefix) - 1;

// Strips one trailing '\r' so CRLF input parses; output is always LF.
void chomp(std::string *line) {
  if (!line->empty() && line->back() == '\r') line->pop_back();
}

void finish_sentence(Sentence *sentence, Document *doc, const ParseOptions &options,
                     long line_no, long *repaired) {
  if (sentence->tokens.empty()) return;
  const BioVerdict verdict = validate_bio(*sentence);
  if (!verdict.valid) {
    if (!options.repair) {
      throw ParseError("document '" + doc->id + "': invalid BIO at token " +
                           std::to_string(verdict.index) + ": " + verdict.reason,
                       line_no);
    }
    *repaired += repair_bio(sentence);
  }
  doc->sentences.push_back(std::move(*sentence));
  *sentence = Sentence{};
}

void finish_document(Document *doc, Corpus *corpus,
                     std::unordered_set<std::string> *seen_ids, long line_no) {
  if (doc->id.empty()) return;
  if (doc->sentences.empty()) {
    throw ParseError("document '" + doc->id + "' has no sentences", line_no);
  }
  if (!seen_ids->insert(doc->id).second) {
    throw ParseError("duplicate document id '" + doc->id + "'", line_no);
  }
  corpus->documents.push_back(std::move(*doc));
  *doc = Document{};
}

}  // namespace

ParseResult parse_conll(std::istream &in, const LabelSpace &space,
                        const ParseOptions &options) {
  ParseResult result;
  result.corpus.label_space = space;

  Document doc;
  Sentence sentence;
  std::unordered_set<std::string> seen_ids;
  std::string line;
  long line_no = 0;

  while (std::getline(in, line)) {
    ++line_no;
    chomp(&line);
    if (line.empty()) {
      finish_sentence(&sentence, &doc, options, line_no, &result.repaired_labels);
      continue;
    }
    if (line.compare(0, kDocPrefixLen, kDocPrefix) == 0) {
      finish_sentence(&sentence, &doc, options, line_no, &result.repaired_labels);
      finish_document(&doc, &result.corpus, &seen_ids, line_no);
      doc.id = line.substr(kDocPrefixLen);
      if (doc.id.empty()) {
        throw ParseError("empty document id", line_no);
      }
      continue;
    }
    const size_t tab = line.find('\t');
    if (tab == std::string::npos || line.find('\t', tab + 1) != std::string::npos) {
      throw ParseError("expected exactly 2 tab-separated fields", line_no);
    }
    if (doc.id.empty()) {
      throw ParseError("token line before any '# doc = <id>' header", line_no);
    }
    Token token;
    token.surface = line.substr(0, tab);
    if (token.surface.empty()) {
      throw ParseError("empty token", line_no);
    }
    if (token.surface.find_first_of(" \t\f\v") != std::string::npos) {
      throw ParseError("token '" + token.surface + "' contains whitespace", line_no);
    }
    try {
      token.label = space.parse_label(line.substr(tab + 1));
    } catch (const ParseError &e) {
      throw ParseError(e.what(), line_no);
    }
    sentence.tokens.push_back(std::move(token));
  }
  finish_sentence(&sentence, &doc, options, line_no, &result.repaired_labels);
  finish_document(&doc, &result.corpus, &seen_ids, line_no);
  return result;
}

ParseResult parse_conll_string(const std::string &text, const LabelSpace &space,
                               const ParseOptions &options) {
  std::istringstream in(text);
  return parse_conll(in, space, options);
}

ParseResult parse_conll_file(const std::string &path, const LabelSpace &space,
                             const ParseOptions &options) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path + "' for reading");
  try {
    return parse_conll(in, space, options);
  } catch (const ParseError &e) {
    throw ParseError(path + ": " + e.what());
  }
}

void write_conll(const Corpus &corpus, std::ostream &out) {
  for (const auto &doc : corpus.documents) {
    out << kDocPrefix << doc.id << "\n";
    for (const auto &sentence : doc.sentences) {
      for (const auto &token : sentence.tokens) {
        out << token.surface << '\t' << corpus.label_space.label_name(token.label)
            << "\n";
      }
      out << "\n";
    }
  }
}

std::string write_conll_string(const Corpus &corpus) {
  std::ostringstream out;
  write_conll(corpus, out);
  return out.str();
}

void write_conll_file(const Corpus &corpus, const std::string &path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open '" + path + "' for writing");
  write_conll(corpus, out);
  if (!out) throw IoError("write failed on '" + path + "'");
}

std::vector<int> TokenCorpus::sentence_lengths() const {
  std::vector<int> lengths;
  lengths.reserve(sentences.size());
  for (const auto &s : sentences) lengths.push_back(static_cast<int>(s.size()));
  return lengths;
}

TokenCorpus read_tokens(std::istream &in) {
  TokenCorpus tokens;
  std::string line;
  while (std::getline(in, line)) {
    chomp(&line);
    std::vector<std::string> sentence;
    std::istringstream fields(line);
    std::string word;
    while (fields >> word) sentence.push_back(word);
    if (!sentence.empty()) tokens.sentences.push_back(std::move(sentence));
  }
  tokens.docs.push_back({"text", 0, tokens.num_sentences()});
  return tokens;
}

TokenCorpus read_tokens_file(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path + "' for reading");
  return read_tokens(in);
}

TokenCorpus tokens_of(const Corpus &corpus) {
  TokenCorpus tokens;
  for (const auto &doc : corpus.documents) {
    const long begin = tokens.num_sentences();
    for (const auto &sentence : doc.sentences) {
      std::vector<std::string> words;
      words.reserve(sentence.tokens.size());
      for (const auto &token : sentence.tokens) words.push_back(token.surface);
      tokens.sentences.push_back(std::move(words));
    }
    tokens.docs.push_back({doc.id, begin, tokens.num_sentences()});
  }
  return tokens;
}

void write_tokens(const TokenCorpus &tokens, std::ostream &out) {
  for (const auto &sentence : tokens.sentences) {
    for (size_t i = 0; i < sentence.size(); ++i) {
      if (i) out << ' ';
      out << sentence[i];
    }
    out << "\n";
  }
}

void write_tokens_file(const TokenCorpus &tokens, const std::string &path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open '" + path + "' for writing");
  write_tokens(tokens, out);
  if (!out) throw IoError("write failed on '" + path + "'");
}

Corpus corpus_from_labels(const TokenCorpus &tokens,
                          const std::vector<std::vector<Label>> &labels,
                          const LabelSpace &space) {
  if (labels.size() != tokens.sentences.size()) {
    throw ValidationError("label rows do not match sentence count");
  }
  Corpus corpus;
  corpus.label_space = space;
  std::vector<TokenCorpus::Doc> docs = tokens.docs;
  if (docs.empty()) docs.push_back({"text", 0, tokens.num_sentences()});
  for (const auto &doc : docs) {
    Document out_doc;
    out_doc.id = doc.id;
    for (long s = doc.begin; s < doc.end; ++s) {
      const auto &words = tokens.sentences[s];
      if (labels[s].size() != words.size()) {
        throw ValidationError("label row " + std::to_string(s) +
                              " does not match sentence length");
      }
      Sentence sentence;
      sentence.tokens.reserve(words.size());
      for (size_t i = 0; i < words.size(); ++i) {
        sentence.tokens.push_back({words[i], labels[s][i]});
      }
      out_doc.sentences.push_back(std::move(sentence));
    }
    if (!out_doc.sentences.empty()) corpus.documents.push_back(std::move(out_doc));
  }
  return corpus;
}

std::vector<int> sentence_lengths(const Corpus &corpus) {
  std::vector<int> lengths;
  for (const auto &doc : corpus.documents) {
    for (const auto &sentence : doc.sentences) lengths.push_back(sentence.size());
  }
  return lengths;
}

std::string read_file(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path + "' for reading");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_file(const std::string &path, const std::string &contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open '" + path + "' for writing");
  out << contents;
  if (!out) throw IoError("write failed on '" + path + "'");
}

}  // namespace xlam
