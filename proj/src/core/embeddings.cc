// xlam -- cross-lingual argument mining toolkit
#include "core/embeddings.h"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include "core/error.h"
#include "core/rng.h"

namespace xlam {

namespace {

std::vector<std::string> split_ws(const std::string &line) {
  std::vector<std::string> fields;
  std::istringstream in(line);
  std::string field;
  while (in >> field) fields.push_back(std::move(field));
  return fields;
}

bool parse_count(const std::string &text, long *value) {
  const char *begin = text.data();
  const char *end = begin + text.size();
  auto [ptr, ec] = std::from_chars(begin, end, *value);
  return ec == std::errc() && ptr == end && *value >= 0;
}

bool parse_float(const std::string &text, double *value) {
  const char *begin = text.data();
  const char *end = begin + text.size();
  auto [ptr, ec] = std::from_chars(begin, end, *value);
  return ec == std::errc() && ptr == end;
}

double norm(const std::vector<double> &v) {
  double sum = 0.0;
  for (double x : v) sum += x * x;
  return std::sqrt(sum);
}

}  // namespace

bool EmbeddingTable::contains(std::string_view word) const {
  return index_.find(std::string(word)) != index_.end();
}

const std::vector<double> &EmbeddingTable::vector_of(std::string_view word) const {
  auto it = index_.find(std::string(word));
  if (it == index_.end()) {
    throw LookupError("unknown word '" + std::string(word) + "'");
  }
  return vectors_[it->second];
}

bool EmbeddingTable::add(std::string word, std::vector<double> vector) {
  if (static_cast<int>(vector.size()) != dim_) {
    throw ValidationError("vector for '" + word + "' has " + std::to_string(vector.size()) +
                          " dimensions, table has " + std::to_string(dim_));
  }
  auto [it, inserted] = index_.emplace(word, words_.size());
  if (!inserted) {
    return false;
  }
  words_.push_back(std::move(word));
  vectors_.push_back(std::move(vector));
  return true;
}

LoadResult load_embeddings(std::istream &in) {
  LoadResult result;
  std::string line;
  long line_no = 0;
  long header_count = -1;
  int dim = -1;
  bool first_content = true;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::vector<std::string> fields = split_ws(line);
    if (fields.empty()) continue;
    if (first_content) {
      first_content = false;
      long count = 0;
      long header_dim = 0;
      if (fields.size() == 2 && parse_count(fields[0], &count) &&
          parse_count(fields[1], &header_dim)) {
        header_count = count;
        dim = static_cast<int>(header_dim);
        result.table = EmbeddingTable(dim);
        continue;
      }
    }
    if (dim < 0) {
      dim = static_cast<int>(fields.size()) - 1;
      if (dim < 1) {
        throw ParseError("embedding line needs a word and at least one value", line_no);
      }
      result.table = EmbeddingTable(dim);
    }
    if (static_cast<int>(fields.size()) - 1 != dim) {
      throw ParseError("expected " + std::to_string(dim) + " values for '" + fields[0] +
                             "', got " + std::to_string(fields.size() - 1),
                         line_no);
    }
    std::vector<double> vector(static_cast<size_t>(dim));
    for (int i = 0; i < dim; ++i) {
      if (!parse_float(fields[static_cast<size_t>(i) + 1], &vector[static_cast<size_t>(i)])) {
        throw ParseError("bad float '" + fields[static_cast<size_t>(i) + 1] + "'", line_no);
      }
    }
    if (!result.table.add(fields[0], std::move(vector))) {
      ++result.duplicate_words;
    }
  }
  if (dim < 0) {
    throw ParseError("empty embedding input");
  }
  if (header_count >= 0 && result.table.size() + result.duplicate_words != header_count) {
    throw ParseError("header announced " + std::to_string(header_count) + " entries, found " +
                     std::to_string(result.table.size() + result.duplicate_words));
  }
  return result;
}

LoadResult load_embeddings_file(const std::string &path) {
  std::ifstream in(path);
  if (!in) {
    throw IoError("cannot open '" + path + "' for reading");
  }
  try {
    return load_embeddings(in);
  } catch (const ParseError &err) {
    throw ParseError(path + ": " + err.what());
  }
}

void write_embeddings(const EmbeddingTable &table, std::ostream &out) {
  out << table.size() << ' ' << table.dim() << '\n';
  char buf[64];
  for (size_t i = 0; i < static_cast<size_t>(table.size()); ++i) {
    out << table.words()[i];
    for (double x : table.vector_at(i)) {
      auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), x);
      out << ' ';
      out.write(buf, ptr - buf);
      (void)ec;
    }
    out << '\n';
  }
}

void write_embeddings_file(const EmbeddingTable &table, const std::string &path) {
  std::ofstream out(path);
  if (!out) {
    throw IoError("cannot open '" + path + "' for writing");
  }
  write_embeddings(table, out);
  if (!out.good()) {
    throw IoError("failed writing '" + path + "'");
  }
}

std::string_view language_of(std::string_view word) {
  size_t colon = word.find(':');
  if (colon == std::string_view::npos || colon == 0) {
    return {};
  }
  for (size_t i = 0; i < colon; ++i) {
    unsigned char c = static_cast<unsigned char>(word[i]);
    if (!std::isalpha(c)) {
      return {};
    }
  }
  return word.substr(0, colon);
}

double cosine(const EmbeddingTable &table, std::string_view a, std::string_view b) {
  const std::vector<double> &va = table.vector_of(a);
  const std::vector<double> &vb = table.vector_of(b);
  double na = norm(va);
  double nb = norm(vb);
  if (na == 0.0) {
    throw ValidationError("zero vector for word '" + std::string(a) + "'");
  }
  if (nb == 0.0) {
    throw ValidationError("zero vector for word '" + std::string(b) + "'");
  }
  double dot = 0.0;
  for (size_t i = 0; i < va.size(); ++i) dot += va[i] * vb[i];
  return dot / (na * nb);
}

NeighborResult top_k_neighbors(const EmbeddingTable &table, std::string_view word, int k) {
  if (k < 0) {
    throw ValidationError("k must be nonnegative");
  }
  const std::vector<double> &query = table.vector_of(word);
  double query_norm = norm(query);
  if (query_norm == 0.0) {
    throw ValidationError("zero vector for word '" + std::string(word) + "'");
  }
  std::vector<Neighbor> scored;
  scored.reserve(static_cast<size_t>(table.size()));
  for (size_t i = 0; i < static_cast<size_t>(table.size()); ++i) {
    const std::string &other = table.words()[i];
    if (other == word) continue;
    double other_norm = norm(table.vector_at(i));
    if (other_norm == 0.0) continue;  // unrankable
    double dot = 0.0;
    const std::vector<double> &v = table.vector_at(i);
    for (size_t d = 0; d < v.size(); ++d) dot += query[d] * v[d];
    scored.push_back(Neighbor{other, dot / (query_norm * other_norm)});
  }
  std::sort(scored.begin(), scored.end(), [](const Neighbor &a, const Neighbor &b) {
    if (a.similarity != b.similarity) return a.similarity > b.similarity;
    return a.word < b.word;
  });
  if (static_cast<size_t>(k) < scored.size()) {
    scored.resize(static_cast<size_t>(k));
  }

  NeighborResult result;
  result.neighbors = std::move(scored);
  std::string_view query_lang = language_of(word);
  if (!query_lang.empty()) {
    result.cross_language = 0;
    for (const Neighbor &n : result.neighbors) {
      std::string_view lang = language_of(n.word);
      if (!lang.empty() && lang != query_lang) {
        ++result.cross_language;
      }
    }
  }
  return result;
}

std::vector<std::vector<std::string>> bivcd_shuffle_merge(
    const std::vector<std::vector<std::string>> &source,
    const std::vector<std::vector<std::string>> &target, uint64_t seed) {
  if (source.size() != target.size()) {
    throw ValidationError("bitext sides differ: " + std::to_string(source.size()) + " vs " +
                          std::to_string(target.size()) + " sentences");
  }
  Rng rng(seed);
  std::vector<std::vector<std::string>> merged;
  merged.reserve(source.size());
  for (size_t i = 0; i < source.size(); ++i) {
    std::vector<std::string> line = source[i];
    line.insert(line.end(), target[i].begin(), target[i].end());
    rng.shuffle(&line);
    merged.push_back(std::move(line));
  }
  return merged;
}

}  // namespace xlam
