// xlam -- cross-lingual argument mining toolkit
//
// Bilingual embedding tables in the usual text format: an optional
// `<count> <dim>` header (a first line of exactly two nonnegative integers),
// then one word followed by <dim> floats per line. Words may carry a language
// tag as an alphabetic prefix before ':' (en:dog, de:hund); the neighbor
// diagnostic uses those tags to count cross-language neighbors. Also hosts
// the BIVCD preparation step: per sentence pair, a seeded shuffle of the
// concatenated tokens.
#ifndef XLAM_CORE_EMBEDDINGS_H_
#define XLAM_CORE_EMBEDDINGS_H_

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace xlam {

class EmbeddingTable {
 public:
  EmbeddingTable() = default;
  explicit EmbeddingTable(int dim) : dim_(dim) {}

  int dim() const { return dim_; }
  long size() const { return static_cast<long>(words_.size()); }
  const std::vector<std::string> &words() const { return words_; }

  bool contains(std::string_view word) const;
  // Throws LookupError on unknown words.
  const std::vector<double> &vector_of(std::string_view word) const;
  const std::vector<double> &vector_at(size_t i) const { return vectors_[i]; }

  // False (and no change) when the word is already present.
  bool add(std::string word, std::vector<double> vector);

 private:
  int dim_ = 0;
  std::vector<std::string> words_;
  std::vector<std::vector<double>> vectors_;
  std::unordered_map<std::string, size_t> index_;
};

struct LoadResult {
  EmbeddingTable table;
  long duplicate_words = 0;  // later occurrences dropped, first wins
};

// Throws ParseError (with line numbers) on malformed lines, dimension
// mismatches, or a header count that disagrees with the data.
LoadResult load_embeddings(std::istream &in);
LoadResult load_embeddings_file(const std::string &path);

// Writes the header line and one entry per line; floats use shortest
// round-trip formatting.
void write_embeddings(const EmbeddingTable &table, std::ostream &out);
void write_embeddings_file(const EmbeddingTable &table, const std::string &path);

// Alphabetic prefix before ':' ("en:dog" -> "en"), empty when untagged.
std::string_view language_of(std::string_view word);

// Throws LookupError on missing words, ValidationError on zero vectors.
double cosine(const EmbeddingTable &table, std::string_view a, std::string_view b);

struct Neighbor {
  std::string word;
  double similarity = 0.0;
};

struct NeighborResult {
  std::vector<Neighbor> neighbors;  // similarity non-increasing, ties lexicographic
  long cross_language = -1;         // -1 when the query word carries no tag
};

// The k most-similar other words; zero-norm table entries are unrankable and
// skipped. Throws LookupError on a missing word, ValidationError on k < 0 or
// a zero-norm query vector.
NeighborResult top_k_neighbors(const EmbeddingTable &table, std::string_view word, int k);

// One merged line per pair: a seeded-uniform permutation of source tokens
// followed by target tokens. Permutations are drawn sequentially from a
// single stream seeded once. Throws ValidationError when the sides disagree
// in length.
std::vector<std::vector<std::string>> bivcd_shuffle_merge(
    const std::vector<std::vector<std::string>> &source,
    const std::vector<std::vector<std::string>> &target, uint64_t seed);

}  // namespace xlam

#endif  // XLAM_CORE_EMBEDDINGS_H_
