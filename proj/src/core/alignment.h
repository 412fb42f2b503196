// xlam -- cross-lingual argument mining toolkit
//
// Word alignments in Pharaoh format ("i-j" pairs, one line per sentence
// pair), as produced by fast-align and friends. Parsed alignments are
// validated against both sentence lengths and immutable afterwards.
#ifndef XLAM_CORE_ALIGNMENT_H_
#define XLAM_CORE_ALIGNMENT_H_

#include <compare>
#include <iosfwd>
#include <vector>

namespace xlam {

struct AlignmentLink {
  int source = 0;
  int target = 0;
  auto operator<=>(const AlignmentLink &other) const = default;
};

struct SentenceAlignment {
  int source_len = 0;
  int target_len = 0;
  std::vector<AlignmentLink> links;  // sorted ascending, no duplicates

  // Target indices linked to any source index in [start, end], ascending.
  std::vector<int> aligned_target_indices(int start, int end) const;

  static SentenceAlignment identity(int len);
};

struct BitextAlignment {
  std::vector<SentenceAlignment> sentences;
  long num_sentences() const { return static_cast<long>(sentences.size()); }
};

struct PharaohOptions {
  // Read lines as "j-i" (target-source); for alignments run in the reverse
  // direction.
  bool swap = false;
};

struct PharaohResult {
  BitextAlignment alignment;
  long duplicate_links = 0;  // deduplicated, reported as a warning by callers
};

// One input line per sentence pair; lengths give the token counts of the two
// corpora in order. Throws ParseError on malformed pairs, line-count
// mismatch, or out-of-bounds indices (naming line and link).
PharaohResult parse_pharaoh(std::istream &in, const std::vector<int> &source_lengths,
                            const std::vector<int> &target_lengths,
                            const PharaohOptions &options = {});
PharaohResult parse_pharaoh_file(const std::string &path,
                                 const std::vector<int> &source_lengths,
                                 const std::vector<int> &target_lengths,
                                 const PharaohOptions &options = {});

void write_pharaoh(const BitextAlignment &alignment, std::ostream &out);
void write_pharaoh_file(const BitextAlignment &alignment, const std::string &path);

}  // namespace xlam

#endif  // XLAM_CORE_ALIGNMENT_H_
