// xlam -- cross-lingual argument mining toolkit

#include "core/alignment.h"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>
#include <string>

#include "core/error.h"

namespace xlam {

std::vector<int> SentenceAlignment::aligned_target_indices(int start, int end) const {
  std::vector<int> indices;
  for (const AlignmentLink &link : links) {
    if (link.source >= start && link.source <= end) indices.push_back(link.target);
  }
  std::sort(indices.begin(), indices.end());
  indices.erase(std::unique(indices.begin(), indices.end()), indices.end());
  return indices;
}

SentenceAlignment SentenceAlignment::identity(int len) {
  SentenceAlignment alignment;
  alignment.source_len = len;
  alignment.target_len = len;
  alignment.links.reserve(len);
  for (int i = 0; i < len; ++i) alignment.links.push_back({i, i});
  return alignment;
}

namespace {

int parse_index(std::string_view text, long line_no, std::string_view pair) {
  int value = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size() || value < 0) {
    throw ParseError("malformed alignment pair '" + std::string(pair) + "'", line_no);
  }
  return value;
}

}  // namespace

PharaohResult parse_pharaoh(std::istream &in, const std::vector<int> &source_lengths,
                            const std::vector<int> &target_lengths,
                            const PharaohOptions &options) {
  if (source_lengths.size() != target_lengths.size()) {
    throw ValidationError("source and target corpora have different sentence counts (" +
                          std::to_string(source_lengths.size()) + " vs " +
                          std::to_string(target_lengths.size()) + ")");
  }
  PharaohResult result;
  std::string line;
  long line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line_no > static_cast<long>(source_lengths.size())) {
      throw ParseError("more alignment lines than sentence pairs (" +
                           std::to_string(source_lengths.size()) + ")",
                       line_no);
    }
    SentenceAlignment alignment;
    alignment.source_len = source_lengths[line_no - 1];
    alignment.target_len = target_lengths[line_no - 1];

    std::istringstream fields(line);
    std::string pair;
    while (fields >> pair) {
      const size_t dash = pair.find('-');
      if (dash == std::string::npos || pair.find('-', dash + 1) != std::string::npos) {
        throw ParseError("malformed alignment pair '" + pair + "'", line_no);
      }
      int i = parse_index(std::string_view(pair).substr(0, dash), line_no, pair);
      int j = parse_index(std::string_view(pair).substr(dash + 1), line_no, pair);
      if (options.swap) std::swap(i, j);
      if (i >= alignment.source_len) {
        throw ParseError("link '" + pair + "': source index " + std::to_string(i) +
                             " out of bounds (sentence length " +
                             std::to_string(alignment.source_len) + ")",
                         line_no);
      }
      if (j >= alignment.target_len) {
        throw ParseError("link '" + pair + "': target index " + std::to_string(j) +
                             " out of bounds (sentence length " +
                             std::to_string(alignment.target_len) + ")",
                         line_no);
      }
      alignment.links.push_back({i, j});
    }
    std::sort(alignment.links.begin(), alignment.links.end());
    const auto dup = std::unique(alignment.links.begin(), alignment.links.end());
    result.duplicate_links += alignment.links.end() - dup;
    alignment.links.erase(dup, alignment.links.end());
    result.alignment.sentences.push_back(std::move(alignment));
  }
  if (result.alignment.num_sentences() != static_cast<long>(source_lengths.size())) {
    throw ParseError("fewer alignment lines (" +
                     std::to_string(result.alignment.num_sentences()) +
                     ") than sentence pairs (" +
                     std::to_string(source_lengths.size()) + ")");
  }
  return result;
}

PharaohResult parse_pharaoh_file(const std::string &path,
                                 const std::vector<int> &source_lengths,
                                 const std::vector<int> &target_lengths,
                                 const PharaohOptions &options) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path + "' for reading");
  try {
    return parse_pharaoh(in, source_lengths, target_lengths, options);
  } catch (const ParseError &e) {
    throw ParseError(path + ": " + e.what());
  }
}

void write_pharaoh(const BitextAlignment &alignment, std::ostream &out) {
  for (const auto &sentence : alignment.sentences) {
    for (size_t i = 0; i < sentence.links.size(); ++i) {
      if (i) out << ' ';
      out << sentence.links[i].source << '-' << sentence.links[i].target;
    }
    out << "\n";
  }
}

void write_pharaoh_file(const BitextAlignment &alignment, const std::string &path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open '" + path + "' for writing");
  write_pharaoh(alignment, out);
  if (!out) throw IoError("write failed on '" + path + "'");
}

}  // namespace xlam
