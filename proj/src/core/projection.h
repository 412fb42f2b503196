// xlam -- cross-lingual argument mining toolkit
//
// Annotation projection across word-aligned sentence pairs. A source
// component projects to the target span [t_first, t_last] where t_first and
// t_last are the smallest and largest target indices aligned to any token of
// the component. Components with no aligned token are dropped (their target
// tokens stay O). Overlapping projected spans are made disjoint by
// incrementing t_first of the later-starting span (ties broken toward the
// span whose source component starts later); a span squeezed past its own
// t_last is dropped. A bumped span that survives counts once in
// collisions_resolved; a squeezed one counts only as dropped.
#ifndef XLAM_CORE_PROJECTION_H_
#define XLAM_CORE_PROJECTION_H_

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "core/alignment.h"
#include "core/conll.h"
#include "core/corpus.h"

namespace xlam {

struct ProjectedSpan {
  int type = -1;
  int t_first = 0;
  int t_last = 0;
  Component source;  // the component this span was projected from
};

struct DropRecord {
  enum class Reason { kUnaligned, kSqueezed };
  std::string doc_id;      // filled at corpus level
  long sentence_index = -1;  // corpus-wide sentence index
  Component source;
  Reason reason = Reason::kUnaligned;
};

struct ProjectionReport {
  long components_total = 0;
  long components_projected = 0;
  long components_dropped = 0;
  long collisions_resolved = 0;
  std::vector<DropRecord> drops;

  void merge(ProjectionReport other);
};

std::string report_text(const ProjectionReport &report, const LabelSpace &space);
std::string report_json(const ProjectionReport &report, const LabelSpace &space);

// Min/max rule for a single component; nullopt is the drop verdict.
std::optional<ProjectedSpan> project_component(const Component &component,
                                               const SentenceAlignment &alignment);

// Projects all components of one sentence onto target_len tokens and returns
// the target label row (always valid BIO). Throws ValidationError on invalid
// source BIO or length mismatches.
std::vector<Label> project_sentence_pair(const Sentence &source, int target_len,
                                         const SentenceAlignment &alignment,
                                         ProjectionReport *report);

// Sentence-by-sentence projection of a whole bitext. The projected corpus
// carries the source document structure over the target tokens. Throws
// ValidationError when sentence counts or lengths disagree.
std::pair<Corpus, ProjectionReport> project_corpus(const Corpus &source,
                                                   const TokenCorpus &target,
                                                   const BitextAlignment &alignments);

}  // namespace xlam

#endif  // XLAM_CORE_PROJECTION_H_
