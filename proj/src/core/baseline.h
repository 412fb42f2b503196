// xlam -- cross-lingual argument mining toolkit
//
// Random baseline with BIO prior knowledge: estimate how likely each
// component type (or no component at all) is per sentence, then label whole
// test sentences from one draw each. A drawn type t yields B-t followed by
// I-t to the end of the sentence; last_token_o additionally forces the final
// token to O (essay mode, where sentences end in punctuation).
#ifndef XLAM_CORE_BASELINE_H_
#define XLAM_CORE_BASELINE_H_

#include <cstdint>
#include <string>
#include <vector>

#include "core/corpus.h"
#include "core/label.h"

namespace xlam {

struct ComponentDistribution {
  // One probability per component type, then the no-component outcome last.
  std::vector<double> probabilities;
  bool last_token_o = true;

  int num_types() const { return static_cast<int>(probabilities.size()) - 1; }
  double p_type(int type) const { return probabilities[static_cast<size_t>(type)]; }
  double p_none() const { return probabilities.back(); }
};

// Counts one event per component occurrence per sentence plus one
// no-component event per sentence without any, then normalizes. Throws
// ValidationError on an empty corpus. last_token_o is left at its default;
// callers pick the dataset mode.
ComponentDistribution estimate_distribution(const Corpus &train_dev, const LabelSpace &space);

// One seeded draw per sentence; output corpus mirrors the input tokens and
// always carries valid BIO labels. Throws ValidationError when the
// distribution does not sum to 1 (1e-9) or has negative entries.
Corpus sample_baseline_labels(const Corpus &test, const ComponentDistribution &dist,
                              const LabelSpace &space, uint64_t seed);

std::string distribution_text(const ComponentDistribution &dist, const LabelSpace &space);

}  // namespace xlam

#endif  // XLAM_CORE_BASELINE_H_
