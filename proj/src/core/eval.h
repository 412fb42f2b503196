// xlam -- cross-lingual argument mining toolkit
//
// Token-level evaluation. Scores are computed over an evaluated-label list:
// by default the union of labels occurring in gold or predictions, optionally
// the full label space. Precision/recall/F1 use the 0-when-undefined
// convention; macro-F1 is the unweighted mean of per-label F1 over the
// evaluated list. The confusion matrix is gold x predicted over that same
// list, so accuracy = trace / total.
#ifndef XLAM_CORE_EVAL_H_
#define XLAM_CORE_EVAL_H_

#include <string>
#include <vector>

#include "core/corpus.h"
#include "core/label.h"

namespace xlam {

enum class LabelSetMode {
  kUnion,  // labels present in gold or pred
  kFull,   // every label in the space, absent ones scoring 0
};

struct LabelScore {
  int label = 0;  // label id
  long tp = 0;
  long fp = 0;
  long fn = 0;
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;

  long gold_count() const { return tp + fn; }
  long pred_count() const { return tp + fp; }
};

struct EvalReport {
  std::vector<int> labels;  // evaluated label ids, ascending
  std::vector<LabelScore> per_label;
  std::vector<std::vector<long>> confusion;  // [gold][pred], indexed like labels
  long total_tokens = 0;
  long correct_tokens = 0;
  double accuracy = 0.0;
  double macro_f1 = 0.0;
};

// Both corpora must tokenize identically (same sentence lengths, same token
// surfaces); the first divergence is named in the ValidationError.
EvalReport evaluate_corpora(const Corpus &gold, const Corpus &pred, const LabelSpace &space,
                            LabelSetMode mode = LabelSetMode::kUnion);

// Same scoring over pre-flattened label id rows (no surface check).
EvalReport evaluate_rows(const std::vector<std::vector<int>> &gold,
                         const std::vector<std::vector<int>> &pred, const LabelSpace &space,
                         LabelSetMode mode = LabelSetMode::kUnion);

// Fraction of tokens labeled identically; shape checked as in evaluate_corpora.
double token_agreement(const Corpus &a, const Corpus &b);

// Two-decimal rendering; full precision goes to the JSON form.
std::string eval_text(const EvalReport &report, const LabelSpace &space);
std::string eval_json(const EvalReport &report, const LabelSpace &space);

}  // namespace xlam

#endif  // XLAM_CORE_EVAL_H_
