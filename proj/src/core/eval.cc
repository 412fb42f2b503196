// xlam -- cross-lingual argument mining toolkit
#include "core/eval.h"

#include <cstdio>
#include <sstream>

#include <json.hpp>

#include "core/error.h"

namespace xlam {

namespace {

std::string two_decimals(double value) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.2f", value);
  return buf;
}

// Flattens to per-sentence label id rows, checking that both corpora carry
// the same tokens.
void flatten_checked(const Corpus &gold, const Corpus &pred, const LabelSpace &space,
                     std::vector<std::vector<int>> *gold_rows,
                     std::vector<std::vector<int>> *pred_rows) {
  std::vector<const Sentence *> gold_sentences;
  std::vector<const Sentence *> pred_sentences;
  for (const Document &doc : gold.documents) {
    for (const Sentence &sentence : doc.sentences) gold_sentences.push_back(&sentence);
  }
  for (const Document &doc : pred.documents) {
    for (const Sentence &sentence : doc.sentences) pred_sentences.push_back(&sentence);
  }
  if (gold_sentences.size() != pred_sentences.size()) {
    throw ValidationError("sentence count mismatch: gold has " +
                          std::to_string(gold_sentences.size()) + ", pred has " +
                          std::to_string(pred_sentences.size()));
  }
  for (size_t s = 0; s < gold_sentences.size(); ++s) {
    const std::vector<Token> &g = gold_sentences[s]->tokens;
    const std::vector<Token> &p = pred_sentences[s]->tokens;
    if (g.size() != p.size()) {
      throw ValidationError("sentence " + std::to_string(s) + ": token count mismatch (gold " +
                            std::to_string(g.size()) + ", pred " + std::to_string(p.size()) + ")");
    }
    std::vector<int> gold_row(g.size());
    std::vector<int> pred_row(p.size());
    for (size_t i = 0; i < g.size(); ++i) {
      if (g[i].surface != p[i].surface) {
        throw ValidationError("sentence " + std::to_string(s) + " token " + std::to_string(i) +
                              ": surface mismatch ('" + g[i].surface + "' vs '" + p[i].surface +
                              "')");
      }
      gold_row[i] = space.label_id(g[i].label);
      pred_row[i] = space.label_id(p[i].label);
    }
    gold_rows->push_back(std::move(gold_row));
    pred_rows->push_back(std::move(pred_row));
  }
}

}  // namespace

EvalReport evaluate_rows(const std::vector<std::vector<int>> &gold,
                         const std::vector<std::vector<int>> &pred, const LabelSpace &space,
                         LabelSetMode mode) {
  if (gold.size() != pred.size()) {
    throw ValidationError("sentence count mismatch: gold has " + std::to_string(gold.size()) +
                          ", pred has " + std::to_string(pred.size()));
  }
  int num_labels = space.num_labels();
  std::vector<long> gold_counts(static_cast<size_t>(num_labels), 0);
  std::vector<long> pred_counts(static_cast<size_t>(num_labels), 0);
  std::vector<std::vector<long>> full(static_cast<size_t>(num_labels),
                                      std::vector<long>(static_cast<size_t>(num_labels), 0));
  long total = 0;
  for (size_t s = 0; s < gold.size(); ++s) {
    if (gold[s].size() != pred[s].size()) {
      throw ValidationError("sentence " + std::to_string(s) + ": token count mismatch (gold " +
                            std::to_string(gold[s].size()) + ", pred " +
                            std::to_string(pred[s].size()) + ")");
    }
    for (size_t i = 0; i < gold[s].size(); ++i) {
      int g = gold[s][i];
      int p = pred[s][i];
      if (g < 0 || g >= num_labels || p < 0 || p >= num_labels) {
        throw ValidationError("label id out of range at sentence " + std::to_string(s) +
                              " token " + std::to_string(i));
      }
      ++gold_counts[static_cast<size_t>(g)];
      ++pred_counts[static_cast<size_t>(p)];
      ++full[static_cast<size_t>(g)][static_cast<size_t>(p)];
      ++total;
    }
  }

  EvalReport report;
  for (int id = 0; id < num_labels; ++id) {
    bool present = gold_counts[static_cast<size_t>(id)] > 0 ||
                   pred_counts[static_cast<size_t>(id)] > 0;
    if (mode == LabelSetMode::kFull || present) {
      report.labels.push_back(id);
    }
  }

  report.total_tokens = total;
  report.confusion.assign(report.labels.size(), std::vector<long>(report.labels.size(), 0));
  for (size_t gi = 0; gi < report.labels.size(); ++gi) {
    for (size_t pi = 0; pi < report.labels.size(); ++pi) {
      report.confusion[gi][pi] =
          full[static_cast<size_t>(report.labels[gi])][static_cast<size_t>(report.labels[pi])];
    }
  }

  double f1_sum = 0.0;
  for (int id : report.labels) {
    LabelScore score;
    score.label = id;
    score.tp = full[static_cast<size_t>(id)][static_cast<size_t>(id)];
    score.fn = gold_counts[static_cast<size_t>(id)] - score.tp;
    score.fp = pred_counts[static_cast<size_t>(id)] - score.tp;
    long pred_total = score.tp + score.fp;
    long gold_total = score.tp + score.fn;
    score.precision = pred_total > 0 ? static_cast<double>(score.tp) / pred_total : 0.0;
    score.recall = gold_total > 0 ? static_cast<double>(score.tp) / gold_total : 0.0;
    double pr = score.precision + score.recall;
    score.f1 = pr > 0.0 ? 2.0 * score.precision * score.recall / pr : 0.0;
    f1_sum += score.f1;
    report.correct_tokens += score.tp;
    report.per_label.push_back(score);
  }
  report.accuracy = total > 0 ? static_cast<double>(report.correct_tokens) / total : 0.0;
  report.macro_f1 = report.labels.empty() ? 0.0 : f1_sum / static_cast<double>(report.labels.size());
  return report;
}

EvalReport evaluate_corpora(const Corpus &gold, const Corpus &pred, const LabelSpace &space,
                            LabelSetMode mode) {
  std::vector<std::vector<int>> gold_rows;
  std::vector<std::vector<int>> pred_rows;
  flatten_checked(gold, pred, space, &gold_rows, &pred_rows);
  return evaluate_rows(gold_rows, pred_rows, space, mode);
}

double token_agreement(const Corpus &a, const Corpus &b) {
  std::vector<std::vector<int>> a_rows;
  std::vector<std::vector<int>> b_rows;
  flatten_checked(a, b, a.label_space, &a_rows, &b_rows);
  long total = 0;
  long same = 0;
  for (size_t s = 0; s < a_rows.size(); ++s) {
    for (size_t i = 0; i < a_rows[s].size(); ++i) {
      ++total;
      if (a_rows[s][i] == b_rows[s][i]) ++same;
    }
  }
  return total > 0 ? static_cast<double>(same) / static_cast<double>(total) : 0.0;
}

std::string eval_text(const EvalReport &report, const LabelSpace &space) {
  std::ostringstream out;
  out << "tokens=" << report.total_tokens << '\n';
  out << "correct=" << report.correct_tokens << '\n';
  out << "accuracy=" << two_decimals(report.accuracy) << '\n';
  out << "macro_f1=" << two_decimals(report.macro_f1) << '\n';
  for (const LabelScore &score : report.per_label) {
    out << "label=" << space.label_name_from_id(score.label)
        << " precision=" << two_decimals(score.precision)
        << " recall=" << two_decimals(score.recall) << " f1=" << two_decimals(score.f1)
        << " gold=" << score.gold_count() << " pred=" << score.pred_count() << '\n';
  }
  out << "confusion.labels=";
  for (size_t i = 0; i < report.labels.size(); ++i) {
    if (i > 0) out << ',';
    out << space.label_name_from_id(report.labels[i]);
  }
  out << '\n';
  for (size_t gi = 0; gi < report.labels.size(); ++gi) {
    out << "confusion." << space.label_name_from_id(report.labels[gi]) << '=';
    for (size_t pi = 0; pi < report.confusion[gi].size(); ++pi) {
      if (pi > 0) out << ',';
      out << report.confusion[gi][pi];
    }
    out << '\n';
  }
  return out.str();
}

std::string eval_json(const EvalReport &report, const LabelSpace &space) {
  nlohmann::ordered_json root;
  root["tokens"] = report.total_tokens;
  root["correct"] = report.correct_tokens;
  root["accuracy"] = report.accuracy;
  root["macro_f1"] = report.macro_f1;
  nlohmann::ordered_json labels = nlohmann::ordered_json::array();
  for (const LabelScore &score : report.per_label) {
    nlohmann::ordered_json entry;
    entry["label"] = space.label_name_from_id(score.label);
    entry["precision"] = score.precision;
    entry["recall"] = score.recall;
    entry["f1"] = score.f1;
    entry["tp"] = score.tp;
    entry["fp"] = score.fp;
    entry["fn"] = score.fn;
    labels.push_back(std::move(entry));
  }
  root["labels"] = std::move(labels);
  nlohmann::ordered_json names = nlohmann::ordered_json::array();
  for (int id : report.labels) names.push_back(space.label_name_from_id(id));
  root["confusion"]["labels"] = std::move(names);
  root["confusion"]["counts"] = report.confusion;
  return root.dump(2) + "\n";
}

}  // namespace xlam
