#include <doctest.h>

#include <json.hpp>
#include <string>
#include <vector>

#include "core/error.h"
#include "core/eval.h"
#include "core/rng.h"
#include "oracles.h"

using namespace xlam;
using xlam::testing::make_corpus;
using xlam::testing::oracle_metrics;

namespace {

const LabelSpace &essay() {
  static LabelSpace space = LabelSpace::essay_types();
  return space;
}

// Label ids in the essay space: B-MajorClaim=0, I-MajorClaim=1, B-Claim=2,
// I-Claim=3, B-Premise=4, I-Premise=5, O=6.
const std::vector<std::vector<int>> kGold = {{2, 3, 6, 6}};
const std::vector<std::vector<int>> kPred = {{2, 6, 6, 6}};

}  // namespace

TEST_SUITE("eval") {

TEST_CASE("hand-checked report over one sentence") {
  EvalReport report = evaluate_rows(kGold, kPred, essay());
  CHECK(report.total_tokens == 4);
  CHECK(report.correct_tokens == 3);
  CHECK(report.accuracy == 0.75);
  CHECK(report.macro_f1 == doctest::Approx(0.6).epsilon(1e-12));
  REQUIRE(report.labels == std::vector<int>{2, 3, 6});

  const LabelScore &claim_b = report.per_label[0];
  CHECK(claim_b.tp == 1);
  CHECK(claim_b.fp == 0);
  CHECK(claim_b.fn == 0);
  CHECK(claim_b.f1 == 1.0);

  const LabelScore &claim_i = report.per_label[1];
  CHECK(claim_i.tp == 0);
  CHECK(claim_i.fn == 1);
  CHECK(claim_i.precision == 0.0);
  CHECK(claim_i.recall == 0.0);
  CHECK(claim_i.f1 == 0.0);

  const LabelScore &o = report.per_label[2];
  CHECK(o.precision == doctest::Approx(2.0 / 3.0).epsilon(1e-12));
  CHECK(o.recall == 1.0);
  CHECK(o.f1 == doctest::Approx(0.8).epsilon(1e-12));
  CHECK(o.gold_count() == 2);
  CHECK(o.pred_count() == 3);

  CHECK(report.confusion ==
        std::vector<std::vector<long>>{{1, 0, 0}, {0, 0, 1}, {0, 0, 2}});
}

TEST_CASE("eval_text golden") {
  EvalReport report = evaluate_rows(kGold, kPred, essay());
  CHECK(eval_text(report, essay()) ==
        "tokens=4\ncorrect=3\naccuracy=0.75\nmacro_f1=0.60\n"
        "label=B-Claim precision=1.00 recall=1.00 f1=1.00 gold=1 pred=1\n"
        "label=I-Claim precision=0.00 recall=0.00 f1=0.00 gold=1 pred=0\n"
        "label=O precision=0.67 recall=1.00 f1=0.80 gold=2 pred=3\n"
        "confusion.labels=B-Claim,I-Claim,O\n"
        "confusion.B-Claim=1,0,0\n"
        "confusion.I-Claim=0,0,1\n"
        "confusion.O=0,0,2\n");
}

TEST_CASE("eval_json carries full precision and the confusion matrix") {
  EvalReport report = evaluate_rows(kGold, kPred, essay());
  auto json = nlohmann::json::parse(eval_json(report, essay()));
  CHECK(json["tokens"] == 4);
  CHECK(json["correct"] == 3);
  CHECK(json["accuracy"] == 0.75);
  CHECK(json["macro_f1"].get<double>() == doctest::Approx(0.6).epsilon(1e-12));
  REQUIRE(json["labels"].size() == 3);
  CHECK(json["labels"][0]["label"] == "B-Claim");
  CHECK(json["labels"][2]["label"] == "O");
  CHECK(json["labels"][2]["tp"] == 2);
  CHECK(json["labels"][2]["fp"] == 1);
  CHECK(json["labels"][2]["fn"] == 0);
  CHECK(json["confusion"]["labels"] ==
        nlohmann::json::array({"B-Claim", "I-Claim", "O"}));
  CHECK(json["confusion"]["counts"] ==
        nlohmann::json::parse("[[1,0,0],[0,0,1],[0,0,2]]"));
}

TEST_CASE("full label set scores absent labels as zero") {
  EvalReport report = evaluate_rows(kGold, kPred, essay(), LabelSetMode::kFull);
  REQUIRE(report.labels == std::vector<int>{0, 1, 2, 3, 4, 5, 6});
  CHECK(report.per_label[0].f1 == 0.0);
  CHECK(report.per_label[4].f1 == 0.0);
  // Same F1 mass as the union report, averaged over 7 labels instead of 3.
  CHECK(report.macro_f1 == doctest::Approx(1.8 / 7.0).epsilon(1e-12));
  CHECK(report.accuracy == 0.75);
  CHECK(report.confusion.size() == 7);
}

TEST_CASE("perfect predictions score 1 everywhere") {
  std::vector<std::vector<int>> rows = {{0, 1, 6}, {4, 5, 5, 6}};
  EvalReport report = evaluate_rows(rows, rows, essay());
  CHECK(report.accuracy == 1.0);
  CHECK(report.macro_f1 == 1.0);
  for (const LabelScore &score : report.per_label) {
    CHECK(score.precision == 1.0);
    CHECK(score.recall == 1.0);
    CHECK(score.fp == 0);
    CHECK(score.fn == 0);
  }
}

TEST_CASE("empty input yields an empty zero report") {
  EvalReport report = evaluate_rows({}, {}, essay());
  CHECK(report.total_tokens == 0);
  CHECK(report.accuracy == 0.0);
  CHECK(report.macro_f1 == 0.0);
  CHECK(report.labels.empty());
}

TEST_CASE("shape and range violations are rejected") {
  CHECK_THROWS_WITH_AS(evaluate_rows({{1}}, {}, essay()),
                       "sentence count mismatch: gold has 1, pred has 0", ValidationError);
  CHECK_THROWS_WITH_AS(evaluate_rows({{1, 2}}, {{1}}, essay()),
                       "sentence 0: token count mismatch (gold 2, pred 1)", ValidationError);
  CHECK_THROWS_WITH_AS(evaluate_rows({{7}}, {{0}}, essay()),
                       "label id out of range at sentence 0 token 0", ValidationError);
  CHECK_THROWS_AS(evaluate_rows({{-1}}, {{0}}, essay()), ValidationError);
}

TEST_CASE("corpora evaluation checks surfaces") {
  Corpus gold = make_corpus({{"a:B-Claim b:I-Claim c:O d:O"}}, essay());
  Corpus pred = make_corpus({{"a:B-Claim b:O c:O d:O"}}, essay());
  EvalReport report = evaluate_corpora(gold, pred, essay());
  CHECK(report.macro_f1 == doctest::Approx(0.6).epsilon(1e-12));
  CHECK(report.total_tokens == 4);

  Corpus renamed = make_corpus({{"a:B-Claim X:O c:O d:O"}}, essay());
  CHECK_THROWS_WITH_AS(evaluate_corpora(gold, renamed, essay()),
                       "sentence 0 token 1: surface mismatch ('b' vs 'X')", ValidationError);

  Corpus shorter = make_corpus({{"a:B-Claim b:I-Claim c:O"}}, essay());
  CHECK_THROWS_AS(evaluate_corpora(gold, shorter, essay()), ValidationError);
}

TEST_CASE("token agreement") {
  Corpus a = make_corpus({{"a:B-Claim b:I-Claim c:O d:O"}}, essay());
  Corpus b = make_corpus({{"a:B-Claim b:O c:O d:O"}}, essay());
  CHECK(token_agreement(a, b) == 0.75);
  CHECK(token_agreement(a, a) == 1.0);
  Corpus empty;
  empty.label_space = essay();
  CHECK(token_agreement(empty, empty) == 0.0);
  CHECK_THROWS_AS(token_agreement(a, empty), ValidationError);
}

TEST_CASE("random rows agree with the independent oracle") {
  Rng rng(4242);
  for (int round = 0; round < 60; ++round) {
    const int nsent = 1 + static_cast<int>(rng.next_below(4));
    std::vector<std::vector<int>> gold;
    std::vector<std::vector<int>> pred;
    for (int s = 0; s < nsent; ++s) {
      const int len = 1 + static_cast<int>(rng.next_below(9));
      std::vector<int> g;
      std::vector<int> p;
      for (int i = 0; i < len; ++i) {
        g.push_back(static_cast<int>(rng.next_below(7)));
        p.push_back(static_cast<int>(rng.next_below(7)));
      }
      gold.push_back(g);
      pred.push_back(p);
    }
    const bool full = round % 2 == 0;
    EvalReport report =
        evaluate_rows(gold, pred, essay(), full ? LabelSetMode::kFull : LabelSetMode::kUnion);
    auto oracle = oracle_metrics(gold, pred, essay().num_labels(), full);
    REQUIRE(report.labels == oracle.labels);
    CHECK(report.accuracy == doctest::Approx(oracle.accuracy).epsilon(1e-12));
    CHECK(report.macro_f1 == doctest::Approx(oracle.macro_f1).epsilon(1e-12));
    for (size_t i = 0; i < report.per_label.size(); ++i) {
      CHECK(report.per_label[i].precision ==
            doctest::Approx(oracle.precision[i]).epsilon(1e-12));
      CHECK(report.per_label[i].recall == doctest::Approx(oracle.recall[i]).epsilon(1e-12));
      CHECK(report.per_label[i].f1 == doctest::Approx(oracle.f1[i]).epsilon(1e-12));
    }
    // Confusion invariants: trace = correct, row sums = gold counts.
    long trace = 0;
    for (size_t i = 0; i < report.confusion.size(); ++i) trace += report.confusion[i][i];
    CHECK(trace == report.correct_tokens);
    for (size_t gi = 0; gi < report.labels.size(); ++gi) {
      long row = 0;
      for (long cell : report.confusion[gi]) row += cell;
      CHECK(row == report.per_label[gi].gold_count());
    }
  }
}

}  // TEST_SUITE
