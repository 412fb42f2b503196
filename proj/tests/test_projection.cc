#include <doctest.h>

#include <json.hpp>
#include <sstream>
#include <string>
#include <vector>

#include "core/alignment.h"
#include "core/corpus.h"
#include "core/error.h"
#include "core/projection.h"
#include "core/rng.h"
#include "oracles.h"

using namespace xlam;
using xlam::testing::make_corpus;
using xlam::testing::make_sentence;
using xlam::testing::oracle_project;

namespace {

const LabelSpace &essay() {
  static LabelSpace space = LabelSpace::essay_types();
  return space;
}

SentenceAlignment align(int source_len, int target_len,
                        std::vector<AlignmentLink> links) {
  SentenceAlignment alignment;
  alignment.source_len = source_len;
  alignment.target_len = target_len;
  std::sort(links.begin(), links.end());
  alignment.links = std::move(links);
  return alignment;
}

std::vector<std::string> names(const std::vector<Label> &labels) {
  std::vector<std::string> out;
  for (const Label &label : labels) out.push_back(essay().label_name(label));
  return out;
}

Sentence random_valid(Rng *rng, int len) {
  Sentence s;
  for (int i = 0; i < len; ++i) {
    s.tokens.push_back(
        Token{"w" + std::to_string(i),
              essay().label_from_id(static_cast<int>(rng->next_below(7)))});
  }
  repair_bio(&s);
  return s;
}

}  // namespace

TEST_SUITE("projection") {

TEST_CASE("project_component applies the min/max rule") {
  SentenceAlignment id = SentenceAlignment::identity(6);
  auto span = project_component(Component{1, 2, 4}, id);
  REQUIRE(span.has_value());
  CHECK(span->type == 1);
  CHECK(span->t_first == 2);
  CHECK(span->t_last == 4);
  CHECK(span->source == Component{1, 2, 4});

  // Crossing links: targets of span (0,1) are {0,1} regardless of order.
  auto crossed = project_component(Component{2, 0, 1}, align(3, 3, {{0, 1}, {1, 0}, {2, 2}}));
  REQUIRE(crossed.has_value());
  CHECK(crossed->t_first == 0);
  CHECK(crossed->t_last == 1);

  // Unaligned determiner at the target start: span begins on the next word.
  auto shifted = project_component(Component{0, 1, 2}, align(4, 4, {{1, 1}, {2, 2}, {3, 3}}));
  REQUIRE(shifted.has_value());
  CHECK(shifted->t_first == 1);
  CHECK(shifted->t_last == 2);

  // No aligned token: drop verdict.
  CHECK_FALSE(project_component(Component{1, 0, 1}, align(3, 3, {{2, 0}})).has_value());

  // Non-contiguous targets swallow the middle.
  auto wide = project_component(Component{1, 0, 1}, align(2, 5, {{0, 0}, {1, 4}}));
  REQUIRE(wide.has_value());
  CHECK(wide->t_first == 0);
  CHECK(wide->t_last == 4);
}

TEST_CASE("no components projects to an all-O sentence") {
  ProjectionReport report;
  auto labels = project_sentence_pair(make_sentence("O O O", essay()), 3,
                                      SentenceAlignment::identity(3), &report);
  CHECK(names(labels) == std::vector<std::string>{"O", "O", "O"});
  CHECK(report.components_total == 0);
  CHECK(report.components_projected == 0);
  CHECK(report.components_dropped == 0);
}

TEST_CASE("overlapping spans are bumped to disjointness") {
  // Claim over source 0-1 lands on targets {0,3}; Premise over source 2-3
  // lands on targets {2,5}: resolved to (0,3) and (4,5) with one collision.
  Sentence source = make_sentence("B-Claim I-Claim B-Premise I-Premise", essay());
  SentenceAlignment alignment = align(4, 6, {{0, 0}, {1, 3}, {2, 2}, {3, 5}});
  ProjectionReport report;
  auto labels = project_sentence_pair(source, 6, alignment, &report);
  CHECK(names(labels) == std::vector<std::string>{"B-Claim", "I-Claim", "I-Claim", "I-Claim",
                                                  "B-Premise", "I-Premise"});
  CHECK(report.components_total == 2);
  CHECK(report.components_projected == 2);
  CHECK(report.components_dropped == 0);
  CHECK(report.collisions_resolved == 1);
}

TEST_CASE("ties on t_first keep the earlier source component") {
  // Both components project onto target index 0; the later source span moves.
  Sentence source = make_sentence("B-Claim I-Claim O B-Premise I-Premise", essay());
  SentenceAlignment alignment =
      align(5, 5, {{0, 0}, {1, 2}, {3, 0}, {4, 4}});
  ProjectionReport report;
  auto labels = project_sentence_pair(source, 5, alignment, &report);
  CHECK(names(labels) == std::vector<std::string>{"B-Claim", "I-Claim", "I-Claim", "B-Premise",
                                                  "I-Premise"});
  CHECK(report.collisions_resolved == 1);
  CHECK(report.components_projected == 2);
}

TEST_CASE("a span squeezed past its end is dropped") {
  // Premise projects inside the Claim's target span and has nowhere to go.
  Sentence source = make_sentence("B-Claim I-Claim B-Premise", essay());
  SentenceAlignment alignment = align(3, 6, {{0, 0}, {1, 5}, {2, 2}});
  ProjectionReport report;
  auto labels = project_sentence_pair(source, 6, alignment, &report);
  CHECK(names(labels) == std::vector<std::string>{"B-Claim", "I-Claim", "I-Claim", "I-Claim",
                                                  "I-Claim", "I-Claim"});
  CHECK(report.components_total == 2);
  CHECK(report.components_projected == 1);
  CHECK(report.components_dropped == 1);
  CHECK(report.collisions_resolved == 0);
  REQUIRE(report.drops.size() == 1);
  CHECK(report.drops[0].reason == DropRecord::Reason::kSqueezed);
  CHECK(report.drops[0].source == Component{2, 2, 2});
}

TEST_CASE("unaligned components drop and leave their tokens O") {
  Sentence source = make_sentence("B-Claim I-Claim O B-Premise", essay());
  SentenceAlignment alignment = align(4, 4, {{0, 0}, {1, 1}});  // Premise unaligned
  ProjectionReport report;
  auto labels = project_sentence_pair(source, 4, alignment, &report);
  CHECK(names(labels) == std::vector<std::string>{"B-Claim", "I-Claim", "O", "O"});
  CHECK(report.components_total == 2);
  CHECK(report.components_projected == 1);
  CHECK(report.components_dropped == 1);
  REQUIRE(report.drops.size() == 1);
  CHECK(report.drops[0].reason == DropRecord::Reason::kUnaligned);
  CHECK(report.drops[0].source == Component{2, 3, 3});
}

TEST_CASE("sentence-level validation errors") {
  ProjectionReport report;
  CHECK_THROWS_AS(project_sentence_pair(make_sentence("O O", essay()), 2,
                                        SentenceAlignment::identity(3), &report),
                  ValidationError);
  SentenceAlignment alignment = SentenceAlignment::identity(2);
  CHECK_THROWS_AS(project_sentence_pair(make_sentence("O O", essay()), 3, alignment, &report),
                  ValidationError);
  Sentence invalid = make_sentence("O I-Claim", essay());
  CHECK_THROWS_AS(project_sentence_pair(invalid, 2, alignment, &report), ValidationError);
}

TEST_CASE("identity projection reproduces any valid corpus") {
  Rng rng(77);
  for (int round = 0; round < 20; ++round) {
    Corpus corpus;
    corpus.label_space = essay();
    const int ndocs = 1 + static_cast<int>(rng.next_below(3));
    for (int d = 0; d < ndocs; ++d) {
      Document doc;
      doc.id = "doc" + std::to_string(d);
      const int nsent = 1 + static_cast<int>(rng.next_below(4));
      for (int s = 0; s < nsent; ++s) {
        doc.sentences.push_back(random_valid(&rng, 1 + static_cast<int>(rng.next_below(10))));
      }
      corpus.documents.push_back(doc);
    }
    BitextAlignment alignments;
    for (int len : sentence_lengths(corpus)) {
      alignments.sentences.push_back(SentenceAlignment::identity(len));
    }
    auto [projected, report] = project_corpus(corpus, tokens_of(corpus), alignments);
    CHECK(projected == corpus);
    CHECK(report.components_dropped == 0);
    CHECK(report.collisions_resolved == 0);
    CHECK(report.components_projected == report.components_total);
  }
}

TEST_CASE("random sentence pairs agree with the independent oracle") {
  Rng rng(123);
  long saw_collisions = 0;
  long saw_squeezed = 0;
  long saw_unaligned = 0;
  for (int round = 0; round < 300; ++round) {
    const int slen = 1 + static_cast<int>(rng.next_below(8));
    const int tlen = 1 + static_cast<int>(rng.next_below(10));
    Sentence source = random_valid(&rng, slen);
    std::vector<AlignmentLink> links;
    for (int i = 0; i < slen; ++i) {
      for (int j = 0; j < tlen; ++j) {
        if (rng.next_unit() < 0.25) links.push_back({i, j});
      }
    }
    SentenceAlignment alignment = align(slen, tlen, links);

    ProjectionReport report;
    auto labels = project_sentence_pair(source, tlen, alignment, &report);
    auto oracle = oracle_project(source, tlen, alignment, essay());

    CHECK(labels == oracle.labels);
    CHECK(report.components_total == oracle.total);
    CHECK(report.components_projected == oracle.projected);
    CHECK(report.components_dropped == oracle.dropped);
    CHECK(report.collisions_resolved == oracle.collisions);

    Sentence check;
    for (const Label &label : labels) check.tokens.push_back(Token{"x", label});
    CHECK(validate_bio(check).valid);

    saw_collisions += oracle.collisions;
    saw_squeezed += oracle.dropped_squeezed;
    saw_unaligned += oracle.dropped_unaligned;
  }
  // The random sweep must actually exercise every resolution path.
  CHECK(saw_collisions > 0);
  CHECK(saw_squeezed > 0);
  CHECK(saw_unaligned > 0);
}

TEST_CASE("project_corpus aggregates reports and locates drops") {
  Corpus source = make_corpus({{"B-Claim I-Claim", "B-Premise O"}}, essay());
  TokenCorpus target;
  target.sentences = {{"a", "b"}, {"c", "d"}};
  target.docs = {{"d1", 0, 2}};
  BitextAlignment alignments;
  alignments.sentences.push_back(align(2, 2, {{0, 0}, {1, 1}}));
  alignments.sentences.push_back(align(2, 2, {{1, 1}}));  // Premise at 0 unaligned

  auto [projected, report] = project_corpus(source, target, alignments);
  CHECK(projected.label_space == essay());
  CHECK(projected.documents[0].sentences[0].tokens[0].surface == "a");
  CHECK(report.components_total == 2);
  CHECK(report.components_projected == 1);
  CHECK(report.components_dropped == 1);
  REQUIRE(report.drops.size() == 1);
  CHECK(report.drops[0].doc_id == "d1");
  CHECK(report.drops[0].sentence_index == 1);
}

TEST_CASE("project_corpus validates counts and wraps sentence errors") {
  Corpus source = make_corpus({{"O O"}}, essay());
  TokenCorpus target;
  target.sentences = {{"a", "b"}, {"c"}};
  BitextAlignment alignments;
  alignments.sentences.push_back(SentenceAlignment::identity(2));
  CHECK_THROWS_AS(project_corpus(source, target, alignments), ValidationError);

  target.sentences = {{"a", "b"}};
  BitextAlignment two;
  two.sentences.push_back(SentenceAlignment::identity(2));
  two.sentences.push_back(SentenceAlignment::identity(2));
  CHECK_THROWS_AS(project_corpus(source, target, two), ValidationError);

  BitextAlignment wrong;
  wrong.sentences.push_back(SentenceAlignment::identity(3));
  try {
    project_corpus(source, target, wrong);
    CHECK(false);
  } catch (const ValidationError &e) {
    CHECK(std::string(e.what()).find("sentence 0 (doc 'd1')") != std::string::npos);
  }
}

TEST_CASE("report rendering") {
  ProjectionReport report;
  report.components_total = 3;
  report.components_projected = 2;
  report.components_dropped = 1;
  report.collisions_resolved = 1;
  DropRecord drop;
  drop.doc_id = "essay7";
  drop.sentence_index = 12;
  drop.source = Component{1, 4, 6};
  drop.reason = DropRecord::Reason::kUnaligned;
  report.drops.push_back(drop);

  CHECK(report_text(report, essay()) ==
        "components.total=3\ncomponents.projected=2\ncomponents.dropped=1\n"
        "collisions.resolved=1\ndrops.unaligned=1\ndrops.squeezed=0\n"
        "drop doc=essay7 sentence=12 type=Claim span=4-6 reason=unaligned\n");

  auto json = nlohmann::json::parse(report_json(report, essay()));
  CHECK(json["components"]["total"] == 3);
  CHECK(json["components"]["projected"] == 2);
  CHECK(json["collisions_resolved"] == 1);
  REQUIRE(json["drops"].size() == 1);
  CHECK(json["drops"][0]["doc"] == "essay7");
  CHECK(json["drops"][0]["reason"] == "unaligned");
}

TEST_CASE("report merge sums counts and concatenates drops") {
  ProjectionReport a;
  a.components_total = 2;
  a.components_projected = 2;
  ProjectionReport b;
  b.components_total = 3;
  b.components_projected = 1;
  b.components_dropped = 2;
  b.collisions_resolved = 1;
  b.drops.resize(2);
  a.merge(b);
  CHECK(a.components_total == 5);
  CHECK(a.components_projected == 3);
  CHECK(a.components_dropped == 2);
  CHECK(a.collisions_resolved == 1);
  CHECK(a.drops.size() == 2);
}

}  // TEST_SUITE
