#include <doctest.h>

#include <algorithm>
#include <sstream>
#include <string>
#include <vector>

#include "core/embeddings.h"
#include "core/error.h"

using namespace xlam;

namespace {

EmbeddingTable table2(std::initializer_list<std::pair<std::string, std::vector<double>>> rows) {
  EmbeddingTable table(2);
  for (const auto &[word, vec] : rows) table.add(word, vec);
  return table;
}

LoadResult load(const std::string &text) {
  std::istringstream in(text);
  return load_embeddings(in);
}

}  // namespace

TEST_SUITE("embeddings") {

TEST_CASE("table add, lookup, and dimension guard") {
  EmbeddingTable table(3);
  CHECK(table.add("dog", {1.0, 2.0, 3.0}));
  CHECK_FALSE(table.add("dog", {9.0, 9.0, 9.0}));  // first wins
  CHECK(table.size() == 1);
  CHECK(table.contains("dog"));
  CHECK_FALSE(table.contains("cat"));
  CHECK(table.vector_of("dog") == std::vector<double>{1.0, 2.0, 3.0});
  CHECK_THROWS_WITH_AS(table.vector_of("cat"), "unknown word 'cat'", LookupError);
  CHECK_THROWS_AS(table.add("short", {1.0}), ValidationError);
}

TEST_CASE("load without header infers the dimension") {
  LoadResult result = load("dog 1 2\ncat 3 4\n");
  CHECK(result.table.dim() == 2);
  CHECK(result.table.size() == 2);
  CHECK(result.duplicate_words == 0);
  CHECK(result.table.vector_of("cat") == std::vector<double>{3.0, 4.0});
}

TEST_CASE("load honours a count/dim header") {
  LoadResult result = load("2 3\na 1 2 3\nb 4 5 6\n");
  CHECK(result.table.dim() == 3);
  CHECK(result.table.size() == 2);
  CHECK_THROWS_WITH_AS(load("3 2\na 1 2\nb 3 4\n"),
                       "header announced 3 entries, found 2", ParseError);
}

TEST_CASE("duplicates are dropped and counted, first occurrence wins") {
  LoadResult result = load("w 1 2\nw 3 4\nv 5 6\n");
  CHECK(result.table.size() == 2);
  CHECK(result.duplicate_words == 1);
  CHECK(result.table.vector_of("w") == std::vector<double>{1.0, 2.0});
  // Duplicates still count against a header total.
  CHECK_NOTHROW(load("3 2\nw 1 2\nw 3 4\nv 5 6\n"));
}

TEST_CASE("load tolerates blank lines and CRLF") {
  LoadResult result = load("\na 1 2\r\n\nb 3 4\r\n");
  CHECK(result.table.size() == 2);
  CHECK(result.table.vector_of("b") == std::vector<double>{3.0, 4.0});
}

TEST_CASE("load parse errors carry line numbers") {
  CHECK_THROWS_WITH_AS(load("a 1 2\nb 3\n"), "line 2: expected 2 values for 'b', got 1",
                       ParseError);
  CHECK_THROWS_WITH_AS(load("a 1 2\nb x y\n"), "line 2: bad float 'x'", ParseError);
  CHECK_THROWS_WITH_AS(load("word\n"),
                       "line 1: embedding line needs a word and at least one value", ParseError);
  CHECK_THROWS_WITH_AS(load(""), "empty embedding input", ParseError);
  CHECK_THROWS_AS(load_embeddings_file("/nonexistent/table.vec"), IoError);
}

TEST_CASE("write emits the header and round-trips") {
  EmbeddingTable table = table2({{"a", {1.5, -0.25}}, {"b", {0.0, 3.0}}});
  std::ostringstream out;
  write_embeddings(table, out);
  CHECK(out.str() == "2 2\na 1.5 -0.25\nb 0 3\n");
  LoadResult back = load(out.str());
  CHECK(back.table.words() == table.words());
  CHECK(back.table.vector_of("a") == std::vector<double>{1.5, -0.25});
}

TEST_CASE("language_of parses alphabetic prefixes only") {
  CHECK(language_of("en:dog") == "en");
  CHECK(language_of("de:Hund") == "de");
  CHECK(language_of("dog") == "");
  CHECK(language_of(":dog") == "");
  CHECK(language_of("e2:dog") == "");
  CHECK(language_of("EN:dog") == "EN");
}

TEST_CASE("cosine on hand vectors") {
  EmbeddingTable table =
      table2({{"x", {1.0, 0.0}}, {"y", {0.0, 1.0}}, {"x2", {2.0, 0.0}}, {"nx", {-3.0, 0.0}},
              {"zero", {0.0, 0.0}}, {"diag", {1.0, 1.0}}});
  CHECK(cosine(table, "x", "y") == 0.0);
  CHECK(cosine(table, "x", "x2") == 1.0);
  CHECK(cosine(table, "x", "nx") == -1.0);
  CHECK(cosine(table, "x", "diag") == doctest::Approx(0.7071067811865475).epsilon(1e-12));
  CHECK(cosine(table, "x", "x") == 1.0);
  CHECK_THROWS_AS(cosine(table, "x", "zero"), ValidationError);
  CHECK_THROWS_AS(cosine(table, "x", "missing"), LookupError);
}

TEST_CASE("top_k ranks by similarity with lexicographic ties") {
  EmbeddingTable table = table2({{"q", {1.0, 0.0}},
                                 {"b", {3.0, 0.0}},
                                 {"a", {2.0, 0.0}},
                                 {"diag", {1.0, 1.0}},
                                 {"anti", {-1.0, 0.0}},
                                 {"zero", {0.0, 0.0}}});
  NeighborResult result = top_k_neighbors(table, "q", 10);
  REQUIRE(result.neighbors.size() == 4);  // self and zero-norm excluded
  CHECK(result.neighbors[0].word == "a");  // cosine 1, tie broken by name
  CHECK(result.neighbors[1].word == "b");
  CHECK(result.neighbors[2].word == "diag");
  CHECK(result.neighbors[3].word == "anti");
  CHECK(result.neighbors[0].similarity == 1.0);
  CHECK(result.neighbors[3].similarity == -1.0);
  CHECK(result.cross_language == -1);  // untagged query

  CHECK(top_k_neighbors(table, "q", 0).neighbors.empty());
  CHECK(top_k_neighbors(table, "q", 2).neighbors.size() == 2);
  CHECK_THROWS_AS(top_k_neighbors(table, "q", -1), ValidationError);
  CHECK_THROWS_AS(top_k_neighbors(table, "zero", 3), ValidationError);
  CHECK_THROWS_AS(top_k_neighbors(table, "nope", 3), LookupError);
}

TEST_CASE("top_k counts cross-language neighbors for tagged queries") {
  EmbeddingTable table = table2({{"en:q", {1.0, 0.0}},
                                 {"de:a", {1.0, 0.1}},
                                 {"en:b", {1.0, 0.2}},
                                 {"plain", {1.0, 0.3}},
                                 {"fr:c", {-1.0, 0.0}}});
  NeighborResult result = top_k_neighbors(table, "en:q", 3);
  REQUIRE(result.neighbors.size() == 3);
  CHECK(result.neighbors[0].word == "de:a");
  CHECK(result.neighbors[1].word == "en:b");
  CHECK(result.neighbors[2].word == "plain");
  CHECK(result.cross_language == 1);

  NeighborResult all = top_k_neighbors(table, "en:q", 4);
  CHECK(all.cross_language == 2);  // de:a and fr:c
}

TEST_CASE("bivcd merge permutes the concatenated pair deterministically") {
  std::vector<std::vector<std::string>> source = {{"a", "b", "c"}, {"d"}, {}};
  std::vector<std::vector<std::string>> target = {{"x", "y"}, {"z"}, {}};
  auto merged = bivcd_shuffle_merge(source, target, 17);
  REQUIRE(merged.size() == 3);
  CHECK(merged[0].size() == 5);
  CHECK(merged[1].size() == 2);
  CHECK(merged[2].empty());
  for (size_t i = 0; i < merged.size(); ++i) {
    std::vector<std::string> want = source[i];
    want.insert(want.end(), target[i].begin(), target[i].end());
    std::vector<std::string> got = merged[i];
    std::sort(want.begin(), want.end());
    std::sort(got.begin(), got.end());
    CHECK(got == want);
  }
  CHECK(merged == bivcd_shuffle_merge(source, target, 17));

  // With 20 tokens per line, two seeds almost surely disagree somewhere.
  std::vector<std::string> many;
  for (int i = 0; i < 20; ++i) many.push_back("t" + std::to_string(i));
  auto one = bivcd_shuffle_merge({many}, {many}, 1);
  auto two = bivcd_shuffle_merge({many}, {many}, 2);
  CHECK(one != two);

  CHECK_THROWS_WITH_AS(bivcd_shuffle_merge(source, {{"x"}}, 0),
                       "bitext sides differ: 3 vs 1 sentences", ValidationError);
}

}  // TEST_SUITE
