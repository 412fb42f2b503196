// xlam -- cross-lingual argument mining toolkit

#include "core/corpus.h"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <unordered_set>

#include "core/error.h"
#include "core/rng.h"
#include "json.hpp"

namespace xlam {

long Corpus::num_sentences() const {
  long n = 0;
  for (const auto &doc : documents) n += static_cast<long>(doc.sentences.size());
  return n;
}

long Corpus::num_tokens() const {
  long n = 0;
  for (const auto &doc : documents) {
    for (const auto &sentence : doc.sentences) n += sentence.size();
  }
  return n;
}

BioVerdict validate_bio(const Sentence &sentence) {
  int prev_type = -1;  // component type of the previous token, -1 after O/start
  for (int i = 0; i < sentence.size(); ++i) {
    const Label &label = sentence.tokens[i].label;
    if (label.kind == BioKind::kI) {
      if (prev_type < 0) {
        return {false, i, "I without preceding B/I of same type"};
      }
      if (prev_type != label.type) {
        return {false, i, "type switch inside span"};
      }
    }
    prev_type = label.is_o() ? -1 : label.type;
  }
  return {};
}

int repair_bio(Sentence *sentence) {
  int changed = 0;
  int prev_type = -1;
  for (auto &token : sentence->tokens) {
    Label &label = token.label;
    if (label.kind == BioKind::kI && prev_type != label.type) {
      label.kind = BioKind::kB;
      ++changed;
    }
    prev_type = label.is_o() ? -1 : label.type;
  }
  return changed;
}

std::vector<Component> extract_components(const Sentence &sentence) {
  const BioVerdict verdict = validate_bio(sentence);
  if (!verdict.valid) {
    throw ValidationError("invalid BIO at token " + std::to_string(verdict.index) +
                          ": " + verdict.reason);
  }
  std::vector<Component> components;
  for (int i = 0; i < sentence.size(); ++i) {
    const Label &label = sentence.tokens[i].label;
    if (label.kind == BioKind::kB) {
      components.push_back({label.type, i, i});
    } else if (label.kind == BioKind::kI) {
      components.back().end = i;
    }
  }
  return components;
}

long CorpusStats::components_total() const {
  long n = 0;
  for (long c : components_by_type) n += c;
  return n;
}

CorpusStats corpus_stats(const Corpus &corpus) {
  CorpusStats stats;
  stats.documents = corpus.num_documents();
  stats.components_by_type.assign(corpus.label_space.num_types(), 0);
  for (const auto &doc : corpus.documents) {
    for (const auto &sentence : doc.sentences) {
      ++stats.sentences;
      stats.tokens += sentence.size();
      for (const Component &component : extract_components(sentence)) {
        ++stats.components_by_type[component.type];
      }
    }
  }
  return stats;
}

std::string stats_text(const CorpusStats &stats, const LabelSpace &space) {
  std::ostringstream out;
  out << "documents=" << stats.documents << "\n";
  out << "sentences=" << stats.sentences << "\n";
  out << "tokens=" << stats.tokens << "\n";
  for (int t = 0; t < space.num_types(); ++t) {
    out << "components." << space.type_name(t) << "="
        << stats.components_by_type[t] << "\n";
  }
  out << "components.total=" << stats.components_total() << "\n";
  return out.str();
}

std::string stats_json(const CorpusStats &stats, const LabelSpace &space) {
  nlohmann::json j;
  j["documents"] = stats.documents;
  j["sentences"] = stats.sentences;
  j["tokens"] = stats.tokens;
  nlohmann::json comps = nlohmann::json::object();
  for (int t = 0; t < space.num_types(); ++t) {
    comps[space.type_name(t)] = stats.components_by_type[t];
  }
  j["components"] = comps;
  j["components_total"] = stats.components_total();
  return j.dump(2) + "\n";
}

SplitResult split_corpus(const Corpus &corpus,
                         const std::vector<std::string> &test_ids,
                         double dev_fraction, uint64_t seed) {
  if (!(dev_fraction >= 0.0 && dev_fraction < 1.0)) {
    throw ValidationError("dev_fraction must lie in [0, 1)");
  }
  std::unordered_set<std::string> wanted(test_ids.begin(), test_ids.end());
  for (const auto &id : wanted) {
    const bool known = std::any_of(
        corpus.documents.begin(), corpus.documents.end(),
        [&](const Document &doc) { return doc.id == id; });
    if (!known) {
      throw ValidationError("unknown document id in test list: '" + id + "'");
    }
  }

  std::vector<size_t> remainder;
  for (size_t i = 0; i < corpus.documents.size(); ++i) {
    if (!wanted.count(corpus.documents[i].id)) remainder.push_back(i);
  }

  const size_t dev_count =
      static_cast<size_t>(std::llround(dev_fraction * static_cast<double>(remainder.size())));
  std::vector<size_t> shuffled = remainder;
  Rng rng(seed);
  rng.shuffle(&shuffled);
  std::unordered_set<size_t> dev_set(shuffled.begin(),
                                     shuffled.begin() + static_cast<long>(dev_count));

  SplitResult result;
  result.train.label_space = corpus.label_space;
  result.dev.label_space = corpus.label_space;
  result.test.label_space = corpus.label_space;
  for (size_t i = 0; i < corpus.documents.size(); ++i) {
    const Document &doc = corpus.documents[i];
    if (wanted.count(doc.id)) {
      result.test.documents.push_back(doc);
    } else if (dev_set.count(i)) {
      result.dev.documents.push_back(doc);
    } else {
      result.train.documents.push_back(doc);
    }
  }
  return result;
}

}  // namespace xlam
