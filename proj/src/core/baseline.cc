// xlam -- cross-lingual argument mining toolkit
#include "core/baseline.h"

#include <cmath>
#include <cstdio>
#include <sstream>

#include "core/error.h"
#include "core/rng.h"

namespace xlam {

namespace {

void check_distribution(const ComponentDistribution &dist, const LabelSpace &space) {
  if (dist.num_types() != space.num_types()) {
    throw ValidationError("distribution covers " + std::to_string(dist.num_types()) +
                          " types but label space has " + std::to_string(space.num_types()));
  }
  double sum = 0.0;
  for (double p : dist.probabilities) {
    if (p < 0.0) {
      throw ValidationError("distribution has a negative probability");
    }
    sum += p;
  }
  if (std::fabs(sum - 1.0) > 1e-9) {
    throw ValidationError("distribution sums to " + std::to_string(sum) + ", expected 1");
  }
}

}  // namespace

ComponentDistribution estimate_distribution(const Corpus &train_dev, const LabelSpace &space) {
  if (train_dev.num_sentences() == 0) {
    throw ValidationError("cannot estimate a distribution from an empty corpus");
  }
  std::vector<long> counts(static_cast<size_t>(space.num_types()) + 1, 0);
  long total = 0;
  for (const Document &doc : train_dev.documents) {
    for (const Sentence &sentence : doc.sentences) {
      std::vector<Component> components = extract_components(sentence);
      if (components.empty()) {
        ++counts.back();
        ++total;
      } else {
        for (const Component &component : components) {
          ++counts[static_cast<size_t>(component.type)];
          ++total;
        }
      }
    }
  }
  ComponentDistribution dist;
  dist.probabilities.resize(counts.size());
  for (size_t i = 0; i < counts.size(); ++i) {
    dist.probabilities[i] = static_cast<double>(counts[i]) / static_cast<double>(total);
  }
  return dist;
}

Corpus sample_baseline_labels(const Corpus &test, const ComponentDistribution &dist,
                              const LabelSpace &space, uint64_t seed) {
  check_distribution(dist, space);
  Rng rng(seed);
  Corpus out = test;
  for (Document &doc : out.documents) {
    for (Sentence &sentence : doc.sentences) {
      double u = rng.next_unit();
      // Walk the cumulative distribution; the final outcome absorbs rounding.
      int outcome = static_cast<int>(dist.probabilities.size()) - 1;
      double cumulative = 0.0;
      for (size_t i = 0; i + 1 < dist.probabilities.size(); ++i) {
        cumulative += dist.probabilities[i];
        if (u < cumulative) {
          outcome = static_cast<int>(i);
          break;
        }
      }
      bool none = outcome == dist.num_types();
      for (size_t i = 0; i < sentence.tokens.size(); ++i) {
        if (none) {
          sentence.tokens[i].label = Label::O();
        } else {
          sentence.tokens[i].label = i == 0 ? Label::B(outcome) : Label::I(outcome);
        }
      }
      if (dist.last_token_o && !sentence.tokens.empty()) {
        sentence.tokens.back().label = Label::O();
      }
    }
  }
  return out;
}

std::string distribution_text(const ComponentDistribution &dist, const LabelSpace &space) {
  char buf[64];
  std::ostringstream out;
  for (int t = 0; t < dist.num_types(); ++t) {
    std::snprintf(buf, sizeof(buf), "%.6f", dist.p_type(t));
    out << "p." << space.type_name(t) << '=' << buf << '\n';
  }
  std::snprintf(buf, sizeof(buf), "%.6f", dist.p_none());
  out << "p.none=" << buf << '\n';
  out << "last_token_o=" << (dist.last_token_o ? 1 : 0) << '\n';
  return out.str();
}

}  // namespace xlam
