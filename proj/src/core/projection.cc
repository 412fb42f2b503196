// xlam -- cross-lingual argument mining toolkit
#include "core/projection.h"

#include <algorithm>
#include <sstream>

#include <json.hpp>

#include "core/error.h"

namespace xlam {

namespace {

const char *reason_name(DropRecord::Reason reason) {
  return reason == DropRecord::Reason::kUnaligned ? "unaligned" : "squeezed";
}

}  // namespace

void ProjectionReport::merge(ProjectionReport other) {
  components_total += other.components_total;
  components_projected += other.components_projected;
  components_dropped += other.components_dropped;
  collisions_resolved += other.collisions_resolved;
  drops.insert(drops.end(), std::make_move_iterator(other.drops.begin()),
               std::make_move_iterator(other.drops.end()));
}

std::string report_text(const ProjectionReport &report, const LabelSpace &space) {
  long unaligned = 0;
  long squeezed = 0;
  for (const DropRecord &drop : report.drops) {
    if (drop.reason == DropRecord::Reason::kUnaligned) {
      ++unaligned;
    } else {
      ++squeezed;
    }
  }
  std::ostringstream out;
  out << "components.total=" << report.components_total << '\n';
  out << "components.projected=" << report.components_projected << '\n';
  out << "components.dropped=" << report.components_dropped << '\n';
  out << "collisions.resolved=" << report.collisions_resolved << '\n';
  out << "drops.unaligned=" << unaligned << '\n';
  out << "drops.squeezed=" << squeezed << '\n';
  for (const DropRecord &drop : report.drops) {
    out << "drop doc=" << drop.doc_id << " sentence=" << drop.sentence_index
        << " type=" << space.type_name(drop.source.type) << " span=" << drop.source.start
        << "-" << drop.source.end << " reason=" << reason_name(drop.reason) << '\n';
  }
  return out.str();
}

std::string report_json(const ProjectionReport &report, const LabelSpace &space) {
  nlohmann::ordered_json root;
  root["components"]["total"] = report.components_total;
  root["components"]["projected"] = report.components_projected;
  root["components"]["dropped"] = report.components_dropped;
  root["collisions_resolved"] = report.collisions_resolved;
  nlohmann::ordered_json drops = nlohmann::ordered_json::array();
  for (const DropRecord &drop : report.drops) {
    nlohmann::ordered_json entry;
    entry["doc"] = drop.doc_id;
    entry["sentence"] = drop.sentence_index;
    entry["type"] = space.type_name(drop.source.type);
    entry["start"] = drop.source.start;
    entry["end"] = drop.source.end;
    entry["reason"] = reason_name(drop.reason);
    drops.push_back(std::move(entry));
  }
  root["drops"] = std::move(drops);
  return root.dump(2) + "\n";
}

std::optional<ProjectedSpan> project_component(const Component &component,
                                               const SentenceAlignment &alignment) {
  std::vector<int> targets = alignment.aligned_target_indices(component.start, component.end);
  if (targets.empty()) {
    return std::nullopt;
  }
  ProjectedSpan span;
  span.type = component.type;
  span.t_first = targets.front();
  span.t_last = targets.back();
  span.source = component;
  return span;
}

std::vector<Label> project_sentence_pair(const Sentence &source, int target_len,
                                         const SentenceAlignment &alignment,
                                         ProjectionReport *report) {
  if (static_cast<int>(source.tokens.size()) != alignment.source_len) {
    throw ValidationError("source sentence length " + std::to_string(source.tokens.size()) +
                          " does not match alignment source length " +
                          std::to_string(alignment.source_len));
  }
  if (target_len != alignment.target_len) {
    throw ValidationError("target sentence length " + std::to_string(target_len) +
                          " does not match alignment target length " +
                          std::to_string(alignment.target_len));
  }

  std::vector<Component> components = extract_components(source);
  report->components_total += static_cast<long>(components.size());

  std::vector<ProjectedSpan> spans;
  for (const Component &component : components) {
    std::optional<ProjectedSpan> span = project_component(component, alignment);
    if (span.has_value()) {
      spans.push_back(*span);
    } else {
      ++report->components_dropped;
      DropRecord drop;
      drop.source = component;
      drop.reason = DropRecord::Reason::kUnaligned;
      report->drops.push_back(std::move(drop));
    }
  }

  // Resolve overlaps left to right; source start breaks ties between spans
  // that land on the same target index.
  std::stable_sort(spans.begin(), spans.end(), [](const ProjectedSpan &a, const ProjectedSpan &b) {
    if (a.t_first != b.t_first) {
      return a.t_first < b.t_first;
    }
    return a.source.start < b.source.start;
  });

  std::vector<Label> labels(static_cast<size_t>(target_len), Label::O());
  int occupied_end = -1;
  for (ProjectedSpan &span : spans) {
    bool moved = false;
    if (span.t_first <= occupied_end) {
      span.t_first = occupied_end + 1;
      moved = true;
    }
    if (span.t_first > span.t_last) {
      ++report->components_dropped;
      DropRecord drop;
      drop.source = span.source;
      drop.reason = DropRecord::Reason::kSqueezed;
      report->drops.push_back(std::move(drop));
      continue;
    }
    ++report->components_projected;
    if (moved) {
      ++report->collisions_resolved;
    }
    labels[static_cast<size_t>(span.t_first)] = Label::B(span.type);
    for (int i = span.t_first + 1; i <= span.t_last; ++i) {
      labels[static_cast<size_t>(i)] = Label::I(span.type);
    }
    occupied_end = span.t_last;
  }
  return labels;
}

std::pair<Corpus, ProjectionReport> project_corpus(const Corpus &source,
                                                   const TokenCorpus &target,
                                                   const BitextAlignment &alignments) {
  long source_sentences = source.num_sentences();
  if (static_cast<long>(target.sentences.size()) != source_sentences) {
    throw ValidationError("target corpus has " + std::to_string(target.sentences.size()) +
                          " sentences but source corpus has " + std::to_string(source_sentences));
  }
  if (static_cast<long>(alignments.sentences.size()) != source_sentences) {
    throw ValidationError("alignment has " + std::to_string(alignments.sentences.size()) +
                          " sentences but source corpus has " + std::to_string(source_sentences));
  }

  Corpus projected;
  projected.label_space = source.label_space;
  ProjectionReport report;
  long flat = 0;
  for (const Document &doc : source.documents) {
    Document out_doc;
    out_doc.id = doc.id;
    for (const Sentence &sentence : doc.sentences) {
      const std::vector<std::string> &target_tokens =
          target.sentences[static_cast<size_t>(flat)];
      const SentenceAlignment &alignment = alignments.sentences[static_cast<size_t>(flat)];
      size_t drops_before = report.drops.size();
      std::vector<Label> labels;
      try {
        labels = project_sentence_pair(sentence, static_cast<int>(target_tokens.size()),
                                       alignment, &report);
      } catch (const ValidationError &err) {
        throw ValidationError("sentence " + std::to_string(flat) + " (doc '" + doc.id +
                              "'): " + err.what());
      }
      for (size_t i = drops_before; i < report.drops.size(); ++i) {
        report.drops[i].doc_id = doc.id;
        report.drops[i].sentence_index = flat;
      }
      Sentence out_sentence;
      out_sentence.tokens.reserve(target_tokens.size());
      for (size_t i = 0; i < target_tokens.size(); ++i) {
        out_sentence.tokens.push_back(Token{target_tokens[i], labels[i]});
      }
      out_doc.sentences.push_back(std::move(out_sentence));
      ++flat;
    }
    projected.documents.push_back(std::move(out_doc));
  }
  return {std::move(projected), std::move(report)};
}

}  // namespace xlam
