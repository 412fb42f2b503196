// xlam -- cross-lingual argument mining toolkit

#include "core/label.h"

#include <algorithm>

#include "core/error.h"

namespace xlam {

namespace {
bool has_whitespace(std::string_view s) {
  return s.find_first_of(" \t\r\n\f\v") != std::string_view::npos;
}
}  // namespace

LabelSpace::LabelSpace(std::vector<std::string> component_types)
    : types_(std::move(component_types)) {
  for (size_t i = 0; i < types_.size(); ++i) {
    if (types_[i].empty()) {
      throw ValidationError("component type name must not be empty");
    }
    if (has_whitespace(types_[i])) {
      throw ValidationError("component type name '" + types_[i] +
                            "' must not contain whitespace");
    }
    for (size_t j = i + 1; j < types_.size(); ++j) {
      if (types_[i] == types_[j]) {
        throw ValidationError("duplicate component type '" + types_[i] + "'");
      }
    }
  }
}

LabelSpace LabelSpace::essay_types() {
  return LabelSpace({"MajorClaim", "Claim", "Premise"});
}

int LabelSpace::type_index(std::string_view name) const {
  for (size_t i = 0; i < types_.size(); ++i) {
    if (types_[i] == name) return static_cast<int>(i);
  }
  return -1;
}

Label LabelSpace::label_from_id(int id) const {
  if (id == o_id()) return Label::O();
  return (id % 2 == 0) ? Label::B(id / 2) : Label::I(id / 2);
}

std::string LabelSpace::label_name(const Label &label) const {
  if (label.is_o()) return "O";
  return (label.kind == BioKind::kB ? "B-" : "I-") + types_[label.type];
}

Label LabelSpace::parse_label(std::string_view text) const {
  if (text == "O") return Label::O();
  if (text.size() >= 3 && (text[0] == 'B' || text[0] == 'I') && text[1] == '-') {
    const int type = type_index(text.substr(2));
    if (type >= 0) {
      return text[0] == 'B' ? Label::B(type) : Label::I(type);
    }
  }
  throw ParseError("unknown label '" + std::string(text) + "'");
}

}  // namespace xlam
