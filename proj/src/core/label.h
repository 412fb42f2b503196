// xlam -- cross-lingual argument mining toolkit
//
// BIO label inventory. The label space over component types t1..tn is
// ordered B-t1, I-t1, B-t2, I-t2, ..., O; integer label ids follow that
// order and are used wherever dense indexing matters (tagger, eval).
#ifndef XLAM_CORE_LABEL_H_
#define XLAM_CORE_LABEL_H_

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace xlam {

enum class BioKind : uint8_t { kB, kI, kO };

// A token label: O, or B/I paired with a component-type index.
struct Label {
  BioKind kind = BioKind::kO;
  int type = -1;  // index into LabelSpace::component_types(); -1 iff kind == O

  static Label O() { return Label{BioKind::kO, -1}; }
  static Label B(int type) { return Label{BioKind::kB, type}; }
  static Label I(int type) { return Label{BioKind::kI, type}; }

  bool is_o() const { return kind == BioKind::kO; }
  bool operator==(const Label &other) const = default;
};

class LabelSpace {
 public:
  LabelSpace() = default;
  // Throws ValidationError on empty, duplicate, or whitespace-bearing names.
  explicit LabelSpace(std::vector<std::string> component_types);

  // MajorClaim / Claim / Premise, the persuasive-essay inventory.
  static LabelSpace essay_types();

  const std::vector<std::string> &component_types() const { return types_; }
  int num_types() const { return static_cast<int>(types_.size()); }
  int num_labels() const { return 2 * num_types() + 1; }

  // -1 if the name is not in the inventory.
  int type_index(std::string_view name) const;
  const std::string &type_name(int type) const { return types_[type]; }

  int label_id(const Label &label) const {
    return label.is_o() ? 2 * num_types() : 2 * label.type + (label.kind == BioKind::kI ? 1 : 0);
  }
  int o_id() const { return 2 * num_types(); }
  Label label_from_id(int id) const;

  // "B-Claim", "I-Premise", "O".
  std::string label_name(const Label &label) const;
  std::string label_name_from_id(int id) const { return label_name(label_from_id(id)); }
  // Throws ParseError on labels outside the space (the message names the label).
  Label parse_label(std::string_view text) const;

  bool operator==(const LabelSpace &other) const { return types_ == other.types_; }

 private:
  std::vector<std::string> types_;
};

}  // namespace xlam

#endif  // XLAM_CORE_LABEL_H_
