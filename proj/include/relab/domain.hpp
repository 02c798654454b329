#pragma once

// Core vocabulary of the relevance-judgment task: four-level labels, the
// binary collapse, the attribute-mismatch taxonomy, sample records and the
// canonical response format. Everything here is an immutable value type.

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace relab::domain {

enum class Label : int { L1 = 1, L2 = 2, L3 = 3, L4 = 4 };

enum class BinaryClass { Irrelevant, Relevant };

constexpr Label kAllLabels[] = {Label::L1, Label::L2, Label::L3, Label::L4};

// L1, L2 -> Irrelevant; L3, L4 -> Relevant.
BinaryClass binary_class(Label label);

std::string to_string(Label label);
std::string to_string(BinaryClass c);
std::optional<Label> parse_label(std::string_view s);

// The closed set T_pre of attribute-mismatch dimensions. The engine ships a
// canonical 18-name list; alternative lists may be supplied but must still
// contain exactly 18 distinct names.
class MismatchTaxonomy {
 public:
  explicit MismatchTaxonomy(std::vector<std::string> names);

  static const MismatchTaxonomy& canonical();
  static const std::vector<std::string>& canonical_names();

  bool contains(std::string_view name) const;
  int id_of(std::string_view name) const;  // -1 when absent
  const std::string& name_of(int id) const;
  size_t size() const { return names_.size(); }
  const std::vector<std::string>& names() const { return names_; }

 private:
  std::vector<std::string> names_;
};

enum class FreqTier { High, Mid, Tail };
enum class Subset { General, LongTailHard, VisualSalience };
enum class HardType { MA, NE, AL, KD, RD };

std::string to_string(FreqTier t);
std::string to_string(Subset s);
std::string to_string(HardType h);
std::optional<FreqTier> parse_freq_tier(std::string_view s);
std::optional<Subset> parse_subset(std::string_view s);
std::optional<HardType> parse_hard_type(std::string_view s);

// One (query, item, label, metadata) record; the unit of all pipelines.
struct Sample {
  std::string id;
  std::string query;
  std::string item_title;
  std::vector<std::pair<std::string, std::string>> cpv;
  std::string sku;
  std::optional<std::string> image_caption;
  Label label = Label::L4;
  std::string industry;
  FreqTier freq_tier = FreqTier::Mid;
  Subset subset = Subset::General;
  std::optional<HardType> hard_type;  // present iff subset == LongTailHard
  std::vector<std::string> rule_checklist;

  bool operator==(const Sample&) const = default;
};

// Result of parsing a raw model response against the
// <think>...</think><answer>...</answer> template.
struct ParsedResponse {
  std::string think;
  std::optional<Label> answer;
  std::optional<std::string> mismatch;
  bool well_formed = false;
};

// JSONL schema: one Sample per line, field names exactly as in Sample.
// Unknown fields are ignored on read and never emitted on write.
std::string sample_to_json_line(const Sample& s);
Sample sample_from_json_line(const std::string& line);
std::vector<Sample> read_samples_jsonl(const std::string& path);
void write_samples_jsonl(const std::string& path, const std::vector<Sample>& samples);

}  // namespace relab::domain
