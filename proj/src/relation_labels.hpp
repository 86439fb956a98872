#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace cprex {

// The 14-way label set: NO_RELATION at index 0, the 13 relation types in
// alphabetical order at 1..13. The integer indices are a toolkit convention
// and are stable across releases.
enum class RelationLabel : std::uint8_t {
  NO_RELATION = 0,
  ACTIVATOR = 1,
  AGONIST = 2,
  AGONIST_ACTIVATOR = 3,
  AGONIST_INHIBITOR = 4,
  ANTAGONIST = 5,
  DIRECT_REGULATOR = 6,
  INDIRECT_DOWNREGULATOR = 7,
  INDIRECT_UPREGULATOR = 8,
  INHIBITOR = 9,
  PART_OF = 10,
  PRODUCT_OF = 11,
  SUBSTRATE = 12,
  SUBSTRATE_PRODUCT_OF = 13,
};

inline constexpr std::size_t kNumLabels = 14;
inline constexpr std::size_t kNumPositiveLabels = 13;

// Canonical corpus spelling, e.g. "INDIRECT-DOWNREGULATOR".
std::string_view label_name(RelationLabel label);

// Lowercased answer-string form used by the generative encoding,
// e.g. "substrate_product-of".
std::string_view label_answer_form(RelationLabel label);

std::optional<RelationLabel> label_from_name(std::string_view name);
std::optional<RelationLabel> label_from_index(int index);

inline int label_index(RelationLabel label) {
  return static_cast<int>(label);
}

// All 14 labels in index order.
const std::array<RelationLabel, kNumLabels>& all_labels();

// The 13 positive labels in index order.
const std::array<RelationLabel, kNumPositiveLabels>& positive_labels();

// Comma-separated list of accepted corpus label names, for error messages.
std::string accepted_label_names();

}  // namespace cprex
