#include "relation_labels.hpp"

namespace cprex {

namespace {

constexpr std::array<std::string_view, kNumLabels> kNames = {
    "NO_RELATION",
    "ACTIVATOR",
    "AGONIST",
    "AGONIST-ACTIVATOR",
    "AGONIST-INHIBITOR",
    "ANTAGONIST",
    "DIRECT-REGULATOR",
    "INDIRECT-DOWNREGULATOR",
    "INDIRECT-UPREGULATOR",
    "INHIBITOR",
    "PART-OF",
    "PRODUCT-OF",
    "SUBSTRATE",
    "SUBSTRATE_PRODUCT-OF",
};

constexpr std::array<std::string_view, kNumLabels> kAnswerForms = {
    "no relation",
    "activator",
    "agonist",
    "agonist-activator",
    "agonist-inhibitor",
    "antagonist",
    "direct-regulator",
    "indirect-downregulator",
    "indirect-upregulator",
    "inhibitor",
    "part-of",
    "product-of",
    "substrate",
    "substrate_product-of",
};

}  // namespace

std::string_view label_name(RelationLabel label) {
  return kNames[static_cast<std::size_t>(label)];
}

std::string_view label_answer_form(RelationLabel label) {
  return kAnswerForms[static_cast<std::size_t>(label)];
}

std::optional<RelationLabel> label_from_name(std::string_view name) {
  for (std::size_t i = 0; i < kNames.size(); ++i)
    if (kNames[i] == name) return static_cast<RelationLabel>(i);
  return std::nullopt;
}

std::optional<RelationLabel> label_from_index(int index) {
  if (index < 0 || index >= static_cast<int>(kNumLabels)) return std::nullopt;
  return static_cast<RelationLabel>(index);
}

const std::array<RelationLabel, kNumLabels>& all_labels() {
  static const auto labels = [] {
    std::array<RelationLabel, kNumLabels> out{};
    for (std::size_t i = 0; i < kNumLabels; ++i)
      out[i] = static_cast<RelationLabel>(i);
    return out;
  }();
  return labels;
}

const std::array<RelationLabel, kNumPositiveLabels>& positive_labels() {
  static const auto labels = [] {
    std::array<RelationLabel, kNumPositiveLabels> out{};
    for (std::size_t i = 0; i < kNumPositiveLabels; ++i)
      out[i] = static_cast<RelationLabel>(i + 1);
    return out;
  }();
  return labels;
}

std::string accepted_label_names() {
  std::string out;
  for (std::size_t i = 1; i < kNames.size(); ++i) {
    if (i > 1) out += ", ";
    out += kNames[i];
  }
  return out;
}

}  // namespace cprex
