#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "relation_labels.hpp"

namespace cprex {

enum class EntityKind : std::uint8_t { CHEMICAL, GENE };

std::string_view entity_kind_name(EntityKind kind);

// One annotated mention. Offsets are Unicode code points into the document's
// full_text(), start inclusive, end exclusive.
struct EntityMention {
  std::string mention_id;  // "T1", "T2", ...
  EntityKind kind = EntityKind::CHEMICAL;
  std::size_t start = 0;
  std::size_t end = 0;
  std::string surface;
};

struct GoldRelation {
  RelationLabel relation = RelationLabel::NO_RELATION;
  std::string arg1;  // mention_id of a CHEMICAL
  std::string arg2;  // mention_id of a GENE
};

// One abstract with its mentions and gold relations. full_text() is
// title + '\t' + body and is the single offset reference for all mentions.
struct Document {
  std::string doc_id;
  std::string title;
  std::string body;
  std::vector<EntityMention> entities;
  std::vector<GoldRelation> gold_relations;

  std::string full_text() const { return title + "\t" + body; }
  const EntityMention* find_mention(std::string_view mention_id) const;
};

struct Corpus {
  std::vector<Document> documents;
  // Parse-time warnings, e.g. dropped duplicate gold relations.
  std::vector<std::string> warnings;
  std::size_t duplicate_relations_dropped = 0;
};

// Informational corpus summary; never mutates anything.
struct ValidationReport {
  std::size_t documents = 0;
  std::map<std::string, std::size_t> entities_by_kind;
  std::map<std::string, std::size_t> relations_by_label;
  std::size_t overlapping_entity_pairs = 0;
  // Gold relations whose arguments never share a sentence. Only known once
  // the sentencizer has run; see pipeline.
  std::optional<std::size_t> cross_sentence_relations;
  std::size_t duplicate_relations_dropped = 0;
  std::vector<std::string> warnings;

  std::string to_json() const;
};

// Parses the three tab-separated corpus files. relations_file may be empty
// for unlabeled test corpora. Throws DataError with file/line context on any
// malformed record.
Corpus parse_corpus(const std::string& abstracts_file,
                    const std::string& entities_file,
                    const std::string& relations_file = {});

// Inverse of parse_corpus. Writes documents in corpus order, mentions and
// relations in their stored order. relations_file may be empty to skip.
void serialize_corpus(const Corpus& corpus, const std::string& abstracts_file,
                      const std::string& entities_file,
                      const std::string& relations_file = {});

ValidationReport validate_corpus(const Corpus& corpus);

}  // namespace cprex
