#include "corpus.hpp"

#include <set>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include <nlohmann/json.hpp>

#include "errors.hpp"
#include "text_util.hpp"

namespace cprex {

namespace {

using json = nlohmann::ordered_json;

std::string context(const std::string& file, std::size_t line_no) {
  return file + ":" + std::to_string(line_no);
}

std::size_t parse_offset(const std::string& field, const std::string& file,
                         std::size_t line_no) {
  try {
    std::size_t pos = 0;
    const long long v = std::stoll(field, &pos);
    if (pos != field.size() || v < 0) throw std::invalid_argument(field);
    return static_cast<std::size_t>(v);
  } catch (const std::exception&) {
    throw DataError(context(file, line_no) + ": bad character offset '" +
                    field + "'");
  }
}

std::string strip_arg_prefix(const std::string& field, const char* prefix,
                             const std::string& file, std::size_t line_no) {
  if (field.rfind(prefix, 0) != 0)
    throw DataError(context(file, line_no) + ": expected '" +
                    std::string(prefix) + "<mention_id>', got '" + field +
                    "'");
  return field.substr(std::string(prefix).size());
}

}  // namespace

std::string_view entity_kind_name(EntityKind kind) {
  return kind == EntityKind::CHEMICAL ? "CHEMICAL" : "GENE";
}

const EntityMention* Document::find_mention(std::string_view mention_id) const {
  for (const auto& m : entities)
    if (m.mention_id == mention_id) return &m;
  return nullptr;
}

Corpus parse_corpus(const std::string& abstracts_file,
                    const std::string& entities_file,
                    const std::string& relations_file) {
  Corpus corpus;
  std::unordered_map<std::string, std::size_t> doc_index;

  std::size_t line_no = 0;
  for (const auto& line : text::read_lines(abstracts_file)) {
    ++line_no;
    if (line.empty()) continue;
    const auto cols = text::split(line, '\t');
    if (cols.size() != 3)
      throw DataError(context(abstracts_file, line_no) +
                      ": expected 3 tab-separated columns, got " +
                      std::to_string(cols.size()));
    Document doc;
    doc.doc_id = cols[0];
    doc.title = cols[1];
    doc.body = cols[2];
    if (doc.doc_id.empty())
      throw DataError(context(abstracts_file, line_no) + ": empty doc_id");
    if (doc_index.count(doc.doc_id))
      throw DataError(context(abstracts_file, line_no) + ": duplicate doc_id '" +
                      doc.doc_id + "'");
    doc_index[doc.doc_id] = corpus.documents.size();
    corpus.documents.push_back(std::move(doc));
  }

  line_no = 0;
  for (const auto& line : text::read_lines(entities_file)) {
    ++line_no;
    if (line.empty()) continue;
    const auto cols = text::split(line, '\t');
    if (cols.size() != 6)
      throw DataError(context(entities_file, line_no) +
                      ": expected 6 tab-separated columns, got " +
                      std::to_string(cols.size()));
    const auto it = doc_index.find(cols[0]);
    if (it == doc_index.end())
      throw DataError(context(entities_file, line_no) +
                      ": unknown doc_id '" + cols[0] + "'");
    Document& doc = corpus.documents[it->second];

    EntityMention m;
    m.mention_id = cols[1];
    const std::string& kind = cols[2];
    if (kind == "CHEMICAL") {
      m.kind = EntityKind::CHEMICAL;
    } else if (kind == "GENE" || kind == "GENE-Y" || kind == "GENE-N") {
      m.kind = EntityKind::GENE;
    } else {
      throw DataError(context(entities_file, line_no) + ": unknown kind '" +
                      kind +
                      "' (accepted: CHEMICAL, GENE, GENE-Y, GENE-N)");
    }
    m.start = parse_offset(cols[3], entities_file, line_no);
    m.end = parse_offset(cols[4], entities_file, line_no);
    m.surface = cols[5];

    const std::string full = doc.full_text();
    const std::size_t text_len = text::codepoint_count(full);
    if (m.start >= m.end || m.end > text_len)
      throw DataError("doc " + doc.doc_id + " mention " + m.mention_id +
                      ": offsets [" + std::to_string(m.start) + "," +
                      std::to_string(m.end) + ") out of range (text length " +
                      std::to_string(text_len) + ")");
    const std::string sliced = text::codepoint_slice(full, m.start, m.end);
    if (sliced != m.surface)
      throw DataError("doc " + doc.doc_id + " mention " + m.mention_id +
                      ": offsets slice to '" + sliced +
                      "' but surface column says '" + m.surface + "'");
    if (doc.find_mention(m.mention_id))
      throw DataError("doc " + doc.doc_id + ": duplicate mention_id '" +
                      m.mention_id + "'");
    doc.entities.push_back(std::move(m));
  }

  if (!relations_file.empty()) {
    std::unordered_set<std::string> seen;
    line_no = 0;
    for (const auto& line : text::read_lines(relations_file)) {
      ++line_no;
      if (line.empty()) continue;
      const auto cols = text::split(line, '\t');
      if (cols.size() != 4)
        throw DataError(context(relations_file, line_no) +
                        ": expected 4 tab-separated columns, got " +
                        std::to_string(cols.size()));
      const auto it = doc_index.find(cols[0]);
      if (it == doc_index.end())
        throw DataError(context(relations_file, line_no) +
                        ": unknown doc_id '" + cols[0] + "'");
      Document& doc = corpus.documents[it->second];

      const auto label = label_from_name(cols[1]);
      if (!label || *label == RelationLabel::NO_RELATION)
        throw DataError(context(relations_file, line_no) +
                        ": unknown relation label '" + cols[1] +
                        "' (accepted: " + accepted_label_names() + ")");
      GoldRelation rel;
      rel.relation = *label;
      rel.arg1 = strip_arg_prefix(cols[2], "Arg1:", relations_file, line_no);
      rel.arg2 = strip_arg_prefix(cols[3], "Arg2:", relations_file, line_no);

      const EntityMention* a1 = doc.find_mention(rel.arg1);
      const EntityMention* a2 = doc.find_mention(rel.arg2);
      if (!a1)
        throw DataError(context(relations_file, line_no) + ": doc " +
                        doc.doc_id + " references unknown mention '" +
                        rel.arg1 + "'");
      if (!a2)
        throw DataError(context(relations_file, line_no) + ": doc " +
                        doc.doc_id + " references unknown mention '" +
                        rel.arg2 + "'");
      if (a1->kind != EntityKind::CHEMICAL)
        throw DataError(context(relations_file, line_no) + ": doc " +
                        doc.doc_id + " Arg1 mention '" + rel.arg1 +
                        "' is not a CHEMICAL");
      if (a2->kind != EntityKind::GENE)
        throw DataError(context(relations_file, line_no) + ": doc " +
                        doc.doc_id + " Arg2 mention '" + rel.arg2 +
                        "' is not a GENE");

      const std::string key = doc.doc_id + "\x1f" + cols[1] + "\x1f" +
                              rel.arg1 + "\x1f" + rel.arg2;
      if (!seen.insert(key).second) {
        ++corpus.duplicate_relations_dropped;
        corpus.warnings.push_back(context(relations_file, line_no) +
                                  ": dropped duplicate relation (" +
                                  doc.doc_id + ", " + cols[1] + ", " +
                                  rel.arg1 + ", " + rel.arg2 + ")");
        continue;
      }
      doc.gold_relations.push_back(std::move(rel));
    }
  }

  return corpus;
}

void serialize_corpus(const Corpus& corpus, const std::string& abstracts_file,
                      const std::string& entities_file,
                      const std::string& relations_file) {
  std::string abstracts, entities, relations;
  for (const auto& doc : corpus.documents) {
    abstracts += doc.doc_id + "\t" + doc.title + "\t" + doc.body + "\n";
    for (const auto& m : doc.entities) {
      entities += doc.doc_id + "\t" + m.mention_id + "\t" +
                  std::string(entity_kind_name(m.kind)) + "\t" +
                  std::to_string(m.start) + "\t" + std::to_string(m.end) +
                  "\t" + m.surface + "\n";
    }
    for (const auto& r : doc.gold_relations) {
      relations += doc.doc_id + "\t" + std::string(label_name(r.relation)) +
                   "\tArg1:" + r.arg1 + "\tArg2:" + r.arg2 + "\n";
    }
  }
  text::write_file(abstracts_file, abstracts);
  text::write_file(entities_file, entities);
  if (!relations_file.empty()) text::write_file(relations_file, relations);
}

ValidationReport validate_corpus(const Corpus& corpus) {
  ValidationReport report;
  report.documents = corpus.documents.size();
  report.entities_by_kind["CHEMICAL"] = 0;
  report.entities_by_kind["GENE"] = 0;
  report.duplicate_relations_dropped = corpus.duplicate_relations_dropped;
  report.warnings = corpus.warnings;
  for (const auto& doc : corpus.documents) {
    for (const auto& m : doc.entities)
      ++report.entities_by_kind[std::string(entity_kind_name(m.kind))];
    for (const auto& r : doc.gold_relations)
      ++report.relations_by_label[std::string(label_name(r.relation))];
    // Pairwise interval overlap; documents carry tens of mentions at most.
    for (std::size_t i = 0; i < doc.entities.size(); ++i)
      for (std::size_t j = i + 1; j < doc.entities.size(); ++j) {
        const auto& a = doc.entities[i];
        const auto& b = doc.entities[j];
        if (a.start < b.end && b.start < a.end)
          ++report.overlapping_entity_pairs;
      }
  }
  return report;
}

std::string ValidationReport::to_json() const {
  json j;
  j["documents"] = documents;
  j["entities_by_kind"] = entities_by_kind;
  j["relations_by_label"] = relations_by_label;
  j["overlapping_entity_pairs"] = overlapping_entity_pairs;
  if (cross_sentence_relations)
    j["cross_sentence_relations"] = *cross_sentence_relations;
  else
    j["cross_sentence_relations"] = nullptr;
  j["duplicate_relations_dropped"] = duplicate_relations_dropped;
  j["warnings"] = warnings;
  return j.dump(2);
}

}  // namespace cprex
