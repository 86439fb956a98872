#pragma once

#include <map>
#include <string>
#include <vector>

#include "corpus.hpp"
#include "sentencize.hpp"

namespace cprex {

// One in-sentence chemical-gene pair, the unit of classification. chem,
// gene and other_mentions carry sentence-local code point offsets.
struct CandidateExample {
  std::string example_id;  // "doc_id.sent_index.chemId.geneId[#k]"
  std::string doc_id;
  std::size_t sent_index = 0;
  std::string sentence_text;
  EntityMention chem;
  EntityMention gene;
  std::vector<EntityMention> other_mentions;
  RelationLabel label = RelationLabel::NO_RELATION;
};

struct CandidateStats {
  std::map<std::string, std::size_t> by_label;
  std::size_t positives = 0;
  std::size_t negatives = 0;
  std::size_t total = 0;

  std::string to_json() const;
};

struct CandidateGenResult {
  std::vector<CandidateExample> candidates;
  // Gold relations whose argument pair never co-occurs in one sentence.
  std::vector<GoldRelation> dropped;
};

// Enumerates every (chemical, gene) pair co-occurring in a sentence, ordered
// by (sent_index, chemical appearance, gene appearance). Gold relations label
// their pair's candidate; a pair with k > 1 distinct gold labels yields k
// candidates with example_id suffixes "#0".."#k-1" in label index order.
CandidateGenResult generate_candidates(
    const Document& doc, const std::vector<Sentence>& sentences,
    const std::vector<std::vector<EntityMention>>& entity_map);

// Convenience: sentencize + assign + generate over a whole corpus, documents
// in corpus order.
CandidateGenResult generate_candidates(const Corpus& corpus,
                                       const AbbreviationList& abbrev =
                                           AbbreviationList::builtin());

CandidateStats candidate_stats(const std::vector<CandidateExample>& candidates);

// JSON Lines, sorted by example_id. Balanced training dumps may contain
// repeated example_ids; sorting is stable.
std::string candidates_to_jsonl(const std::vector<CandidateExample>& candidates);
std::vector<CandidateExample> candidates_from_jsonl(const std::string& content,
                                                    const std::string& source);

}  // namespace cprex
