#pragma once

#include <string>
#include <vector>

#include "corpus.hpp"

namespace cprex {

// One sentence of a document's full_text. Offsets are code points into
// full_text; text == full_text[start..end).
struct Sentence {
  std::string doc_id;
  std::size_t sent_index = 0;
  std::size_t start = 0;
  std::size_t end = 0;
  std::string text;
};

// The built-in biomedical abbreviation list, lowercase, each entry ending
// with '.'. A candidate period is suppressed when the text up to and
// including it ends with one of these at a token boundary.
struct AbbreviationList {
  std::string version;
  std::vector<std::string> entries;

  static const AbbreviationList& builtin();
  // One abbreviation per line; '#' comments and blank lines ignored.
  static AbbreviationList load(const std::string& path);
};

// Splits full_text into sentences. Boundary candidates are '.', '!', '?',
// newline, and the title/body tab; a candidate survives only when followed by
// whitespace then an uppercase letter or digit (or end of text), is not
// inside any entity span, and does not terminate a known abbreviation.
// Adjacent sentences are merged until no mention straddles a boundary.
// Never fails: worst case is one sentence spanning the whole document.
std::vector<Sentence> sentencize(const Document& doc,
                                 const AbbreviationList& abbrev =
                                     AbbreviationList::builtin());

// Entity mentions per sentence, re-based to sentence-local code point
// offsets, ordered by (start, end, mention_id). Index i holds the mentions of
// sentence i. Throws if a mention is not contained in any sentence, which
// would mean sentencize broke its postcondition.
std::vector<std::vector<EntityMention>> assign_entities(
    const Document& doc, const std::vector<Sentence>& sentences);

// JSON Lines dump, one object per sentence, sorted by (doc_id, sent_index).
std::string sentences_to_jsonl(const std::vector<Sentence>& sentences);

}  // namespace cprex
