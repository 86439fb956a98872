#include "sentencize.hpp"

#include <algorithm>

#include <nlohmann/json.hpp>

#include "errors.hpp"
#include "text_util.hpp"

namespace cprex {

namespace {

using text::is_ascii_digit;
using text::is_ascii_upper;
using text::is_ws;

struct Segment {
  std::size_t start;
  std::size_t end;
};

// True when text[..=dot] ends with a listed abbreviation at a token boundary.
bool ends_with_abbreviation(const std::u32string& text, std::size_t dot,
                            const std::vector<std::u32string>& abbrevs) {
  for (const auto& abbr : abbrevs) {
    const std::size_t n = abbr.size();
    if (dot + 1 < n) continue;
    const std::size_t from = dot + 1 - n;
    bool match = true;
    for (std::size_t k = 0; k < n; ++k) {
      char32_t c = text[from + k];
      if (c >= U'A' && c <= U'Z') c += 32;  // ASCII lowercase
      if (c != abbr[k]) {
        match = false;
        break;
      }
    }
    if (!match) continue;
    if (from == 0 || !text::is_ascii_alnum(text[from - 1])) return true;
  }
  return false;
}

bool inside_any_entity(std::size_t pos, const std::vector<EntityMention>& ms) {
  for (const auto& m : ms)
    if (m.start <= pos && pos < m.end) return true;
  return false;
}

// Shrinks [start, end) to its non-whitespace extent. Returns false if empty.
bool trim_segment(const std::u32string& text, Segment& seg) {
  while (seg.start < seg.end && is_ws(text[seg.start])) ++seg.start;
  while (seg.end > seg.start && is_ws(text[seg.end - 1])) --seg.end;
  return seg.start < seg.end;
}

bool covered(const EntityMention& m, const std::vector<Segment>& segs) {
  for (const auto& s : segs)
    if (s.start <= m.start && m.end <= s.end) return true;
  return false;
}

}  // namespace

const AbbreviationList& AbbreviationList::builtin() {
  static const AbbreviationList list = [] {
    AbbreviationList l;
    l.version = "builtin-1";
    l.entries = {
        "fig.",    "figs.",  "eq.",    "eqs.",   "ref.",   "refs.",
        "et al.",  "e.g.",   "i.e.",   "vs.",    "cf.",    "etc.",
        "ca.",     "approx.", "resp.", "no.",    "nos.",   "vol.",
        "sp.",     "spp.",   "subsp.", "dr.",    "prof.",  "st.",
        "mr.",     "mrs.",   "ms.",    "inc.",   "ltd.",   "co.",
        "min.",    "max.",   "conc.",  "mol.",   "wt.",    "temp.",
        "anal.",   "biol.",  "chem.",  "med.",   "sci.",   "pharmacol.",
    };
    return l;
  }();
  return list;
}

AbbreviationList AbbreviationList::load(const std::string& path) {
  AbbreviationList l;
  l.version = path;
  for (const auto& raw : text::read_lines(path)) {
    const auto line = std::string(text::trim(raw));
    if (line.empty() || line[0] == '#') continue;
    l.entries.push_back(text::lower(line));
  }
  if (l.entries.empty())
    throw UsageError("abbreviation list '" + path + "' has no entries");
  return l;
}

std::vector<Sentence> sentencize(const Document& doc,
                                 const AbbreviationList& abbrev) {
  const std::string full = doc.full_text();
  const std::u32string text = text::utf8_decode(full);
  const std::size_t n = text.size();

  std::vector<std::u32string> abbrevs;
  abbrevs.reserve(abbrev.entries.size());
  for (const auto& a : abbrev.entries) abbrevs.push_back(text::utf8_decode(a));

  // Pass 1: boundary candidates. cut_after[i] means a sentence ends at i
  // (exclusive) and the next one starts at the first non-whitespace after.
  std::vector<std::size_t> cuts;
  for (std::size_t i = 0; i < n; ++i) {
    const char32_t c = text[i];
    const bool punct = (c == U'.' || c == U'!' || c == U'?');
    const bool hard_ws = (c == U'\n' || c == U'\t');
    if (!punct && !hard_ws) continue;

    // Punctuation must be followed by whitespace (or end of text) so that
    // tokens like "2.5" or "IL-2.R" never split.
    if (punct && i + 1 < n && !is_ws(text[i + 1])) continue;

    std::size_t j = i + 1;
    while (j < n && is_ws(text[j])) ++j;
    if (j < n && !is_ascii_upper(text[j]) && !is_ascii_digit(text[j]))
      continue;

    if (inside_any_entity(i, doc.entities)) continue;
    if (c == U'.' && ends_with_abbreviation(text, i, abbrevs)) continue;

    // The terminator stays in the sentence for punctuation; hard whitespace
    // is part of the gap.
    cuts.push_back(punct ? i + 1 : i);
  }

  // Pass 2: segments between cuts, trimmed; empty segments dropped.
  std::vector<Segment> segs;
  std::size_t cursor = 0;
  for (std::size_t cut : cuts) {
    if (cut < cursor) continue;  // cut swallowed by an earlier segment
    Segment seg{cursor, cut};
    if (trim_segment(text, seg)) segs.push_back(seg);
    cursor = cut;
  }
  Segment tail{cursor, n};
  if (trim_segment(text, tail)) segs.push_back(tail);
  if (segs.empty() && n > 0) {
    Segment whole{0, n};
    if (trim_segment(text, whole)) segs.push_back(whole);
  }

  // Pass 3: merge until no mention straddles a segment boundary.
  bool changed = true;
  while (changed) {
    changed = false;
    for (const auto& m : doc.entities) {
      if (covered(m, segs)) continue;
      if (segs.empty()) {
        segs.push_back(Segment{m.start, m.end});
        changed = true;
        break;
      }
      // First segment ending beyond the mention start, last one needed to
      // contain its end; merge that whole range into one segment.
      std::size_t lo = 0;
      while (lo + 1 < segs.size() && segs[lo].end <= m.start) ++lo;
      std::size_t hi = lo;
      while (hi + 1 < segs.size() && segs[hi].end < m.end) ++hi;
      segs[lo].start = std::min(segs[lo].start, m.start);
      segs[lo].end = std::max(segs[hi].end, m.end);
      segs.erase(segs.begin() + static_cast<std::ptrdiff_t>(lo) + 1,
                 segs.begin() + static_cast<std::ptrdiff_t>(hi) + 1);
      changed = true;
      break;
    }
  }

  std::vector<Sentence> out;
  out.reserve(segs.size());
  for (std::size_t k = 0; k < segs.size(); ++k) {
    Sentence s;
    s.doc_id = doc.doc_id;
    s.sent_index = k;
    s.start = segs[k].start;
    s.end = segs[k].end;
    s.text = text::utf8_encode(
        std::u32string_view(text).substr(s.start, s.end - s.start));
    out.push_back(std::move(s));
  }
  return out;
}

std::vector<std::vector<EntityMention>> assign_entities(
    const Document& doc, const std::vector<Sentence>& sentences) {
  std::vector<std::vector<EntityMention>> out(sentences.size());
  for (const auto& m : doc.entities) {
    bool placed = false;
    for (const auto& s : sentences) {
      if (s.start <= m.start && m.end <= s.end) {
        EntityMention local = m;
        local.start = m.start - s.start;
        local.end = m.end - s.start;
        out[s.sent_index].push_back(std::move(local));
        placed = true;
        break;
      }
    }
    if (!placed)
      throw std::logic_error("mention " + m.mention_id + " of doc " +
                             doc.doc_id +
                             " not contained in any sentence; sentencize "
                             "postcondition violated");
  }
  for (auto& ms : out) {
    std::sort(ms.begin(), ms.end(),
              [](const EntityMention& a, const EntityMention& b) {
                return std::tie(a.start, a.end, a.mention_id) <
                       std::tie(b.start, b.end, b.mention_id);
              });
  }
  return out;
}

std::string sentences_to_jsonl(const std::vector<Sentence>& sentences) {
  std::vector<const Sentence*> order;
  order.reserve(sentences.size());
  for (const auto& s : sentences) order.push_back(&s);
  std::sort(order.begin(), order.end(), [](const Sentence* a, const Sentence* b) {
    return std::tie(a->doc_id, a->sent_index) <
           std::tie(b->doc_id, b->sent_index);
  });
  std::string out;
  for (const Sentence* s : order) {
    nlohmann::ordered_json j;
    j["doc_id"] = s->doc_id;
    j["sent_index"] = s->sent_index;
    j["start"] = s->start;
    j["end"] = s->end;
    j["text"] = s->text;
    out += j.dump();
    out += "\n";
  }
  return out;
}

}  // namespace cprex
