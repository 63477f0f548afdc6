// Copyright 2026 The Framescope Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "framescope/semframe.h"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>

#include "framescope/text.h"

namespace framescope {

namespace {

bool IsTerminal(char32_t cp) {
  return cp == '.' || cp == '?' || cp == '!' || cp == 0x2026;
}

bool IsCloser(char32_t cp) {
  return cp == '"' || cp == '\'' || cp == ')' || cp == ']' || cp == 0x2019 ||
         cp == 0x201D || cp == 0xBB;
}

void PushSentence(std::string_view text, size_t begin, size_t end,
                  std::vector<Sentence> *out) {
  while (begin < end &&
         static_cast<unsigned char>(text[begin]) <= ' ') {
    ++begin;
  }
  while (end > begin && static_cast<unsigned char>(text[end - 1]) <= ' ') {
    --end;
  }
  if (begin < end) out->push_back({text.substr(begin, end - begin), begin, end});
}

// The whitespace-delimited word ending at `dot` (inclusive), lowercased.
std::string WordEndingAt(std::string_view text, size_t dot) {
  size_t start = dot;
  while (start > 0 && static_cast<unsigned char>(text[start - 1]) > ' ') {
    --start;
  }
  std::string word = CaseFold(text.substr(start, dot + 1 - start));
  // Leading quotes or brackets are not part of the abbreviation.
  while (!word.empty() && (word.front() == '"' || word.front() == '(' ||
                           word.front() == '\'' || word.front() == '[')) {
    word.erase(0, 1);
  }
  return word;
}

}  // namespace

std::vector<Sentence> SplitSentences(
    std::string_view text, const std::set<std::string> &abbreviations) {
  std::vector<Sentence> out;
  size_t start = 0;
  size_t i = 0;
  while (i < text.size()) {
    size_t len;
    const char32_t cp = DecodeUtf8(text, i, &len);
    if (cp == '\n') {
      size_t j = i + 1;
      while (j < text.size() && (text[j] == ' ' || text[j] == '\t' ||
                                 text[j] == '\r')) {
        ++j;
      }
      if (j < text.size() && text[j] == '\n') {
        PushSentence(text, start, i, &out);
        start = j + 1;
        i = j + 1;
        continue;
      }
    }
    if (!IsTerminal(cp)) {
      i += len;
      continue;
    }
    const size_t mark = i;
    size_t j = i + len;
    while (j < text.size()) {
      size_t l;
      const char32_t next = DecodeUtf8(text, j, &l);
      if (!IsTerminal(next) && !IsCloser(next)) break;
      j += l;
    }
    const bool at_boundary =
        j >= text.size() || IsSpaceCodepoint(DecodeUtf8(text, j, &len));
    bool abbreviation = false;
    if (cp == '.' && j == mark + 1) {
      abbreviation = abbreviations.count(WordEndingAt(text, mark)) > 0;
    }
    if (at_boundary && !abbreviation) {
      PushSentence(text, start, j, &out);
      start = j;
    }
    i = j;
  }
  PushSentence(text, start, text.size(), &out);
  return out;
}

std::set<std::string> LoadWordList(const std::filesystem::path &path) {
  std::set<std::string> words;
  const std::string text = ReadTextFile(path);
  size_t pos = 0;
  while (pos <= text.size()) {
    size_t nl = text.find('\n', pos);
    if (nl == std::string::npos) nl = text.size();
    std::string line = text.substr(pos, nl - pos);
    if (auto hash = line.find('#'); hash != std::string::npos) {
      line.erase(hash);
    }
    line = Trim(line);
    if (!line.empty()) words.insert(CaseFold(line));
    pos = nl + 1;
  }
  return words;
}

namespace {

const std::unordered_map<std::string, std::string> &IrregularForms() {
  static const std::unordered_map<std::string, std::string> forms = {
      {"struck", "strike"},  {"stricken", "strike"}, {"fought", "fight"},
      {"shot", "shoot"},     {"slain", "slay"},      {"slew", "slay"},
      {"died", "die"},       {"dying", "die"},       {"children", "child"},
      {"women", "woman"},    {"men", "man"},         {"fled", "flee"},
      {"built", "build"},    {"fell", "fall"},       {"fallen", "fall"},
      {"took", "take"},      {"taken", "take"},      {"lying", "lie"},
      {"bled", "bleed"},     {"held", "hold"},       {"felt", "feel"},
      {"knew", "know"},      {"known", "know"},      {"hid", "hide"},
      {"hidden", "hide"},    {"feet", "foot"},       {"lives", "life"},
      {"wives", "wife"},     {"brethren", "brother"},
  };
  return forms;
}

bool EndsWith(std::string_view s, std::string_view suffix) {
  return s.size() >= suffix.size() &&
         s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

bool IsVowel(char c) {
  return c == 'a' || c == 'e' || c == 'i' || c == 'o' || c == 'u';
}

void AddStem(const std::string &stem, std::set<std::string> *out) {
  if (stem.empty()) return;
  out->insert(stem);
  out->insert(stem + "e");
  const size_t n = stem.size();
  if (n >= 2 && stem[n - 1] == stem[n - 2] && !IsVowel(stem[n - 1])) {
    out->insert(stem.substr(0, n - 1));
  }
}

}  // namespace

std::set<std::string> LemmaCandidates(std::string_view word) {
  std::set<std::string> out;
  const std::string w(word);
  out.insert(w);
  if (auto it = IrregularForms().find(w); it != IrregularForms().end()) {
    out.insert(it->second);
  }
  const size_t n = w.size();
  if (n > 4 && (EndsWith(w, "ies") || EndsWith(w, "ied"))) {
    out.insert(w.substr(0, n - 3) + "y");
  }
  if (n > 3 && EndsWith(w, "es")) out.insert(w.substr(0, n - 2));
  if (n > 2 && EndsWith(w, "s") && !EndsWith(w, "ss")) {
    out.insert(w.substr(0, n - 1));
  }
  if (n > 3 && EndsWith(w, "ed")) AddStem(w.substr(0, n - 2), &out);
  if (n > 4 && EndsWith(w, "ing")) AddStem(w.substr(0, n - 3), &out);
  return out;
}

void Lexicon::Add(const std::string &frame, std::string lemma,
                  std::string pos) {
  LexicalUnit unit;
  unit.lemma = CaseFold(Trim(lemma));
  unit.pos = std::move(pos);
  for (const auto &t : TokenizeSpans(unit.lemma)) {
    unit.words.emplace_back(t.text);
  }
  if (unit.words.empty()) {
    throw std::invalid_argument("empty lexical unit for " + frame);
  }
  auto it = std::find_if(frames_.begin(), frames_.end(),
                         [&](const auto &f) { return f.first == frame; });
  if (it == frames_.end()) {
    frames_.emplace_back(frame, std::vector<LexicalUnit>{});
    it = std::prev(frames_.end());
  }
  for (const auto &u : it->second) {
    if (u.lemma == unit.lemma && u.pos == unit.pos) {
      throw std::invalid_argument("duplicate lexical unit \"" + unit.lemma +
                                  "\" in " + frame);
    }
  }
  it->second.push_back(std::move(unit));
}

size_t Lexicon::unit_count() const {
  size_t n = 0;
  for (const auto &f : frames_) n += f.second.size();
  return n;
}

Lexicon LexiconFromJson(const json &doc, const FrameInventory &inventory) {
  if (!doc.is_object() || !doc.contains("frames") ||
      !doc.at("frames").is_object()) {
    throw TaxonomyError("lexicon: expected {\"frames\": {...}}");
  }
  Lexicon lexicon;
  std::vector<std::string> problems;
  for (const auto &[frame, units] : doc.at("frames").items()) {
    if (!inventory.Find(frame)) {
      problems.push_back("frame \"" + frame + "\" is not a frame of interest");
      continue;
    }
    if (!units.is_array()) {
      problems.push_back("frame \"" + frame + "\": expected a list");
      continue;
    }
    for (const auto &u : units) {
      try {
        if (u.is_string()) {
          lexicon.Add(frame, u.get<std::string>(), "");
        } else {
          lexicon.Add(frame, u.at("lu").get<std::string>(),
                      u.value("pos", ""));
        }
      } catch (const std::exception &e) {
        problems.push_back(e.what());
      }
    }
  }
  if (!problems.empty()) {
    std::string msg = "lexicon failed validation:";
    for (const auto &p : problems) msg += "\n  " + p;
    throw TaxonomyError(msg);
  }
  return lexicon;
}

Lexicon LoadLexicon(const std::filesystem::path &path,
                    const FrameInventory &inventory) {
  json doc = json::parse(ReadTextFile(path), nullptr, false);
  if (doc.is_discarded()) {
    throw TaxonomyError(path.string() + ": not valid JSON");
  }
  return LexiconFromJson(doc, inventory);
}

std::string_view SourceName(OccurrenceSource source) {
  return source == OccurrenceSource::kLexicon ? "lexicon" : "external";
}

json OccurrenceToJson(const SemanticFrameOccurrence &o) {
  json roles = json::object();
  for (const auto &[name, f] : o.roles) {
    roles[name] = {{"text", f.text},
                   {"start", f.start},
                   {"end", f.end},
                   {"raw_role", f.raw_role}};
  }
  return json{{"article_id", o.article_id},
              {"sentence_index", o.sentence_index},
              {"frame_name", o.frame_name},
              {"trigger",
               {{"text", o.trigger.text},
                {"start", o.trigger.start},
                {"end", o.trigger.end}}},
              {"roles", roles},
              {"source", SourceName(o.source)}};
}

namespace {

bool OnlySpaceBetween(std::string_view text, size_t from, size_t to) {
  for (size_t i = from; i < to; ++i) {
    if (static_cast<unsigned char>(text[i]) > ' ') return false;
  }
  return true;
}

struct Candidate {
  size_t first;
  size_t count;
  size_t frame;
};

}  // namespace

std::vector<SemanticFrameOccurrence> TagSentence(const Sentence &sentence,
                                                 const Lexicon &lexicon,
                                                 std::string_view article_id,
                                                 size_t sentence_index) {
  const auto tokens = TokenizeSpans(sentence.text);
  std::vector<std::set<std::string>> lemmas;
  lemmas.reserve(tokens.size());
  for (const auto &t : tokens) lemmas.push_back(LemmaCandidates(CaseFold(t.text)));

  std::vector<Candidate> candidates;
  const auto &frames = lexicon.frames();
  for (size_t f = 0; f < frames.size(); ++f) {
    for (const auto &unit : frames[f].second) {
      const size_t k = unit.words.size();
      for (size_t i = 0; i + k <= tokens.size(); ++i) {
        bool match = true;
        for (size_t j = 0; j < k && match; ++j) {
          match = lemmas[i + j].count(unit.words[j]) > 0 &&
                  (j == 0 || OnlySpaceBetween(sentence.text,
                                              tokens[i + j - 1].end,
                                              tokens[i + j].begin));
        }
        if (match) candidates.push_back({i, k, f});
      }
    }
  }
  // Longest span, then leftmost, then lexicon order.
  std::stable_sort(candidates.begin(), candidates.end(),
                   [&](const Candidate &a, const Candidate &b) {
                     const size_t la = tokens[a.first + a.count - 1].end -
                                       tokens[a.first].begin;
                     const size_t lb = tokens[b.first + b.count - 1].end -
                                       tokens[b.first].begin;
                     if (a.count != b.count) return a.count > b.count;
                     if (la != lb) return la > lb;
                     if (a.first != b.first) return a.first < b.first;
                     return a.frame < b.frame;
                   });
  std::vector<bool> taken(tokens.size(), false);
  std::vector<Candidate> chosen;
  for (const auto &c : candidates) {
    bool free = true;
    for (size_t i = c.first; i < c.first + c.count; ++i) free &= !taken[i];
    if (!free) continue;
    for (size_t i = c.first; i < c.first + c.count; ++i) taken[i] = true;
    chosen.push_back(c);
  }
  std::sort(chosen.begin(), chosen.end(),
            [](const Candidate &a, const Candidate &b) {
              return a.first < b.first;
            });

  std::vector<SemanticFrameOccurrence> out;
  for (const auto &c : chosen) {
    SemanticFrameOccurrence o;
    o.article_id = std::string(article_id);
    o.sentence_index = sentence_index;
    o.frame_name = frames[c.frame].first;
    const size_t b = tokens[c.first].begin;
    const size_t e = tokens[c.first + c.count - 1].end;
    o.trigger = {std::string(sentence.text.substr(b, e - b)),
                 sentence.begin + b, sentence.begin + e};
    o.source = OccurrenceSource::kLexicon;
    out.push_back(std::move(o));
  }
  return out;
}

void Gazetteer::Add(std::string_view phrase, std::string group) {
  std::vector<std::string> words;
  const std::string folded = CaseFold(phrase);
  for (const auto &t : TokenizeSpans(folded)) {
    words.emplace_back(t.text);
  }
  if (words.empty()) return;
  entries_.emplace_back(std::move(words), std::move(group));
}

std::vector<Gazetteer::Match> Gazetteer::MatchTokens(
    const std::vector<std::string> &tokens) const {
  struct Hit {
    size_t first, count, entry;
  };
  std::vector<Hit> hits;
  for (size_t e = 0; e < entries_.size(); ++e) {
    const auto &words = entries_[e].first;
    for (size_t i = 0; i + words.size() <= tokens.size(); ++i) {
      if (std::equal(words.begin(), words.end(), tokens.begin() + i)) {
        hits.push_back({i, words.size(), e});
      }
    }
  }
  std::stable_sort(hits.begin(), hits.end(), [](const Hit &a, const Hit &b) {
    if (a.count != b.count) return a.count > b.count;
    if (a.first != b.first) return a.first < b.first;
    return a.entry < b.entry;
  });
  std::vector<bool> taken(tokens.size(), false);
  std::vector<Match> out;
  for (const auto &h : hits) {
    bool free = true;
    for (size_t i = h.first; i < h.first + h.count; ++i) free &= !taken[i];
    if (!free) continue;
    for (size_t i = h.first; i < h.first + h.count; ++i) taken[i] = true;
    out.push_back({h.first, h.count, entries_[h.entry].second});
  }
  std::sort(out.begin(), out.end(), [](const Match &a, const Match &b) {
    return a.first_token < b.first_token;
  });
  return out;
}

std::string Gazetteer::GroupOf(std::string_view text) const {
  std::vector<std::string> tokens;
  const std::string folded = CaseFold(text);
  for (const auto &t : TokenizeSpans(folded)) tokens.emplace_back(t.text);
  const auto matches = MatchTokens(tokens);
  const Match *best = nullptr;
  for (const auto &m : matches) {
    if (!best || m.token_count > best->token_count) best = &m;
  }
  return best ? best->group : std::string(kOtherGroup);
}

Gazetteer GazetteerFromJson(const json &doc) {
  if (!doc.is_object() || !doc.contains("groups") ||
      !doc.at("groups").is_object()) {
    throw std::invalid_argument("gazetteer: expected {\"groups\": {...}}");
  }
  Gazetteer g;
  for (const auto &[group, phrases] : doc.at("groups").items()) {
    for (const auto &p : phrases) g.Add(p.get<std::string>(), group);
  }
  return g;
}

Gazetteer LoadGazetteer(const std::filesystem::path &path) {
  json doc = json::parse(ReadTextFile(path), nullptr, false);
  if (doc.is_discarded()) {
    throw std::invalid_argument(path.string() + ": not valid JSON");
  }
  return GazetteerFromJson(doc);
}

namespace {

const std::set<std::string> &Determiners() {
  static const std::set<std::string> words = {
      "the", "a", "an", "this", "that", "these", "those", "its",
      "their", "his", "her", "our", "my", "your"};
  return words;
}

const std::set<std::string> &FunctionWords() {
  static const std::set<std::string> words = [] {
    std::set<std::string> w = Determiners();
    for (const char *x :
         {"was", "were", "is", "are", "be", "been", "being", "has", "have",
          "had", "will", "would", "could", "should", "may", "might", "can",
          "did", "do", "does", "of", "in", "on", "at", "by", "for", "with",
          "from", "to", "into", "near", "after", "before", "during", "over",
          "under", "against", "across", "since", "as", "than", "and", "or",
          "but", "nor", "so", "yet", "while", "he", "she", "it", "they", "we",
          "i", "you", "him", "them", "us", "who", "which", "what", "when",
          "where", "there", "here", "not", "no", "also", "reportedly",
          "said", "says", "yesterday", "today", "overnight", "again"}) {
      w.insert(x);
    }
    return w;
  }();
  return words;
}

const std::set<std::string> &PassiveAuxiliaries() {
  static const std::set<std::string> words = {
      "was", "were", "is", "are", "be", "been", "being", "get", "got", "gets"};
  return words;
}

bool LooksLikeParticiple(const std::string &lowered) {
  static const std::set<std::string> irregular = {
      "struck", "stricken", "shot", "hit", "slain", "fought", "taken",
      "killed", "hurt", "beaten", "thrown", "blown"};
  return EndsWith(lowered, "ed") || EndsWith(lowered, "en") ||
         irregular.count(lowered) > 0;
}

bool IsCapitalized(std::string_view token) {
  size_t len;
  const char32_t cp = DecodeUtf8(token, 0, &len);
  return FoldCodepoint(cp) != cp;
}

struct Entity {
  size_t first;
  size_t last;  // exclusive
};

}  // namespace

SemanticFrameOccurrence ExtractRoles(const SemanticFrameOccurrence &occurrence,
                                     const Sentence &sentence,
                                     const Gazetteer &gazetteer,
                                     const FrameInventory &inventory) {
  SemanticFrameOccurrence out = occurrence;
  const FrameOfInterest *frame = inventory.Find(occurrence.frame_name);
  if (!frame || !frame->HasRole(kVictimRole)) return out;
  std::string agent_role;
  if (frame->HasRole(kAssailantRole)) {
    agent_role = std::string(kAssailantRole);
  } else if (frame->HasRole("Killer")) {
    agent_role = "Killer";
  } else {
    return out;
  }

  const auto tokens = TokenizeSpans(sentence.text);
  std::vector<std::string> lowered;
  for (const auto &t : tokens) lowered.push_back(CaseFold(t.text));
  const size_t n = tokens.size();

  // Trigger token range, relative to the sentence.
  const size_t trig_b = occurrence.trigger.start - sentence.begin;
  const size_t trig_e = occurrence.trigger.end - sentence.begin;
  size_t tf = n, tl = n;
  for (size_t i = 0; i < n; ++i) {
    if (tokens[i].begin >= trig_b && tokens[i].end <= trig_e) {
      if (tf == n) tf = i;
      tl = i + 1;
    }
  }
  if (tf == n) return out;

  std::vector<bool> claimed(n, false);
  for (size_t i = tf; i < tl; ++i) claimed[i] = true;
  std::vector<Entity> entities;
  auto claim = [&](size_t first, size_t last) {
    for (size_t i = first; i < last; ++i) claimed[i] = true;
    entities.push_back({first, last});
  };
  auto adjacent = [&](size_t i) {
    return OnlySpaceBetween(sentence.text, tokens[i - 1].end, tokens[i].begin);
  };

  for (const auto &m : gazetteer.MatchTokens(lowered)) {
    bool free = true;
    for (size_t i = m.first_token; i < m.first_token + m.token_count; ++i) {
      free &= !claimed[i];
    }
    if (free) claim(m.first_token, m.first_token + m.token_count);
  }
  for (size_t i = 0; i + 1 < n; ++i) {
    if (!Determiners().count(lowered[i])) continue;
    size_t j = i + 1;
    // A past-tense word after the head usually starts the predicate.
    while (j < n && j - i <= 3 && !claimed[j] &&
           !FunctionWords().count(lowered[j]) && adjacent(j) &&
           !(j > i + 1 && EndsWith(lowered[j], "ed"))) {
      ++j;
    }
    if (j > i + 1) claim(i + 1, j);
  }
  for (size_t i = 0; i < n; ++i) {
    if (claimed[i] || !IsCapitalized(tokens[i].text) ||
        FunctionWords().count(lowered[i])) {
      continue;
    }
    size_t j = i + 1;
    while (j < n && !claimed[j] && IsCapitalized(tokens[j].text) &&
           !FunctionWords().count(lowered[j]) && adjacent(j)) {
      ++j;
    }
    claim(i, j);
    i = j - 1;
  }

  const Entity *before = nullptr;
  const Entity *after = nullptr;
  for (const auto &e : entities) {
    if (e.last <= tf && (!before || e.last > before->last)) before = &e;
    if (e.first >= tl && (!after || e.first < after->first)) after = &e;
  }

  bool passive = false;
  if (tf >= 1 && LooksLikeParticiple(lowered[tf])) {
    passive = PassiveAuxiliaries().count(lowered[tf - 1]) > 0 ||
              (tf >= 2 && EndsWith(lowered[tf - 1], "ly") &&
               PassiveAuxiliaries().count(lowered[tf - 2]) > 0);
  }
  if (passive) std::swap(before, after);

  auto filler = [&](const Entity &e, const std::string &raw) {
    const size_t b = tokens[e.first].begin;
    const size_t end = tokens[e.last - 1].end;
    return RoleFiller{std::string(sentence.text.substr(b, end - b)),
                      sentence.begin + b, sentence.begin + end, raw};
  };
  if (before) out.roles[std::string(kAssailantRole)] = filler(*before, agent_role);
  if (after) {
    out.roles[std::string(kVictimRole)] =
        filler(*after, std::string(kVictimRole));
  }
  return out;
}

namespace {

bool ReadSpan(const json &obj, TextSpan *span) {
  if (!obj.is_object()) return false;
  auto text = obj.find("text");
  auto start = obj.find("start");
  auto end = obj.find("end");
  if (text == obj.end() || !text->is_string() || start == obj.end() ||
      !start->is_number_unsigned() || end == obj.end() ||
      !end->is_number_unsigned()) {
    return false;
  }
  span->text = text->get<std::string>();
  span->start = start->get<size_t>();
  span->end = end->get<size_t>();
  return span->start <= span->end;
}

}  // namespace

ExternalIngest IngestExternalRecords(const std::vector<json> &records,
                                     const FrameInventory &inventory) {
  ExternalIngest result;
  size_t line = 0;
  for (const auto &r : records) {
    ++line;
    auto problem = [&](const std::string &why) {
      ++result.skipped;
      result.problems.push_back("record " + std::to_string(line) + ": " + why);
    };
    if (!r.is_object()) {
      problem("not an object");
      continue;
    }
    auto id = r.find("article_id");
    auto index = r.find("sentence_index");
    auto frame = r.find("frame_name");
    auto trigger = r.find("trigger");
    if (id == r.end() || !id->is_string() || index == r.end() ||
        !index->is_number_unsigned() || frame == r.end() ||
        !frame->is_string() || trigger == r.end()) {
      problem("missing or mistyped required field");
      continue;
    }
    if (auto src = r.find("source");
        src != r.end() && (!src->is_string() || *src != "external")) {
      problem("source must be \"external\"");
      continue;
    }
    SemanticFrameOccurrence o;
    o.article_id = id->get<std::string>();
    o.sentence_index = index->get<size_t>();
    o.frame_name = frame->get<std::string>();
    o.source = OccurrenceSource::kExternal;
    if (!ReadSpan(*trigger, &o.trigger)) {
      problem("bad trigger span");
      continue;
    }
    bool bad_roles = false;
    if (auto roles = r.find("roles"); roles != r.end() && !roles->is_null()) {
      if (!roles->is_object()) {
        problem("roles must be an object");
        continue;
      }
      for (const auto &[name, value] : roles->items()) {
        TextSpan span;
        if (!ReadSpan(value, &span)) {
          bad_roles = true;
          break;
        }
        std::string raw = name;
        if (value.contains("raw_role") && value.at("raw_role").is_string()) {
          raw = value.at("raw_role").get<std::string>();
        }
        o.roles[name] = RoleFiller{span.text, span.start, span.end, raw};
      }
    }
    if (bad_roles) {
      problem("bad role span");
      continue;
    }
    const FrameOfInterest *foi = inventory.Find(o.frame_name);
    if (!foi) {
      ++result.out_of_inventory;
      result.problems.push_back("record " + std::to_string(line) +
                                ": frame \"" + o.frame_name +
                                "\" is not a frame of interest");
      continue;
    }
    std::map<std::string, RoleFiller> kept;
    for (auto &[name, filler] : o.roles) {
      // A Killer reported by the parser is stored under Assailant.
      if (name == "Killer" && foi->HasRole("Killer")) {
        filler.raw_role = "Killer";
        kept[std::string(kAssailantRole)] = filler;
      } else if (foi->HasRole(name) ||
                 (name == kAssailantRole && foi->HasRole("Killer"))) {
        kept[name] = filler;
      } else {
        ++result.dropped_roles;
      }
    }
    o.roles = std::move(kept);
    result.occurrences.push_back(std::move(o));
  }
  return result;
}

ExternalIngest IngestExternal(const std::filesystem::path &path,
                              const FrameInventory &inventory) {
  std::vector<json> records;
  size_t malformed = 0;
  std::vector<std::string> problems;
  ReadJsonl(
      path, [&](const json &r, size_t) { records.push_back(r); },
      [&](size_t line, const std::string &why) {
        ++malformed;
        problems.push_back("line " + std::to_string(line) + ": " + why);
      });
  ExternalIngest result = IngestExternalRecords(records, inventory);
  result.skipped += malformed;
  result.problems.insert(result.problems.begin(), problems.begin(),
                         problems.end());
  return result;
}

}  // namespace framescope
