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

// Semantic frame occurrences for the frames of interest.
//
// The default backend is a lexical-unit tagger: each frame lists lemmas and
// multiword expressions that evoke it, sentences are scanned for them, and
// Attack/Killing hits get heuristic Assailant/Victim fillers. Occurrences
// produced by an external frame-semantic parser can be loaded instead from
// JSONL with the same record layout.
//
// Role heuristic, and where it goes wrong:
//   * Candidate entities are gazetteer phrases, runs of capitalized words and
//     short noun phrases after a determiner ("the kibbutz").
//   * Assailant is the nearest candidate before the trigger, Victim the
//     nearest after it.
//   * "was/were/been/being/is/are" + participle trigger flips both sides, so
//     "The camp was attacked by Hamas" gives Victim=camp, Assailant=Hamas.
//   * There is no syntax: appositives, relative clauses, nominal triggers
//     ("the attack on X by Y") and lists of actors are routinely mis-assigned.

#ifndef FRAMESCOPE_SEMFRAME_H_
#define FRAMESCOPE_SEMFRAME_H_

#include <cstddef>
#include <filesystem>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "framescope/io.h"
#include "framescope/taxonomy.h"

namespace framescope {

struct Sentence {
  std::string_view text;
  // Byte offsets into the source text.
  size_t begin = 0;
  size_t end = 0;
};

// Splits on '.', '?', '!' and '…' (plus any closing quotes or brackets) when
// followed by whitespace or end of text, and on blank lines. A '.' ending a
// word listed in `abbreviations` ("Dr.", "U.S.") does not end a sentence.
// Abbreviations are matched case-insensitively and include the final dot.
std::vector<Sentence> SplitSentences(std::string_view text,
                                     const std::set<std::string> &abbreviations);

// Abbreviation and word lists: one entry per line, '#' starts a comment.
std::set<std::string> LoadWordList(const std::filesystem::path &path);

// Lemma candidates of a lowercased word: the word itself, irregular forms
// from a small exception table, and suffix-stripped variants (-s, -es, -ies,
// -ed, -d, -ied, -ing, doubled final consonants).
std::set<std::string> LemmaCandidates(std::string_view lowered_word);

struct LexicalUnit {
  // Space-separated lemma sequence, lowercase ("air strike").
  std::string lemma;
  // Coarse part of speech: "n", "v", "a", ... (informational).
  std::string pos;
  std::vector<std::string> words;
};

class Lexicon {
 public:
  Lexicon() = default;

  // Throws std::invalid_argument when the unit repeats within the frame.
  void Add(const std::string &frame, std::string lemma, std::string pos);

  // frame -> units, in file order.
  const std::vector<std::pair<std::string, std::vector<LexicalUnit>>> &frames()
      const {
    return frames_;
  }
  size_t unit_count() const;

 private:
  std::vector<std::pair<std::string, std::vector<LexicalUnit>>> frames_;
};

// {"frames": {"Attack": [{"lu": "attack", "pos": "v"}, ...], ...}}
// Every frame must exist in `inventory`; throws TaxonomyError otherwise.
Lexicon LexiconFromJson(const json &doc, const FrameInventory &inventory);
Lexicon LoadLexicon(const std::filesystem::path &path,
                    const FrameInventory &inventory);

enum class OccurrenceSource { kLexicon, kExternal };
std::string_view SourceName(OccurrenceSource source);

struct TextSpan {
  std::string text;
  size_t start = 0;
  size_t end = 0;
};

struct RoleFiller {
  std::string text;
  size_t start = 0;
  size_t end = 0;
  // The frame's own role name, e.g. "Killer" reported under "Assailant".
  std::string raw_role;
};

struct SemanticFrameOccurrence {
  std::string article_id;
  size_t sentence_index = 0;
  std::string frame_name;
  // Offsets are bytes into the tagged text (article body or title).
  TextSpan trigger;
  std::map<std::string, RoleFiller> roles;
  OccurrenceSource source = OccurrenceSource::kLexicon;
};

json OccurrenceToJson(const SemanticFrameOccurrence &occurrence);

// Longest span first, then leftmost; chosen triggers never overlap. Output is
// ordered by trigger start. Offsets are shifted by sentence.begin.
std::vector<SemanticFrameOccurrence> TagSentence(const Sentence &sentence,
                                                 const Lexicon &lexicon,
                                                 std::string_view article_id = {},
                                                 size_t sentence_index = 0);

// Surface phrases mapped to actor groups ("hamas militants" ->
// "hamas-associated"). Matching is case-insensitive over whole words.
class Gazetteer {
 public:
  Gazetteer() = default;
  void Add(std::string_view phrase, std::string group);

  struct Match {
    size_t first_token = 0;
    size_t token_count = 0;
    std::string group;
  };

  // Group of the longest entry occurring anywhere in `text`, leftmost on
  // ties; "other" when nothing matches.
  std::string GroupOf(std::string_view text) const;

  // Non-overlapping matches over already-lowered tokens, longest first.
  std::vector<Match> MatchTokens(const std::vector<std::string> &tokens) const;

  bool empty() const { return entries_.empty(); }

 private:
  std::vector<std::pair<std::vector<std::string>, std::string>> entries_;
};

inline constexpr std::string_view kOtherGroup = "other";

// {"groups": {"hamas-associated": ["hamas", "hamas militants"], ...}}
Gazetteer GazetteerFromJson(const json &doc);
Gazetteer LoadGazetteer(const std::filesystem::path &path);

// Reporting role names.
inline constexpr std::string_view kAssailantRole = "Assailant";
inline constexpr std::string_view kVictimRole = "Victim";

// Fills Assailant/Victim on frames whose roles of interest include an agent
// role (Assailant or Killer) and Victim; other occurrences are returned
// unchanged. `sentence` must be the sentence the occurrence came from.
SemanticFrameOccurrence ExtractRoles(const SemanticFrameOccurrence &occurrence,
                                     const Sentence &sentence,
                                     const Gazetteer &gazetteer,
                                     const FrameInventory &inventory);

struct ExternalIngest {
  std::vector<SemanticFrameOccurrence> occurrences;
  // Lines that violate the schema.
  size_t skipped = 0;
  // Valid lines whose frame is not a frame of interest.
  size_t out_of_inventory = 0;
  // Role entries dropped because the role is not of interest.
  size_t dropped_roles = 0;
  std::vector<std::string> problems;
};

// Loads occurrence JSONL written by an external parser. Header lines are
// ignored; every occurrence is marked source=external.
ExternalIngest IngestExternal(const std::filesystem::path &path,
                              const FrameInventory &inventory);
// Same validation for a single record; used by IngestExternal.
ExternalIngest IngestExternalRecords(const std::vector<json> &records,
                                     const FrameInventory &inventory);

}  // namespace framescope

#endif  // FRAMESCOPE_SEMFRAME_H_
