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

// Taxonomy loading, prompt rendering, response recovery and grounding.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <sstream>

#include "framescope/grounding.h"
#include "framescope/prompts.h"
#include "framescope/responses.h"
#include "framescope/taxonomy.h"
#include "support/fixtures.h"
#include "support/test_util.h"

using namespace framescope;
using framescope::testing::DataDir;
using framescope::testing::MakeArticle;

namespace {

const Taxonomies &Tax() {
  static const Taxonomies tax = LoadTaxonomies(DataDir() / "taxonomy");
  return tax;
}

json TaxonomyFile(const std::string &name) {
  return json::parse(
      framescope::testing::ReadFile(DataDir() / "taxonomy" / name));
}

// Rebuilds dotted kind paths from the rendered scaffold's key nesting.
std::vector<std::string> ScaffoldPaths(const std::string &scaffold) {
  std::vector<std::string> stack, out;
  std::istringstream lines(scaffold);
  std::string line;
  while (std::getline(lines, line)) {
    const size_t quote = line.find('"');
    if (quote == std::string::npos) continue;
    const size_t depth = quote / 2;
    const std::string key =
        line.substr(quote + 1, line.find('"', quote + 1) - quote - 1);
    stack.resize(depth - 1);
    stack.push_back(key);
    if (line.find('[') != std::string::npos) {
      std::string path = stack[0] == "war_journalism_indicators" ? "war"
                                                                 : "peace";
      for (size_t i = 1; i < stack.size(); ++i) path += "." + stack[i];
      out.push_back(path);
    }
  }
  return out;
}

}  // namespace

TEST_CASE("stock taxonomy") {
  const auto &t = Tax();
  CHECK(t.generic.frames().size() == 15);
  size_t war = 0, peace = 0;
  for (const auto &k : t.indicators.kinds()) {
    (k.polarity == Polarity::kWar ? war : peace)++;
  }
  CHECK(war == 14);
  CHECK(peace == 7);
  CHECK(t.indicators.PolarityOf("war.partisan_framing") == Polarity::kWar);
  CHECK(t.indicators.PolarityOf("peace.victim_orientation") ==
        Polarity::kPeace);
  CHECK_THROWS_AS(t.indicators.PolarityOf("war.banana"), std::out_of_range);
  const auto *elites = t.indicators.Find("war.focus_on_elites");
  REQUIRE(elites);
  CHECK_FALSE(elites->has_target);
  CHECK_FALSE(elites->has_reasoning);
  const auto *invisible =
      t.indicators.Find("peace.focus_on_invisible_effects_of_war");
  REQUIRE(invisible);
  CHECK(invisible->has_target);
  CHECK_FALSE(invisible->has_reasoning);
  CHECK(t.frames.Find("Attack")->HasRole("Assailant"));
  CHECK(t.frames.Find("Killing")->HasRole("Killer"));
  CHECK(t.frames.Find("Kinship")->effect_class == EffectClass::kInvisible);
  CHECK(t.frames.Find("Firing")->effect_class == EffectClass::kVisible);
}

TEST_CASE("label lookup accepts codes, short names and aliases") {
  const auto &g = Tax().generic;
  CHECK(g.FindByLabel("security  AND defense")->label == "Security and defense");
  CHECK(g.FindByAnyName("cap&res")->label == "Capacity and resources");
  CHECK(g.FindByAnyName("7.0")->label == "Crime and punishment");
  CHECK(g.FindByAnyName("Legality, constitutionality and jurispudence")
            ->label == "Legality, constitutionality and jurisprudence");
  CHECK(g.FindByAnyName("Weather") == nullptr);
}

TEST_CASE("missing canonical label is named") {
  json doc = TaxonomyFile("generic_frames.json");
  auto &frames = doc["frames"];
  for (size_t i = 0; i < frames.size(); ++i) {
    if (frames[i]["label"] == "Morality") {
      frames.erase(i);
      break;
    }
  }
  try {
    GenericInventoryFromJson(doc);
    FAIL("expected TaxonomyError");
  } catch (const TaxonomyError &e) {
    CHECK(std::string(e.what()).find("Morality") != std::string::npos);
  }
}

TEST_CASE("unknown keys are rejected") {
  json doc = TaxonomyFile("indicators.json");
  doc["indicators"][0]["colour"] = "red";
  CHECK_THROWS_AS(IndicatorInventoryFromJson(doc), TaxonomyError);
}

TEST_CASE("custom invisible frame is accepted") {
  json doc = TaxonomyFile("frames_of_interest.json");
  doc["frames"].push_back({{"label", "Grief"},
                           {"effect_class", "invisible"},
                           {"roles_of_interest", json::array()}});
  auto inv = FrameInventoryFromJson(doc);
  REQUIRE(inv.Find("Grief"));
  CHECK(inv.Find("Grief")->effect_class == EffectClass::kInvisible);
}

TEST_CASE("taxonomy round trip") {
  const auto &t = Tax();
  CHECK(GenericInventoryToJson(GenericInventoryFromJson(
            GenericInventoryToJson(t.generic))) ==
        GenericInventoryToJson(t.generic));
  CHECK(IndicatorInventoryToJson(IndicatorInventoryFromJson(
            IndicatorInventoryToJson(t.indicators))) ==
        IndicatorInventoryToJson(t.indicators));
  CHECK(FrameInventoryToJson(FrameInventoryFromJson(
            FrameInventoryToJson(t.frames))) ==
        FrameInventoryToJson(t.frames));
}

TEST_CASE("generic prompt") {
  PromptOptions opts;
  opts.model = "m";
  auto a = MakeArticle("a1", Region::kUS, "cnn.com", "T",
                       "Strikes hit Gaza overnight.");
  auto req = RenderGenericPrompt(a, Tax().generic, opts);
  for (const auto &f : Tax().generic.frames()) {
    CHECK(req.user_text.find(f.label + " - " + f.description) !=
          std::string::npos);
  }
  CHECK(req.user_text.find("Article: Strikes hit Gaza overnight.") !=
        std::string::npos);
  CHECK(req.user_text.find("{\"frames-list\"") != std::string::npos);
  CHECK(req.system_text.find("journalism scholar") != std::string::npos);
  CHECK_FALSE(req.truncated);
  CHECK(req.temperature == 0.0);

  opts.max_input_tokens = 3;
  req = RenderGenericPrompt(a, Tax().generic, opts);
  CHECK(req.truncated);
  CHECK(req.user_text.find("Article: Strikes hit Gaza\n") != std::string::npos);

  a.body.clear();
  CHECK_THROWS_AS(RenderGenericPrompt(a, Tax().generic, opts),
                  std::invalid_argument);
}

TEST_CASE("indicator scaffold follows the taxonomy") {
  const std::string scaffold = RenderIndicatorScaffold(Tax().indicators);
  std::vector<std::string> expected;
  for (const auto &k : Tax().indicators.kinds()) expected.push_back(k.path);
  CHECK(ScaffoldPaths(scaffold) == expected);
  CHECK(scaffold.find("\"focus_on_elites\": [<List of instances from the "
                      "article>]") != std::string::npos);
  CHECK(scaffold.find("\"demonizing_language\": [(<List of instances from the "
                      "article>, <target>, <reasoning>)]") !=
        std::string::npos);

  auto kinds = Tax().indicators.kinds();
  kinds.push_back({"war.language.glorifying_language", Polarity::kWar, true,
                   false, "custom"});
  IndicatorInventory custom(kinds);
  const std::string with_custom = RenderIndicatorScaffold(custom);
  const auto paths = ScaffoldPaths(with_custom);
  CHECK(paths.size() == kinds.size());
  CHECK(std::find(paths.begin(), paths.end(),
                  "war.language.glorifying_language") != paths.end());
  CHECK(with_custom.find("\"glorifying_language\": [(<List of instances from "
                         "the article>, <target>)]") != std::string::npos);
}

TEST_CASE("braces in article text do not disturb templates") {
  PromptOptions opts;
  opts.model = "m";
  const std::string body = "He wrote {scaffold} and {{x}} and a lone } brace.";
  auto a = MakeArticle("a", Region::kUS, "d", "t", body);
  auto req = RenderIndicatorPrompt(a, Tax().indicators, opts);
  CHECK(req.user_text.find("Article: " + body) != std::string::npos);
  const std::string scaffold = RenderIndicatorScaffold(Tax().indicators);
  const size_t first = req.user_text.find(scaffold);
  REQUIRE(first != std::string::npos);
  CHECK(req.user_text.find(scaffold, first + 1) == std::string::npos);
  CHECK_THROWS_AS(RenderTemplate("{nope}", {}), std::invalid_argument);
  CHECK(RenderTemplate("{{a}} {b}", {{"b", "{c}"}}) == "{a} {c}");
}

TEST_CASE("json recovery") {
  CHECK(RecoverJsonObject("```json\n{\"a\": 1}\n```")->at("a") == 1);
  CHECK(RecoverJsonObject("Sure! Here it is: {\"a\": {\"b\": 2}} Thanks")
            ->at("a")
            .at("b") == 2);
  CHECK(RecoverJsonObject("{\"a\": [1, 2,],}").has_value());
  CHECK(RecoverJsonObject("{\"a\": [(\"x\", \"y\")]}")->at("a")[0][1] == "y");
  CHECK_FALSE(RecoverJsonObject("no json here").has_value());
  CHECK_FALSE(RecoverJsonObject("").has_value());
}

TEST_CASE("generic responses") {
  const auto &g = Tax().generic;
  auto a = ParseGenericResponse(
      R"({"frames-list": ["Security and defense","Political"], "reason": "war"})",
      "x", g);
  CHECK(a.valid);
  CHECK(a.frames ==
        std::vector<std::string>{"Security and defense", "Political"});
  CHECK(a.reason == "war");

  a = ParseGenericResponse("```json\n{\"frames-list\": [\"security and "
                           "defense\"]}\n```",
                           "x", g);
  CHECK(a.valid);
  CHECK(a.frames == std::vector<std::string>{"Security and defense"});

  a = ParseGenericResponse(R"({"frames-list": ["Weather"]})", "x", g);
  CHECK_FALSE(a.valid);
  CHECK(a.frames == std::vector<std::string>{"None"});
  CHECK(a.unknown_labels == 1);

  a = ParseGenericResponse("garbage", "x", g);
  CHECK_FALSE(a.valid);
  CHECK(a.frames == std::vector<std::string>{"None"});
  CHECK(a.raw_response == "garbage");

  a = ParseGenericResponse(R"({"frames-list": ["None"]})", "x", g);
  CHECK(a.frames == std::vector<std::string>{"None"});

  a = ParseGenericResponse(R"({"frames-list": ["Political", "None"]})", "x", g);
  CHECK(a.frames == std::vector<std::string>{"Political"});

  // The prompt's own format line quotes the list as a string.
  a = ParseGenericResponse(
      R"({"frames-list": "[Economic, Political]", "reason": "r"})", "x", g);
  CHECK(a.frames == std::vector<std::string>{"Economic", "Political"});

  auto round = AssignmentFromJson(AssignmentToJson(a));
  CHECK(round.frames == a.frames);
  CHECK(round.valid == a.valid);
}

TEST_CASE("indicator responses") {
  const auto &inv = Tax().indicators;
  auto article = MakeArticle(
      "a", Region::kUK, "d", "t",
      "A minister called them animals. Families mourned in Gaza.");
  auto p = ParseIndicatorResponse(
      R"({"war_journalism_indicators": {"language": {"demonizing_language":
          ["called them animals", "Hamas", "dehumanizing metaphor"]}}})",
      article, inv);
  CHECK_FALSE(p.failed);
  REQUIRE(p.instances.size() == 1);
  const auto &i = p.instances[0];
  CHECK(i.kind_path == "war.language.demonizing_language");
  CHECK(i.grounded);
  CHECK(i.target == std::optional<std::string>("Hamas"));
  CHECK(i.reasoning == std::optional<std::string>("dehumanizing metaphor"));
  REQUIRE(i.char_span.has_value());
  CHECK(article.body.substr(i.char_span->first,
                            i.char_span->second - i.char_span->first) ==
        "called them animals");

  p = ParseIndicatorResponse(
      R"({"war_journalism_indicators": {"partisan_framing":
          [["the peace talks collapsed", "both", "r"]]}})",
      article, inv);
  REQUIRE(p.instances.size() == 1);
  CHECK_FALSE(p.instances[0].grounded);
  CHECK_FALSE(p.instances[0].char_span.has_value());

  // Tuples of 1, 2 and 3 positions, a bare instance list and a missing peace
  // branch.
  p = ParseIndicatorResponse(
      R"({"war_journalism_indicators": {
            "attribution_of_blame": [["called them animals"],
                                     [["Families mourned"], "Israel"]],
            "focus_on_elites": ["A minister"],
            "labelling_of_people": [42]}})",
      article, inv);
  // Instances come out in taxonomy order.
  REQUIRE(p.instances.size() == 3);
  CHECK(p.instances[0].kind_path == "war.focus_on_elites");
  CHECK_FALSE(p.instances[0].target.has_value());
  CHECK(p.instances[1].kind_path == "war.attribution_of_blame");
  CHECK_FALSE(p.instances[1].target.has_value());
  CHECK(p.instances[2].target == std::optional<std::string>("Israel"));
  CHECK(p.malformed_by_kind.at("war.labelling_of_people") == 1);

  p = ParseIndicatorResponse("{\"oops\": 1}", article, inv);
  CHECK(p.failed);
  p = ParseIndicatorResponse("not json", article, inv);
  CHECK(p.failed);
  CHECK(p.instances.empty());

  p = ParseIndicatorResponse(
      R"({"peace_journalism_indicator": {"made_up": ["x"]}})", article, inv);
  CHECK(p.unknown_kinds == std::vector<std::string>{"peace.made_up"});
}

TEST_CASE("instances keep only the fields their kind carries") {
  auto article = MakeArticle("a", Region::kUK, "d", "t", "Leaders met.");
  auto p = ParseIndicatorResponse(
      R"({"war_journalism_indicators": {"focus_on_elites":
          ["Leaders met"]},
          "peace_journalism_indicator": {"focus_on_invisible_effects_of_war":
          [["Leaders met", "t", "r"]]}})",
      article, Tax().indicators);
  REQUIRE(p.instances.size() == 2);
  for (const auto &i : p.instances) {
    const auto *kind = Tax().indicators.Find(i.kind_path);
    CHECK(i.target.has_value() == kind->has_target);
    CHECK(i.reasoning.has_value() == kind->has_reasoning);
    auto round = InstanceFromJson(InstanceToJson(i));
    CHECK(round.excerpt == i.excerpt);
    CHECK(round.char_span == i.char_span);
  }
}

TEST_CASE("grounding examples") {
  const std::string body = "The strike hit the camp.  Many were hurt.";
  auto r = GroundExcerpt("The strike hit the camp.", body);
  CHECK(r.grounded);
  CHECK(r.span == std::optional<CharSpan>(CharSpan{0, 24}));
  r = GroundExcerpt("\xE2\x80\xA6 the camp. Many were", body);
  CHECK(r.grounded);
  CHECK(body.substr(r.span->first, r.span->second - r.span->first) ==
        "the camp.  Many were");
  CHECK_FALSE(GroundExcerpt("The raid hit the camp.", body).grounded);
  CHECK_FALSE(GroundExcerpt("", body).grounded);
  CHECK_FALSE(GroundExcerpt("...", body).grounded);
}

TEST_CASE("grounding fixture") {
  const auto &body = framescope::testing::GroundingBody();
  const auto normalized = NormalizeForGrounding(body).text;
  for (const auto &c : framescope::testing::GroundingCases()) {
    CAPTURE(c.excerpt);
    auto r = GroundExcerpt(c.excerpt, body);
    CHECK(r.grounded == c.grounded);
    if (r.grounded) {
      // Soundness: the normalized excerpt really is a substring.
      CHECK(normalized.find(NormalizeExcerpt(c.excerpt)) != std::string::npos);
      REQUIRE(r.span.has_value());
      CHECK(NormalizeExcerpt(body.substr(r.span->first,
                                         r.span->second - r.span->first)) ==
            NormalizeExcerpt(c.excerpt));
    }
  }
}
