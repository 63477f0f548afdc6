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

#include "fixtures.h"

namespace framescope::testing {

const std::string &GroundingBody() {
  static const std::string body =
      "Israeli air strikes hit the Jabalia refugee camp on Tuesday, killing "
      "dozens of people, according to local health officials.\n"
      "The military said it had targeted a senior Hamas commander who was "
      "hiding in a tunnel beneath the camp.\n"
      "\xE2\x80\x9CWe are living in constant fear,\xE2\x80\x9D said Amal, a "
      "mother of four who fled her home in northern Gaza.\n"
      "Aid agencies warned that hospitals were running out of fuel and "
      "medicine.\n"
      "Hamas fighters fired dozens of rockets towards Tel Aviv, the army "
      "said.\n"
      "The United Nations secretary-general called for an immediate "
      "humanitarian ceasefire.\n"
      "Families   of the hostages gathered outside the defence ministry, "
      "demanding that the government negotiate their release.\n"
      "Officials described the militants as animals who must be "
      "eliminated.\n"
      "Children queued for hours for bread and clean water in Rafah.\n"
      "Talks mediated by Qatar and Egypt continued late into the night "
      "without a breakthrough.";
  return body;
}

const std::vector<GroundingCase> &GroundingCases() {
  static const std::vector<GroundingCase> cases = {
      // Verbatim.
      {"Israeli air strikes hit the Jabalia refugee camp on Tuesday", true},
      {"killing dozens of people", true},
      {"The military said it had targeted a senior Hamas commander", true},
      {"a mother of four who fled her home in northern Gaza", true},
      {"hospitals were running out of fuel and medicine", true},
      {"Hamas fighters fired dozens of rockets towards Tel Aviv", true},
      {"called for an immediate humanitarian ceasefire", true},
      {"Officials described the militants as animals who must be eliminated.",
       true},
      {"Children queued for hours for bread and clean water in Rafah", true},
      {"Talks mediated by Qatar and Egypt continued late into the night",
       true},
      // Verbatim once elisions, quotes, case and spacing are normalized.
      {"\xE2\x80\xA6hit the Jabalia refugee camp on Tuesday, killing "
       "dozens\xE2\x80\xA6",
       true},
      {"...a senior Hamas commander who was hiding in a tunnel...", true},
      {"\"We are living in constant fear,\"", true},
      {"\xE2\x80\xA6 said Amal, a mother of four \xE2\x80\xA6", true},
      {"Families of the hostages gathered outside the defence ministry", true},
      {"AID AGENCIES WARNED that hospitals", true},
      {"'the militants as animals'", true},
      {"towards Tel Aviv, the army said. The United Nations", true},
      {"... clean water in Rafah.", true},
      {"\xE2\x80\x9CTalks mediated by Qatar and Egypt\xE2\x80\xA6\xE2\x80\x9D",
       true},
      // Paraphrases.
      {"Israeli airstrikes hit the Jabalia refugee camp on Tuesday", false},
      {"killing scores of people", false},
      {"the army said it had targeted a senior Hamas commander", false},
      {"a mother of three who fled her home in northern Gaza", false},
      {"hospitals were running low on fuel and medicine", false},
      {"Hamas militants fired dozens of rockets towards Tel Aviv", false},
      {"called for an immediate ceasefire", false},
      {"Officials called the militants animals", false},
      {"Children waited for hours for bread", false},
      {"the peace talks collapsed", false},
  };
  return cases;
}

const std::vector<TaggerCase> &TaggerCases() {
  static const std::vector<TaggerCase> cases = {
      // Role-bearing sentences.
      {"Hamas attacked the kibbutz.",
       {{"Attack", "attacked"}},
       {{"attacked", "Hamas", "kibbutz"}}},
      {"Israeli forces attacked the camp.",
       {{"Attack", "attacked"}},
       {{"attacked", "Israeli forces", "camp"}}},
      {"The camp was attacked.",
       {{"Attack", "attacked"}},
       {{"attacked", "", "camp"}}},
      {"The hospital was struck by Israeli warplanes.",
       {{"Attack", "struck"}},
       {{"struck", "Israeli warplanes", "hospital"}}},
      {"Hamas militants killed the festival-goers.",
       {{"Killing", "killed"}},
       {{"killed", "Hamas militants", "festival-goers"}}},
      {"Israeli troops raided the Jenin refugee camp.",
       {{"Attack", "raided"}},
       {{"raided", "Israeli troops", "Jenin refugee camp"}}},
      {"The IDF bombed a school in Khan Younis.",
       {{"Attack", "bombed"}},
       {{"bombed", "IDF", "school"}}},
      {"Settlers killed a Palestinian farmer near Nablus.",
       {{"Killing", "killed"}},
       {{"killed", "Settlers", "Palestinian farmer"}}},
      {"Hamas fighters ambushed an Israeli patrol in Gaza.",
       {{"Attack", "ambushed"}},
       {{"ambushed", "Hamas fighters", "Israeli patrol"}}},
      {"Palestinian civilians were killed by Israeli troops.",
       {{"People", "civilians"}, {"Killing", "killed"}},
       {{"killed", "Israeli troops", "Palestinian civilians"}}},
      {"Israeli jets bombed the Jabalia camp overnight.",
       {{"Attack", "bombed"}},
       {{"bombed", "Israeli jets", "Jabalia camp"}}},
      {"The Israeli army shelled the town of Beit Hanoun.",
       {{"Attack", "shelled"}, {"Political_locales", "town"}},
       {{"shelled", "Israeli army", "town"}}},
      {"Hamas gunmen murdered the residents of Kfar Aza.",
       {{"Killing", "murdered"}, {"People", "residents"}},
       {{"murdered", "Hamas gunmen", "residents"}}},
      {"The Nuseirat camp was bombed again.",
       {{"Attack", "bombed"}},
       {{"bombed", "", "Nuseirat camp"}}},
      {"Israel assassinated the commander in Beirut.",
       {{"Killing", "assassinated"}},
       {{"assassinated", "Israel", "commander"}}},
      {"Hamas executed two hostages.",
       {{"Killing", "executed"}},
       {{"executed", "Hamas", "hostages"}}},
      {"Israeli soldiers stormed the Al-Shifa hospital.",
       {{"Attack", "stormed"}},
       {{"stormed", "Israeli soldiers", "Al-Shifa hospital"}}},
      {"Palestinian militants fired rockets and attacked Sderot.",
       {{"Firing", "fired"}, {"Attack", "attacked"}},
       {{"attacked", "Palestinian militants", "Sderot"}}},
      {"The refugees were slaughtered by Hamas gunmen.",
       {{"Killing", "slaughtered"}},
       {{"slaughtered", "Hamas gunmen", "refugees"}}},
      {"Attacks on the camp continued.",
       {{"Attack", "Attacks"}},
       {{"Attacks", "", "camp"}}},
      // Trigger-only sentences.
      {"The air strike destroyed three homes.",
       {{"Attack", "air strike"}, {"Destroying", "destroyed"}},
       {}},
      {"The talks resumed in Cairo.", {}, {}},
      {"Hundreds of people fled their homes.",
       {{"Quantified_mass", "Hundreds"}, {"People", "people"}},
       {}},
      {"The death toll rose to 9,000.", {{"Casualties", "death toll"}}, {}},
      {"Many children are suffering from malnutrition and dehydration.",
       {{"People_by_age", "children"},
        {"Medical_conditions", "malnutrition"},
        {"Medical_conditions", "dehydration"}},
       {}},
      {"Families described their grief and anger.",
       {{"Kinship", "Families"},
        {"Emotion_directed", "grief"},
        {"Emotion_directed", "anger"}},
       {}},
      {"Residents are afraid to return.",
       {{"People", "Residents"}, {"Fear", "afraid"}},
       {}},
      {"Aid agencies warned of a humanitarian crisis.",
       {{"Assistance", "Aid"}},
       {}},
      {"Trucks carrying humanitarian aid entered through Rafah.",
       {{"Assistance", "humanitarian aid"}},
       {}},
      {"Troops opened fire on the crowd.", {{"Firing", "opened fire"}}, {}},
      {"Gunfire was heard across the city.",
       {{"Firing", "Gunfire"}, {"Political_locales", "city"}},
       {}},
      {"The army launched a ground offensive.",
       {{"Military_operation", "ground offensive"}},
       {}},
      {"The military operation entered its third week.",
       {{"Military_operation", "military operation"}},
       {}},
      {"Rights groups accused both sides of war crimes.",
       {{"Committing_crime", "war crimes"}},
       {}},
      {"The clashes lasted for hours.",
       {{"Hostile_encounter", "clashes"}},
       {}},
      {"The war has displaced most of the population.",
       {{"Hostile_encounter", "war"}},
       {}},
      {"Engineers built a field hospital.", {{"Building", "built"}}, {}},
      {"Bulldozers demolished the houses.", {{"Destroying", "demolished"}}, {}},
      {"Entire neighbourhoods were razed.", {{"Destroying", "razed"}}, {}},
      {"The bombing left hundreds dead.",
       {{"Attack", "bombing"},
        {"Quantified_mass", "hundreds"},
        {"Death", "dead"}},
       {}},
      {"Her mother died in the shelling.",
       {{"Kinship", "mother"}, {"Death", "died"}, {"Attack", "shelling"}},
       {}},
      {"Doctors warned of cholera and infection.",
       {{"Medical_conditions", "cholera"},
        {"Medical_conditions", "infection"}},
       {}},
      {"Elderly patients are at risk.",
       {{"People_by_age", "Elderly"}, {"Being_at_risk", "at risk"}},
       {}},
      {"Officials condemned the terrorist attack.",
       {{"Terrorism", "terrorist"}, {"Attack", "attack"}},
       {}},
      {"The wounded were taken to Nasser hospital.",
       {{"Casualties", "wounded"}},
       {}},
      {"Thousands of injured people waited for treatment.",
       {{"Quantified_mass", "Thousands"},
        {"Casualties", "injured"},
        {"People", "people"}},
       {}},
      {"Many are unaware of the danger.",
       {{"Awareness", "unaware"}, {"Being_at_risk", "danger"}},
       {}},
      {"The trauma will affect a generation of kids.",
       {{"Medical_conditions", "trauma"}, {"People_by_age", "kids"}},
       {}},
      {"Panic spread as sirens sounded.", {{"Fear", "Panic"}}, {}},
      {"Volunteers helped evacuate the wounded.",
       {{"Assistance", "helped"}, {"Casualties", "wounded"}},
       {}},
  };
  return cases;
}

}  // namespace framescope::testing
