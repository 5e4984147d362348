// Copyright 2026 The nestbelief Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <string>
#include <vector>

#include "nestbelief/speech_acts.hpp"

namespace nestbelief {
namespace {

struct Row {
  const char* name;
  ActClass act_class;
  const char* parent;
  std::vector<const char*> pre;
};

// Only inform and correction carry preconditions taken from the literature.
// The other eighteen condition sets are our own choices, kept minimal so each
// child adds exactly what distinguishes it from its parent.
const std::vector<Row>& rows() {
  static const std::vector<Row> kRows = {
      // Questions.
      {"question", ActClass::Question, nullptr,
       {"goal(Speaker,knowif(Speaker,Proposition))",
        "believe(Speaker,knowif(Hearer,Proposition))"}},
      {"yn-question", ActClass::Question, "question",
       {"goal(Speaker,believe(Hearer,goal(Speaker,knowif(Speaker,Proposition))))"}},
      {"wh-question", ActClass::Question, "question",
       {"goal(Speaker,knowref(Speaker,Proposition))"}},
      {"check-question", ActClass::Question, "yn-question", {"believe(Speaker,Proposition)"}},
      {"alternatives-question", ActClass::Question, "question",
       {"believe(Speaker,alternatives(Proposition))"}},
      // Answers.
      {"answer", ActClass::Answer, nullptr,
       {"believe(Speaker,Proposition)", "believe(Speaker,goal(Hearer,knowif(Hearer,Proposition)))"}},
      {"confirm", ActClass::Answer, "answer", {"believe(Speaker,believe(Hearer,Proposition))"}},
      {"disconfirm", ActClass::Answer, "answer",
       {"believe(Speaker,believe(Hearer,not(Proposition)))"}},
      {"wh-answer", ActClass::Answer, "answer",
       {"believe(Speaker,goal(Hearer,knowref(Hearer,Proposition)))"}},
      {"refuse-answer", ActClass::Answer, nullptr,
       {"believe(Speaker,goal(Hearer,knowif(Hearer,Proposition)))",
        "goal(Speaker,not(knowif(Hearer,Proposition)))"}},
      // Requests.
      {"request", ActClass::Request, nullptr,
       {"goal(Speaker,done(Hearer,Proposition))", "believe(Speaker,able(Hearer,Proposition))"}},
      {"request-action", ActClass::Request, "request",
       {"goal(Speaker,believe(Hearer,goal(Speaker,done(Hearer,Proposition))))"}},
      {"request-info", ActClass::Request, "request",
       {"goal(Speaker,knowif(Speaker,Proposition))"}},
      {"suggest", ActClass::Request, "request",
       {"believe(Speaker,beneficial(Hearer,Proposition))"}},
      // Informs.
      {"inform", ActClass::Inform, nullptr,
       {"believe(Speaker,Proposition)", "goal(Speaker,believe(Hearer,Proposition))"}},
      {"correction", ActClass::Inform, "inform",
       {"believe(Speaker,believe(Hearer,not(Proposition)))"}},
      {"agreement", ActClass::Inform, "inform", {"believe(Speaker,believe(Hearer,Proposition))"}},
      {"warning", ActClass::Inform, "inform",
       {"believe(Speaker,undesirable(Hearer,Proposition))"}},
      {"reminder", ActClass::Inform, "inform",
       {"believe(Speaker,knewbefore(Hearer,Proposition))"}},
      {"elaboration", ActClass::Inform, "inform",
       {"believe(Speaker,relevant(Hearer,Proposition))"}},
  };
  return kRows;
}

ActLibrary build() {
  ActLibrary lib;
  for (const Row& r : rows()) {
    ActSchema s;
    s.name = r.name;
    s.act_class = r.act_class;
    if (r.parent) s.parent = r.parent;
    for (const char* p : r.pre) s.own_preconditions.push_back(parse_formula(p));
    lib.add(std::move(s));
  }
  return lib;
}

}  // namespace

const ActLibrary& ActLibrary::builtin() {
  static const ActLibrary kLibrary = build();
  return kLibrary;
}

std::string_view builtin_library_text() {
  static const std::string kText = [] {
    std::string out;
    for (const ActSchema* s : ActLibrary::builtin().schemas()) out += format_act(*s) + "\n";
    return out;
  }();
  return kText;
}

}  // namespace nestbelief
