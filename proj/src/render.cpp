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

#include <sstream>

#include "json.hpp"
#include "nestbelief/belief_store.hpp"
#include "nestbelief/speech_acts.hpp"

namespace nestbelief {
namespace {

using Lines = std::vector<std::string>;

Lines box(const Lines& content, const std::string& topic, const std::string& holder,
          const std::string& label) {
  std::size_t width = holder.size() + 1 + label.size();
  width = std::max(width, topic.size() + 1);
  for (const auto& l : content) width = std::max(width, l.size());
  Lines out;
  if (topic.empty()) {
    out.push_back("+" + std::string(width + 2, '-') + "+");
  } else {
    out.push_back("+-" + topic + std::string(width + 1 - topic.size(), '-') + "+");
  }
  for (const auto& l : content) out.push_back("| " + l + std::string(width - l.size(), ' ') + " |");
  out.push_back("| " + holder + std::string(width - holder.size() - label.size(), ' ') + label +
                " |");
  out.push_back("+" + std::string(width + 2, '-') + "+");
  return out;
}

std::string label_of(AttitudeType at) {
  switch (at) {
    case AttitudeType::Belief: return "Belief";
    case AttitudeType::Goal: return "Goal";
    case AttitudeType::Intention: return "Intention";
  }
  return "";
}

Lines leaf_box(const BeliefStore& store, const EnvKey& key) {
  Lines content;
  for (const Formula& f : store.entries(key)) content.push_back(to_string(f, Syntax::Ground));
  return box(content, store.topic(key).value_or(""), store.holder(key.viewpoint),
             label_of(key.attitude));
}

Lines boxes_for(const BeliefStore& store, const Viewpoint& v, bool force_belief);

Lines belief_box(const BeliefStore& store, const Viewpoint& v) {
  EnvKey key{v, AttitudeType::Belief};
  Lines content;
  for (const Formula& f : store.entries(key)) content.push_back(to_string(f, Syntax::Ground));
  for (const std::string& agent : store.child_agents(v)) {
    for (auto& l : boxes_for(store, v.child(agent), false)) content.push_back(std::move(l));
  }
  return box(content, store.topic(key).value_or(""), store.holder(v), "Belief");
}

// The belief box of `v` (when it has anything to show) followed by the goal
// and intention boxes of the same holder.
Lines boxes_for(const BeliefStore& store, const Viewpoint& v, bool force_belief) {
  Lines out;
  const bool has_belief = !store.entries(v, AttitudeType::Belief).empty() ||
                          !store.child_agents(v).empty() ||
                          store.topic(EnvKey{v, AttitudeType::Belief}).has_value();
  if (force_belief || has_belief) out = belief_box(store, v);
  for (AttitudeType at : {AttitudeType::Goal, AttitudeType::Intention}) {
    EnvKey key{v, at};
    if (store.entries(key).empty() && !store.topic(key)) continue;
    for (auto& l : leaf_box(store, key)) out.push_back(std::move(l));
  }
  return out;
}

std::string join(const Lines& lines) {
  std::string out;
  for (const auto& l : lines) {
    out += l;
    out += '\n';
  }
  return out;
}

std::string quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

std::string to_dsl(const BeliefStore& store) {
  std::ostringstream os;
  os << "agent " << store.owner() << "\n";
  if (store.acts() == ActLibrary::builtin()) {
    os << "acts default\n";
  } else {
    os << "acts none\n";
    for (const ActSchema* s : store.acts().schemas()) os << format_act(*s) << "\n";
  }
  for (const auto& [name, members] : store.stereotypes()) {
    os << "stereotype " << name << " {";
    bool first = true;
    for (const auto& m : members) {
      os << (first ? " " : "; ") << to_string(m.attitude) << " "
         << to_string(m.formula, Syntax::Ground);
      first = false;
    }
    os << (members.empty() ? "}" : " }") << "\n";
  }
  for (const auto& [key, entries] : store.environments()) {
    std::string_view verb = attitude_functor(key.attitude);
    for (const Formula& f : entries) {
      os << verb << " " << to_string(key.viewpoint, store.owner()) << ": "
         << to_string(f, Syntax::Ground) << "\n";
    }
  }
  for (const auto& [key, label] : store.topics()) {
    os << "topic " << to_string(key.viewpoint, store.owner()) << " " << to_string(key.attitude)
       << ": " << quote(label) << "\n";
  }
  return os.str();
}

nlohmann::json to_json(const BeliefStore& store, const Viewpoint& v) {
  nlohmann::json j;
  j["owner"] = store.owner();
  j["environments"] = nlohmann::json::array();
  for (const auto& [key, entries] : store.environments()) {
    if (key.viewpoint.depth() < v.depth() || key.viewpoint.prefix(v.depth()) != v) continue;
    nlohmann::json env;
    env["viewpoint"] = nlohmann::json::array();
    for (const Hop& h : key.viewpoint.hops()) env["viewpoint"].push_back(h.agent);
    env["holder"] = store.holder(key.viewpoint);
    env["attitude"] = std::string(to_string(key.attitude));
    if (auto t = store.topic(key)) env["topic"] = *t;
    env["entries"] = nlohmann::json::array();
    for (const Formula& f : entries) env["entries"].push_back(to_string(f, Syntax::Ground));
    j["environments"].push_back(std::move(env));
  }
  j["stereotypes"] = nlohmann::json::object();
  for (const auto& [name, members] : store.stereotypes()) {
    auto& arr = j["stereotypes"][name] = nlohmann::json::array();
    for (const auto& m : members) {
      arr.push_back({{"attitude", std::string(to_string(m.attitude))},
                     {"formula", to_string(m.formula, Syntax::Ground)}});
    }
  }
  return j;
}

}  // namespace

std::string render(const BeliefStore& store, RenderFormat format) {
  return render(store, Viewpoint{}, format);
}

std::string render(const BeliefStore& store, const Viewpoint& v, RenderFormat format) {
  switch (format) {
    case RenderFormat::Ascii:
      store.validate(v);
      return join(boxes_for(store, v, true));
    case RenderFormat::Structured:
      return to_dsl(store);
    case RenderFormat::Json:
      return to_json(store, v).dump(2) + "\n";
  }
  return {};
}

}  // namespace nestbelief
