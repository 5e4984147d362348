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

#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "nestbelief/formula.hpp"

namespace nestbelief {

enum class ActClass { Question, Answer, Request, Inform };

std::string_view to_string(ActClass c);
std::optional<ActClass> parse_act_class(std::string_view word);

/// Role variables bound when a schema is instantiated.
inline constexpr std::string_view kSpeakerRole = "Speaker";
inline constexpr std::string_view kHearerRole = "Hearer";
inline constexpr std::string_view kPropositionRole = "Proposition";

/// A speech-act type. Preconditions are attitude formulas over the role
/// variables; a child schema inherits every parent precondition and may add
/// more.
struct ActSchema {
  std::string name;
  ActClass act_class = ActClass::Inform;
  std::optional<std::string> parent;
  std::vector<Formula> own_preconditions;

  friend bool operator==(const ActSchema&, const ActSchema&) = default;
};

class ActLibrary {
 public:
  /// Adds or replaces a schema. Throws Error when a precondition is not an
  /// attitude of the Speaker role.
  void add(ActSchema schema);
  void remove(std::string_view name);

  const ActSchema* find(std::string_view name) const;
  bool contains(std::string_view name) const { return find(name) != nullptr; }
  std::size_t size() const { return acts_.size(); }
  bool empty() const { return acts_.empty(); }

  /// Schemas in name order.
  std::vector<const ActSchema*> schemas() const;

  /// The twenty built-in acts (see src/default_library.cpp).
  static const ActLibrary& builtin();

  friend bool operator==(const ActLibrary&, const ActLibrary&) = default;

 private:
  std::map<std::string, ActSchema, std::less<>> acts_;
};

}  // namespace nestbelief
