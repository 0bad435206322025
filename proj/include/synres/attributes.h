// Copyright 2026 The SynRES Pipeline Authors. All Rights Reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef SYNRES_ATTRIBUTES_H_
#define SYNRES_ATTRIBUTES_H_

#include <array>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace synres {

// Eight-way referring-expression attribute taxonomy (A1..A8).
enum class AttributeKind {
  kHeadNoun,
  kSubNoun,
  kColor,
  kSize,
  kAbsoluteLocation,
  kRelativeLocation,
  kAction,
  kGenericAttribute,
};

inline constexpr std::array<AttributeKind, 8> kAllAttributeKinds = {
    AttributeKind::kHeadNoun,         AttributeKind::kSubNoun,
    AttributeKind::kColor,            AttributeKind::kSize,
    AttributeKind::kAbsoluteLocation, AttributeKind::kRelativeLocation,
    AttributeKind::kAction,           AttributeKind::kGenericAttribute,
};

// "A1".."A8"
const char* attribute_code(AttributeKind kind);
// "head noun", "sub noun", ...
const char* attribute_label(AttributeKind kind);
std::optional<AttributeKind> parse_attribute_code(std::string_view code);

// Always holds all eight keys; matched words in text order.
using AttributeMap = std::map<AttributeKind, std::vector<std::string>>;

AttributeMap empty_attribute_map();
std::size_t total_attributes(const AttributeMap& attributes);

// Keyword-lexicon classifier. Greedy longest phrase match over lower-cased
// word tokens; the first noun is the head noun, later nouns are sub nouns.
AttributeMap classify_with_lexicon(std::string_view text);

}  // namespace synres

#endif  // SYNRES_ATTRIBUTES_H_
