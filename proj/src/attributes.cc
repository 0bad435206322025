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

#include "synres/attributes.h"

#include <cctype>
#include <unordered_map>

#include "synres/error.h"
#include "synres/types.h"

namespace synres {
namespace {

enum class Lexeme { kNoun, kColor, kSize, kAbsolute, kRelative, kAction, kGeneric };

constexpr std::size_t kMaxPhraseWords = 3;

const std::unordered_map<std::string, Lexeme>& lexicon() {
  static const auto* table = [] {
    auto* t = new std::unordered_map<std::string, Lexeme>();
    const auto add = [t](Lexeme kind, std::initializer_list<const char*> words) {
      for (const char* w : words) t->emplace(w, kind);
    };
    add(Lexeme::kNoun,
        {"cat", "dog", "puppy", "bird", "cow", "bull", "rabbit", "bunny", "zebra", "elephant",
         "horse", "giraffe", "sheep", "bear", "bench", "boat", "bag", "backpack", "hat", "cap",
         "shirt", "jacket", "coat", "dress", "table", "chair", "couch", "sofa", "bed", "desk",
         "car", "bus", "plane", "train", "airplane", "truck", "motorcycle", "bicycle", "bike",
         "apple", "banana", "broccoli", "carrot", "cabbage", "radish", "sandwich", "hot dog",
         "pizza", "donut", "doughnut", "cake", "hamburger", "tv", "television", "laptop",
         "computer", "keyboard", "cell phone", "smartphone", "phone", "person", "man", "woman",
         "men", "women", "boy", "girl", "child", "kid", "guy", "lady", "player", "umbrella",
         "kite", "ball", "cup", "bottle", "bowl", "plate", "vase", "clock", "book", "sign",
         "tree", "building", "window", "door", "box", "shelf", "tie", "shoe", "hair", "camera",
         "surfboard", "skateboard", "racket", "helmet", "knot", "ear", "bun", "vehicle",
         "animal", "fruit", "vegetable", "food", "furniture"});
    add(Lexeme::kColor, {"red", "green", "blue", "yellow", "white", "black", "brown", "gray",
                         "grey", "orange", "pink", "purple", "silver", "gold", "beige"});
    add(Lexeme::kSize, {"big", "small", "large", "tiny", "tall", "short", "huge", "little",
                        "long", "wide"});
    add(Lexeme::kAbsolute,
        {"the center", "the middle", "the left", "the right", "the top", "the bottom",
         "the front", "the back", "the corner", "the foreground", "the background", "leftmost",
         "rightmost"});
    add(Lexeme::kRelative, {"on", "in", "next to", "behind", "under", "above", "below", "near",
                            "beside", "between", "in front of", "on top of", "inside", "at",
                            "by", "across from"});
    add(Lexeme::kAction,
        {"sitting", "standing", "holding", "walking", "running", "riding", "eating", "looking",
         "lying", "wearing", "carrying", "playing", "jumping", "talking", "smiling", "sleeping",
         "drinking", "reading", "parked", "flying", "swimming", "throwing", "catching",
         "skiing", "surfing", "braided", "tied"});
    add(Lexeme::kGeneric, {"wooden", "metal", "plastic", "striped", "spotted", "shiny", "old",
                           "new", "broken", "empty", "full", "open", "closed", "fluffy",
                           "leather", "furry"});
    return t;
  }();
  return *table;
}

AttributeKind kind_for(Lexeme lexeme, bool head_taken) {
  switch (lexeme) {
    case Lexeme::kNoun: return head_taken ? AttributeKind::kSubNoun : AttributeKind::kHeadNoun;
    case Lexeme::kColor: return AttributeKind::kColor;
    case Lexeme::kSize: return AttributeKind::kSize;
    case Lexeme::kAbsolute: return AttributeKind::kAbsoluteLocation;
    case Lexeme::kRelative: return AttributeKind::kRelativeLocation;
    case Lexeme::kAction: return AttributeKind::kAction;
    case Lexeme::kGeneric: return AttributeKind::kGenericAttribute;
  }
  return AttributeKind::kGenericAttribute;
}

std::vector<std::string> lower_words(std::string_view text) {
  std::vector<std::string> words;
  std::string current;
  for (char c : text) {
    const auto u = static_cast<unsigned char>(c);
    if (std::isalnum(u)) {
      current.push_back(static_cast<char>(std::tolower(u)));
    } else if (!current.empty()) {
      words.push_back(std::move(current));
      current.clear();
    }
  }
  if (!current.empty()) words.push_back(std::move(current));
  return words;
}

}  // namespace

const char* attribute_code(AttributeKind kind) {
  static constexpr const char* kCodes[] = {"A1", "A2", "A3", "A4", "A5", "A6", "A7", "A8"};
  return kCodes[static_cast<int>(kind)];
}

const char* attribute_label(AttributeKind kind) {
  static constexpr const char* kLabels[] = {
      "head noun",         "sub noun",          "color",  "size", "absolute location",
      "relative location", "action",            "generic attribute"};
  return kLabels[static_cast<int>(kind)];
}

std::optional<AttributeKind> parse_attribute_code(std::string_view code) {
  for (AttributeKind k : kAllAttributeKinds) {
    if (code == attribute_code(k)) return k;
  }
  return std::nullopt;
}

AttributeMap empty_attribute_map() {
  AttributeMap m;
  for (AttributeKind k : kAllAttributeKinds) m[k];
  return m;
}

std::size_t total_attributes(const AttributeMap& attributes) {
  std::size_t total = 0;
  for (const auto& [kind, words] : attributes) total += words.size();
  return total;
}

AttributeMap classify_with_lexicon(std::string_view text) {
  if (trim(text).empty()) throw Error(ErrorCode::kEmptyInput, "cannot classify empty expression");
  const auto& table = lexicon();
  const std::vector<std::string> words = lower_words(text);
  AttributeMap out = empty_attribute_map();
  bool head_taken = false;
  std::size_t i = 0;
  while (i < words.size()) {
    bool matched = false;
    for (std::size_t len = std::min(kMaxPhraseWords, words.size() - i); len >= 1; --len) {
      std::string phrase = words[i];
      for (std::size_t k = 1; k < len; ++k) phrase += " " + words[i + k];
      const auto it = table.find(phrase);
      if (it == table.end()) continue;
      const AttributeKind kind = kind_for(it->second, head_taken);
      if (kind == AttributeKind::kHeadNoun) head_taken = true;
      out[kind].push_back(std::move(phrase));
      i += len;
      matched = true;
      break;
    }
    if (!matched) ++i;
  }
  return out;
}

}  // namespace synres
