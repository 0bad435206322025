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

#include "synres/superclass.h"

#include <algorithm>
#include <cctype>

#include "synres/error.h"

namespace synres {
namespace {

struct Token {
  std::size_t begin;
  std::size_t end;
};

bool is_word_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) != 0; }

std::vector<Token> tokenize(std::string_view text) {
  std::vector<Token> tokens;
  std::size_t i = 0;
  while (i < text.size()) {
    if (!is_word_char(text[i])) {
      ++i;
      continue;
    }
    const std::size_t begin = i;
    while (i < text.size() && is_word_char(text[i])) ++i;
    tokens.push_back({begin, i});
  }
  return tokens;
}

std::string lower(std::string_view s) {
  std::string out(s);
  for (char& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return out;
}

bool only_spaces(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) {
    return std::isspace(static_cast<unsigned char>(c)) != 0;
  });
}

std::string with_case_of(std::string_view replacement, std::string_view original) {
  std::string out(replacement);
  if (!out.empty() && !original.empty() &&
      std::isupper(static_cast<unsigned char>(original.front()))) {
    out.front() = static_cast<char>(std::toupper(static_cast<unsigned char>(out.front())));
  }
  return out;
}

constexpr std::string_view kNeutralPronoun = "their";

bool is_gendered_pronoun(std::string_view w) { return w == "his" || w == "her"; }

}  // namespace

SuperclassTable::SuperclassTable(std::vector<SuperclassRow> rows) : rows_(std::move(rows)) {
  for (const auto& row : rows_) {
    const std::string super = lower(row.superclass);
    for (const auto& original : row.originals) {
      const std::string key = lower(original);
      if (key == super) {
        throw Error(ErrorCode::kInvalidArgument,
                    "superclass '" + row.superclass + "' lists itself as an original");
      }
      auto& targets = index_[key];
      if (std::find(targets.begin(), targets.end(), row.superclass) == targets.end()) {
        targets.push_back(row.superclass);
      }
      max_words_ = std::max(max_words_, tokenize(key).size());
    }
  }
}

const SuperclassTable& SuperclassTable::standard() {
  static const SuperclassTable table({
      {"child", {"boy", "girl", "son", "daughter"}},
      {"kid", {"boy", "girl", "son", "daughter"}},
      {"adult", {"woman", "women", "man", "men", "female", "male"}},
      {"person", {"woman", "women", "man", "men", "female", "male", "boy", "girl", "guy"}},
      {"their", {"his", "her"}},
      {"vehicle", {"car", "bus", "plane", "train", "airplane", "truck", "boat", "motorcycle"}},
      {"animal", {"bird", "cow", "bull", "rabbit", "bunny", "dog", "puppy", "cat", "zebra",
                  "elephant", "horse", "giraffe"}},
      {"fruit", {"apple", "banana"}},
      {"vegetable", {"broccoli", "carrot", "cabbage", "radish"}},
      {"food", {"sandwich", "hot dog", "pizza", "donut", "doughnut", "cake", "hamburger"}},
      {"electronic", {"tv", "television", "laptop", "computer", "keyboard", "cell phone",
                      "smartphone"}},
      {"furniture", {"chair", "couch", "sofa", "bed", "desk"}},
  });
  return table;
}

std::span<const std::string> SuperclassTable::superclasses_for(std::string_view original) const {
  const auto it = index_.find(original);
  if (it == index_.end()) return {};
  return it->second;
}

bool is_gendered_noun(std::string_view w) {
  static constexpr std::string_view kGendered[] = {"woman", "women", "man",  "men",
                                                   "female", "male", "boy", "girl",
                                                   "guy",   "son",   "daughter"};
  return std::find(std::begin(kGendered), std::end(kGendered), w) != std::end(kGendered);
}

std::vector<WordMatch> find_original_words(std::string_view text, const SuperclassTable& table) {
  const std::vector<Token> tokens = tokenize(text);
  std::vector<WordMatch> matches;
  std::size_t t = 0;
  while (t < tokens.size()) {
    bool found = false;
    const std::size_t longest = std::min(table.max_phrase_words(), tokens.size() - t);
    for (std::size_t len = longest; len >= 1 && !found; --len) {
      std::string phrase = lower(text.substr(tokens[t].begin, tokens[t].end - tokens[t].begin));
      bool contiguous = true;
      for (std::size_t k = 1; k < len; ++k) {
        const Token& prev = tokens[t + k - 1];
        const Token& cur = tokens[t + k];
        if (!only_spaces(text.substr(prev.end, cur.begin - prev.end))) {
          contiguous = false;
          break;
        }
        phrase += ' ';
        phrase += lower(text.substr(cur.begin, cur.end - cur.begin));
      }
      if (!contiguous || table.superclasses_for(phrase).empty()) continue;
      matches.push_back({tokens[t].begin, tokens[t + len - 1].end, std::move(phrase)});
      t += len;
      found = true;
    }
    if (!found) ++t;
  }
  return matches;
}

ReplacementOutcome superclass_replace_detailed(std::string_view text, const SuperclassTable& table,
                                               double p, RandomStream& stream) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw Error(ErrorCode::kInvalidArgument, "replacement probability must lie in [0, 1]");
  }
  const std::vector<WordMatch> matches = find_original_words(text, table);
  ReplacementOutcome outcome;
  outcome.matches = matches.size();

  std::vector<std::string> chosen(matches.size());
  for (std::size_t k = 0; k < matches.size(); ++k) {
    if (!stream.bernoulli(p)) continue;
    const auto options = table.superclasses_for(matches[k].lower);
    chosen[k] = options.size() == 1 ? options[0] : options[stream.uniform_index(options.size())];
    ++outcome.drawn_replacements;
    if (is_gendered_noun(matches[k].lower)) outcome.gendered_replaced = true;
  }

  std::string& out = outcome.text;
  std::size_t cursor = 0;
  for (std::size_t k = 0; k < matches.size(); ++k) {
    const WordMatch& m = matches[k];
    std::string_view replacement = chosen[k];
    if (replacement.empty() && outcome.gendered_replaced && is_gendered_pronoun(m.lower)) {
      replacement = kNeutralPronoun;
    }
    if (replacement.empty()) continue;
    out.append(text.substr(cursor, m.begin - cursor));
    out += with_case_of(replacement, text.substr(m.begin, m.end - m.begin));
    cursor = m.end;
  }
  out.append(text.substr(cursor));
  return outcome;
}

std::string superclass_replace(std::string_view text, const SuperclassTable& table, double p,
                               RandomStream& stream) {
  return superclass_replace_detailed(text, table, p, stream).text;
}

}  // namespace synres
