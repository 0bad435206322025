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

#ifndef SYNRES_SUPERCLASS_H_
#define SYNRES_SUPERCLASS_H_

#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "synres/random.h"

namespace synres {

struct SuperclassRow {
  std::string superclass;
  std::vector<std::string> originals;
};

// Word -> broader category lexicon for debiasing text augmentation. Lookups are
// on lower-cased words; multi-word originals ("hot dog") use single spaces.
class SuperclassTable {
 public:
  // Throws InvalidArgument if a superclass lists itself as an original.
  explicit SuperclassTable(std::vector<SuperclassRow> rows);

  // The twelve-row default table.
  static const SuperclassTable& standard();

  const std::vector<SuperclassRow>& rows() const { return rows_; }
  // Superclasses applicable to `original`, in row order; empty if none.
  std::span<const std::string> superclasses_for(std::string_view original) const;
  std::size_t max_phrase_words() const { return max_words_; }

 private:
  std::vector<SuperclassRow> rows_;
  std::map<std::string, std::vector<std::string>, std::less<>> index_;
  std::size_t max_words_ = 1;
};

// Nouns whose replacement switches his/her to their.
bool is_gendered_noun(std::string_view lower);

struct ReplacementOutcome {
  std::string text;
  std::size_t matches = 0;
  // Matches replaced by their own draw (pronoun follow-ups excluded).
  std::size_t drawn_replacements = 0;
  bool gendered_replaced = false;
};

// Scans whole-word, case-insensitive matches (longest phrase first); each match
// is replaced with probability p, drawing uniformly among its applicable
// superclasses when there are several. Once any gendered noun is replaced,
// every remaining his/her becomes their. A capitalised first letter is kept.
// Draw order per match: one Bernoulli draw, then one index draw only when
// replaced and ambiguous.
ReplacementOutcome superclass_replace_detailed(std::string_view text, const SuperclassTable& table,
                                               double p, RandomStream& stream);
std::string superclass_replace(std::string_view text, const SuperclassTable& table, double p,
                               RandomStream& stream);

struct WordMatch {
  std::size_t begin = 0;
  std::size_t end = 0;
  std::string lower;
};

// Whole-word original-word occurrences in `text`.
std::vector<WordMatch> find_original_words(std::string_view text, const SuperclassTable& table);

}  // namespace synres

#endif  // SYNRES_SUPERCLASS_H_
