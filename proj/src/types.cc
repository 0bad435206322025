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

#include "synres/types.h"

#include <cctype>

#include "synres/error.h"

namespace synres {

const char* provenance_name(Provenance p) {
  switch (p) {
    case Provenance::kHuman: return "human";
    case Provenance::kSynthetic: return "synthetic";
    case Provenance::kAugmented: return "augmented";
  }
  return "synthetic";
}

Provenance parse_provenance(std::string_view name) {
  if (name == "human") return Provenance::kHuman;
  if (name == "synthetic") return Provenance::kSynthetic;
  if (name == "augmented") return Provenance::kAugmented;
  throw Error(ErrorCode::kDataError, "unknown provenance: " + std::string(name));
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

Expression make_expression(std::string id, std::string text, std::string target_id,
                           Provenance provenance) {
  if (trim(text).empty()) {
    throw Error(ErrorCode::kEmptyInput, "expression text is empty (id " + id + ")");
  }
  return Expression{std::move(id), std::move(text), std::move(target_id), provenance};
}

void validate_batch(const SyntheticBatch& batch) {
  const std::size_t m = batch.images.size();
  const std::size_t n = batch.expressions.size();
  if (batch.pseudo_masks.size() != m) {
    throw Error(ErrorCode::kInvalidArgument, "pseudo-mask grid has " +
                                                 std::to_string(batch.pseudo_masks.size()) +
                                                 " rows for " + std::to_string(m) + " images");
  }
  for (std::size_t i = 0; i < m; ++i) {
    const auto& row = batch.pseudo_masks[i];
    if (row.size() != n) {
      throw Error(ErrorCode::kInvalidArgument,
                  "pseudo-mask row " + std::to_string(i) + " has " + std::to_string(row.size()) +
                      " masks for " + std::to_string(n) + " expressions");
    }
    for (const auto& mask : row) {
      if (mask.size() != row.front().size()) {
        throw Error(ErrorCode::kDimensionMismatch,
                    "pseudo-masks of image " + std::to_string(i) + " differ in size");
      }
    }
  }
}

}  // namespace synres
