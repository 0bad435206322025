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

#ifndef SYNRES_TYPES_H_
#define SYNRES_TYPES_H_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "synres/mask.h"

namespace synres {

enum class Provenance { kHuman, kSynthetic, kAugmented };

const char* provenance_name(Provenance p);
Provenance parse_provenance(std::string_view name);

struct Expression {
  std::string id;
  std::string text;
  std::string target_id;
  Provenance provenance = Provenance::kSynthetic;
};

// Throws EmptyInput when `text` is blank after trimming.
Expression make_expression(std::string id, std::string text, std::string target_id,
                           Provenance provenance);

std::string_view trim(std::string_view s);

struct ReferringTarget {
  std::string target_id;
  std::string real_image_ref;
  BinaryMask real_mask;
  std::optional<Expression> human_expression;
};

struct GeneratedImage {
  std::string ref;
  std::uint64_t seed = 0;

  friend bool operator==(const GeneratedImage&, const GeneratedImage&) = default;
};

// pseudo_masks[i][j]: confidence map for synthetic image i and expression j.
using MaskGrid = std::vector<std::vector<RasterMask>>;

struct SyntheticBatch {
  std::string target_id;
  std::string prompt;
  std::vector<Expression> expressions;
  std::vector<GeneratedImage> images;
  MaskGrid pseudo_masks;

  std::size_t image_count() const { return images.size(); }
  std::size_t expression_count() const { return expressions.size(); }
};

// Throws InvalidArgument unless the grid is exactly m x n and every row shares
// one size.
void validate_batch(const SyntheticBatch& batch);

struct ConsensusGroup {
  std::string group_id;
  // Column indices into the batch, ascending.
  std::vector<std::size_t> members;
  std::vector<std::string> member_expression_ids;
  // One per synthetic image.
  std::vector<BinaryMask> refined_masks;
};

}  // namespace synres

#endif  // SYNRES_TYPES_H_
