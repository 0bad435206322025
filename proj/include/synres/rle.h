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

#ifndef SYNRES_RLE_H_
#define SYNRES_RLE_H_

#include <cstdint>
#include <span>
#include <vector>

#include <nlohmann/json.hpp>
#include "synres/mask.h"

namespace synres {

// Row-major run-length counts. Runs alternate starting with 0-bits, so the
// first count is 0 when pixel 0 is set. Only the first count may be 0 and the
// counts sum to width*height.
using RleCounts = std::vector<std::uint64_t>;

RleCounts rle_encode(const BinaryMask& mask);

// Throws SizeMismatch when the counts do not sum to width*height, MalformedRle
// when a count other than the first is 0.
BinaryMask rle_decode(int width, int height, std::span<const std::uint64_t> counts);

// Serialized mask as it appears in manifests: {"w":int,"h":int,"rle":[...]}.
struct RleMask {
  int width = 0;
  int height = 0;
  RleCounts counts;

  friend bool operator==(const RleMask&, const RleMask&) = default;
};

RleMask to_rle(const BinaryMask& mask);
BinaryMask from_rle(const RleMask& rle);

nlohmann::ordered_json rle_to_json(const RleMask& rle);
// Structural parse only (types and signs); decoding validates the counts.
// Throws DataError on a structurally invalid object.
RleMask rle_from_json(const nlohmann::json& j);

}  // namespace synres

#endif  // SYNRES_RLE_H_
