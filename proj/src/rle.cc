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

#include "synres/rle.h"

#include <string>

#include "synres/error.h"

namespace synres {

RleCounts rle_encode(const BinaryMask& mask) {
  RleCounts counts;
  const std::size_t total = mask.pixel_count();
  bool current = false;
  std::uint64_t run = 0;
  for (std::size_t i = 0; i < total; ++i) {
    const bool bit = mask.test(i);
    if (bit != current) {
      counts.push_back(run);
      run = 0;
      current = bit;
    }
    ++run;
  }
  counts.push_back(run);
  return counts;
}

BinaryMask rle_decode(int width, int height, std::span<const std::uint64_t> counts) {
  BinaryMask mask(width, height);
  const std::uint64_t total = mask.pixel_count();
  std::uint64_t sum = 0;
  for (std::size_t k = 0; k < counts.size(); ++k) {
    if (counts[k] == 0 && k != 0) {
      throw Error(ErrorCode::kMalformedRle,
                  "zero-length run at position " + std::to_string(k));
    }
    // Guard the sum before it can wrap.
    if (counts[k] > total - sum) {
      throw Error(ErrorCode::kSizeMismatch,
                  "run lengths exceed " + std::to_string(total) + " pixels");
    }
    sum += counts[k];
  }
  if (sum != total) {
    throw Error(ErrorCode::kSizeMismatch,
                "run lengths sum to " + std::to_string(sum) + ", expected " +
                    std::to_string(total));
  }
  std::size_t pos = 0;
  for (std::size_t k = 0; k < counts.size(); ++k) {
    if (k % 2 == 1) {
      for (std::uint64_t r = 0; r < counts[k]; ++r) mask.set(pos + r);
    }
    pos += counts[k];
  }
  return mask;
}

RleMask to_rle(const BinaryMask& mask) {
  return RleMask{mask.width(), mask.height(), rle_encode(mask)};
}

BinaryMask from_rle(const RleMask& rle) {
  return rle_decode(rle.width, rle.height, rle.counts);
}

nlohmann::ordered_json rle_to_json(const RleMask& rle) {
  nlohmann::ordered_json j;
  j["w"] = rle.width;
  j["h"] = rle.height;
  j["rle"] = rle.counts;
  return j;
}

RleMask rle_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("w") || !j.contains("h") ||
      !j.contains("rle")) {
    throw Error(ErrorCode::kDataError, "mask object needs w, h and rle");
  }
  const auto& w = j.at("w");
  const auto& h = j.at("h");
  const auto& rle = j.at("rle");
  if (!w.is_number_integer() || !h.is_number_integer() || !rle.is_array()) {
    throw Error(ErrorCode::kDataError, "mask w/h must be integers and rle an array");
  }
  RleMask out;
  out.width = w.get<int>();
  out.height = h.get<int>();
  if (out.width <= 0 || out.height <= 0) {
    throw Error(ErrorCode::kDataError, "mask dimensions must be positive");
  }
  out.counts.reserve(rle.size());
  for (const auto& c : rle) {
    if (!c.is_number_integer() || (c.is_number_integer() && !c.is_number_unsigned() &&
                                   c.get<std::int64_t>() < 0)) {
      throw Error(ErrorCode::kMalformedRle, "run lengths must be non-negative integers");
    }
    out.counts.push_back(c.get<std::uint64_t>());
  }
  return out;
}

}  // namespace synres
