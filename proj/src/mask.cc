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

#include "synres/mask.h"

#include <bit>
#include <cmath>
#include <string>

#include "synres/error.h"

namespace synres {
namespace {

void check_dimensions(int width, int height) {
  if (width <= 0 || height <= 0) {
    throw Error(ErrorCode::kInvalidArgument,
                "mask dimensions must be positive, got " +
                    std::to_string(width) + "x" + std::to_string(height));
  }
}

}  // namespace

RasterMask::RasterMask(int width, int height, std::vector<float> values)
    : size_{width, height}, values_(std::move(values)) {
  check_dimensions(width, height);
  if (values_.size() != size_.area()) {
    throw Error(ErrorCode::kInvalidArgument,
                "raster has " + std::to_string(values_.size()) +
                    " values for " + std::to_string(size_.area()) + " pixels");
  }
  for (float v : values_) {
    if (!(v >= 0.0f && v <= 1.0f)) {
      throw Error(ErrorCode::kInvalidArgument,
                  "raster value out of [0,1]: " + std::to_string(v));
    }
  }
}

RasterMask RasterMask::filled(int width, int height, float value) {
  check_dimensions(width, height);
  return RasterMask(width, height,
                    std::vector<float>(Size{width, height}.area(), value));
}

BinaryMask::BinaryMask(int width, int height) : size_{width, height} {
  check_dimensions(width, height);
  words_.assign((size_.area() + 63) / 64, 0);
}

BinaryMask BinaryMask::from_bits(int width, int height,
                                 std::span<const std::uint8_t> bits) {
  BinaryMask mask(width, height);
  if (bits.size() != mask.pixel_count()) {
    throw Error(ErrorCode::kSizeMismatch,
                "bit sequence length does not match mask area");
  }
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits[i]) mask.set(i);
  }
  return mask;
}

std::uint64_t BinaryMask::count() const {
  std::uint64_t total = 0;
  for (std::uint64_t w : words_) total += static_cast<std::uint64_t>(std::popcount(w));
  return total;
}

BinaryMask& BinaryMask::operator|=(const BinaryMask& other) {
  if (other.size_ != size_) {
    throw Error(ErrorCode::kDimensionMismatch, "union of differently sized masks");
  }
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
  return *this;
}

}  // namespace synres
