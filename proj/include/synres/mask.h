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

#ifndef SYNRES_MASK_H_
#define SYNRES_MASK_H_

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace synres {

struct Size {
  int width = 0;
  int height = 0;

  std::size_t area() const {
    return static_cast<std::size_t>(width) * static_cast<std::size_t>(height);
  }
  friend bool operator==(const Size&, const Size&) = default;
};

// Continuous per-pixel confidence map, row-major, every value in [0, 1].
class RasterMask {
 public:
  // Throws InvalidArgument on non-positive dimensions, a length mismatch, or a
  // value outside [0, 1] (NaN included).
  RasterMask(int width, int height, std::vector<float> values);

  static RasterMask filled(int width, int height, float value);

  int width() const { return size_.width; }
  int height() const { return size_.height; }
  Size size() const { return size_; }
  std::size_t pixel_count() const { return values_.size(); }

  float at(int x, int y) const {
    return values_[static_cast<std::size_t>(y) * size_.width + x];
  }
  std::span<const float> values() const { return values_; }

  friend bool operator==(const RasterMask&, const RasterMask&) = default;

 private:
  Size size_;
  std::vector<float> values_;
};

// Thresholded mask, bits packed row-major into 64-bit words. Bit p lives in
// word p / 64 at position p % 64; padding bits past width*height stay zero.
class BinaryMask {
 public:
  // 0x0 placeholder; only useful as an assignment target.
  BinaryMask() = default;
  // All-zero mask. Throws InvalidArgument on non-positive dimensions.
  BinaryMask(int width, int height);

  static BinaryMask from_bits(int width, int height,
                              std::span<const std::uint8_t> bits);

  int width() const { return size_.width; }
  int height() const { return size_.height; }
  Size size() const { return size_; }
  std::size_t pixel_count() const { return size_.area(); }

  bool test(std::size_t index) const {
    return (words_[index >> 6] >> (index & 63)) & 1u;
  }
  bool at(int x, int y) const {
    return test(static_cast<std::size_t>(y) * size_.width + x);
  }
  void set(std::size_t index, bool value = true) {
    const std::uint64_t bit = std::uint64_t{1} << (index & 63);
    if (value) {
      words_[index >> 6] |= bit;
    } else {
      words_[index >> 6] &= ~bit;
    }
  }
  void set(int x, int y, bool value = true) {
    set(static_cast<std::size_t>(y) * size_.width + x, value);
  }

  // Number of set bits.
  std::uint64_t count() const;
  bool empty() const { return count() == 0; }

  std::span<const std::uint64_t> words() const { return words_; }
  std::span<std::uint64_t> mutable_words() { return words_; }

  // In-place union; dimensions must match.
  BinaryMask& operator|=(const BinaryMask& other);

  friend bool operator==(const BinaryMask&, const BinaryMask&) = default;

 private:
  Size size_;
  std::vector<std::uint64_t> words_;
};

}  // namespace synres

#endif  // SYNRES_MASK_H_
