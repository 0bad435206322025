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

#ifndef SYNRES_MASKOPS_H_
#define SYNRES_MASKOPS_H_

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "synres/mask.h"
#include "synres/types.h"

namespace synres {

inline constexpr double kDefaultBinarizeThreshold = 0.5;

// What IoU means when both masks are empty. Grouping uses kZero so a failed
// segmentation never agrees with anything; evaluation uses kOne so an empty
// prediction on an empty ground truth counts as correct.
enum class EmptyPolicy { kZero, kOne };

// Bit is set iff value >= threshold. Threshold must lie in (0, 1).
BinaryMask binarize(const RasterMask& mask, double threshold = kDefaultBinarizeThreshold);

struct OverlapCounts {
  std::uint64_t intersection = 0;
  std::uint64_t uni = 0;
};

// Throws DimensionMismatch when sizes differ.
OverlapCounts overlap(const BinaryMask& a, const BinaryMask& b);

double iou(const BinaryMask& a, const BinaryMask& b, EmptyPolicy policy);

// Symmetric n x n matrix of mean IoU across images, unit diagonal.
class MiouMatrix {
 public:
  explicit MiouMatrix(std::size_t n);

  std::size_t size() const { return n_; }
  double at(std::size_t a, std::size_t b) const { return entries_[a * n_ + b]; }
  void set(std::size_t a, std::size_t b, double value) {
    entries_[a * n_ + b] = value;
    entries_[b * n_ + a] = value;
  }

 private:
  std::size_t n_;
  std::vector<double> entries_;
};

// binary[i][j] is the binarized mask of image i, expression j.
using BinaryGrid = std::vector<std::vector<BinaryMask>>;

BinaryGrid binarize_grid(const MaskGrid& grid, double threshold = kDefaultBinarizeThreshold);

// entries[a][b] = (1/m) sum_i iou(grid[i][a], grid[i][b], kZero), computed
// from exact integer overlap counts. The diagonal is fixed at 1.
MiouMatrix miou_matrix(const BinaryGrid& grid);
MiouMatrix miou_matrix(const MaskGrid& grid, double threshold = kDefaultBinarizeThreshold);

// Pixelwise mean of the members (accumulated in double, in list order), then
// binarized with >= threshold. Throws EmptyInput / DimensionMismatch.
BinaryMask average_and_refine(std::span<const RasterMask* const> members,
                              double threshold = kDefaultBinarizeThreshold);
BinaryMask average_and_refine(std::span<const RasterMask> members,
                              double threshold = kDefaultBinarizeThreshold);

}  // namespace synres

#endif  // SYNRES_MASKOPS_H_
