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

#include "synres/maskops.h"

#include <bit>
#include <string>

#include "synres/error.h"

namespace synres {
namespace {

void check_threshold(double threshold) {
  if (!(threshold > 0.0 && threshold < 1.0)) {
    throw Error(ErrorCode::kInvalidArgument,
                "binarize threshold must lie in (0, 1), got " + std::to_string(threshold));
  }
}

}  // namespace

BinaryMask binarize(const RasterMask& mask, double threshold) {
  check_threshold(threshold);
  BinaryMask out(mask.width(), mask.height());
  const auto values = mask.values();
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (static_cast<double>(values[i]) >= threshold) out.set(i);
  }
  return out;
}

OverlapCounts overlap(const BinaryMask& a, const BinaryMask& b) {
  if (a.size() != b.size()) {
    throw Error(ErrorCode::kDimensionMismatch,
                "IoU of " + std::to_string(a.width()) + "x" + std::to_string(a.height()) +
                    " and " + std::to_string(b.width()) + "x" + std::to_string(b.height()) +
                    " masks");
  }
  OverlapCounts c;
  const auto wa = a.words();
  const auto wb = b.words();
  for (std::size_t k = 0; k < wa.size(); ++k) {
    c.intersection += static_cast<std::uint64_t>(std::popcount(wa[k] & wb[k]));
    c.uni += static_cast<std::uint64_t>(std::popcount(wa[k] | wb[k]));
  }
  return c;
}

double iou(const BinaryMask& a, const BinaryMask& b, EmptyPolicy policy) {
  const OverlapCounts c = overlap(a, b);
  if (c.uni == 0) return policy == EmptyPolicy::kOne ? 1.0 : 0.0;
  return static_cast<double>(c.intersection) / static_cast<double>(c.uni);
}

MiouMatrix::MiouMatrix(std::size_t n) : n_(n), entries_(n * n, 0.0) {
  for (std::size_t k = 0; k < n; ++k) entries_[k * n + k] = 1.0;
}

BinaryGrid binarize_grid(const MaskGrid& grid, double threshold) {
  BinaryGrid out;
  out.reserve(grid.size());
  for (const auto& row : grid) {
    std::vector<BinaryMask> bits;
    bits.reserve(row.size());
    for (const auto& mask : row) bits.push_back(binarize(mask, threshold));
    out.push_back(std::move(bits));
  }
  return out;
}

MiouMatrix miou_matrix(const BinaryGrid& grid) {
  const std::size_t m = grid.size();
  const std::size_t n = m == 0 ? 0 : grid.front().size();
  for (const auto& row : grid) {
    if (row.size() != n) throw Error(ErrorCode::kInvalidArgument, "ragged mask grid");
  }
  MiouMatrix matrix(n);
  if (m == 0) return matrix;
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      double sum = 0.0;
      for (std::size_t i = 0; i < m; ++i) sum += iou(grid[i][a], grid[i][b], EmptyPolicy::kZero);
      matrix.set(a, b, sum / static_cast<double>(m));
    }
  }
  return matrix;
}

MiouMatrix miou_matrix(const MaskGrid& grid, double threshold) {
  return miou_matrix(binarize_grid(grid, threshold));
}

BinaryMask average_and_refine(std::span<const RasterMask* const> members, double threshold) {
  check_threshold(threshold);
  if (members.empty()) throw Error(ErrorCode::kEmptyInput, "no masks to average");
  const RasterMask& first = *members.front();
  for (const RasterMask* m : members) {
    if (m->size() != first.size()) {
      throw Error(ErrorCode::kDimensionMismatch, "group masks differ in size");
    }
  }
  BinaryMask out(first.width(), first.height());
  const double k = static_cast<double>(members.size());
  const std::size_t pixels = first.pixel_count();
  for (std::size_t p = 0; p < pixels; ++p) {
    double sum = 0.0;
    for (const RasterMask* m : members) sum += static_cast<double>(m->values()[p]);
    if (sum / k >= threshold) out.set(p);
  }
  return out;
}

BinaryMask average_and_refine(std::span<const RasterMask> members, double threshold) {
  std::vector<const RasterMask*> ptrs;
  ptrs.reserve(members.size());
  for (const auto& m : members) ptrs.push_back(&m);
  return average_and_refine(std::span<const RasterMask* const>(ptrs), threshold);
}

}  // namespace synres
