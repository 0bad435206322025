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

#ifndef SYNRES_GROUPING_H_
#define SYNRES_GROUPING_H_

#include <cstddef>
#include <vector>

#include "synres/manifest.h"
#include "synres/maskops.h"
#include "synres/types.h"

namespace synres {

struct GroupingConfig {
  // Edge iff mIoU strictly exceeds tau.
  double tau = 0.65;
  std::size_t min_group_size = 2;
  double binarize_threshold = kDefaultBinarizeThreshold;
};

// Throws ConfigError unless 0 < tau < 1 and min_group_size >= 2.
void validate(const GroupingConfig& config);

struct Clustering {
  // Each group lists matrix indices ascending; groups are ordered by their
  // smallest member.
  std::vector<std::vector<std::size_t>> groups;
  std::vector<std::size_t> discarded;
};

// Connected components of the graph with an edge (a, b) iff
// matrix.at(a, b) > tau. Components smaller than min_group_size are discarded.
Clustering cluster_expressions(const MiouMatrix& matrix, const GroupingConfig& config);

// Refined mask per group and image: average_and_refine over the members'
// continuous pseudo-masks. Group ids are "<target_id>/g<k>".
std::vector<ConsensusGroup> consensus_masks(const SyntheticBatch& batch,
                                            const std::vector<std::vector<std::size_t>>& groups,
                                            double threshold = kDefaultBinarizeThreshold);

struct Step2Result {
  std::vector<ConsensusGroup> groups;
  std::vector<std::size_t> discarded;
  std::vector<TripletRecord> records;
};

// Full consensus stage for one batch. Expressions whose binarized mask is
// empty on every image are discarded before the matrix is built. Records are
// ordered group, member, image.
Step2Result run_step2_detailed(const SyntheticBatch& batch, const GroupingConfig& config);
std::vector<TripletRecord> run_step2(const SyntheticBatch& batch, const GroupingConfig& config);

}  // namespace synres

#endif  // SYNRES_GROUPING_H_
