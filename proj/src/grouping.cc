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

#include "synres/grouping.h"

#include <algorithm>
#include <numeric>
#include <string>

#include "synres/error.h"

namespace synres {
namespace {

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n) {
    std::iota(parent_.begin(), parent_.end(), std::size_t{0});
  }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    // Smaller index becomes the root so component order is stable.
    if (b < a) std::swap(a, b);
    parent_[b] = a;
  }

 private:
  std::vector<std::size_t> parent_;
};

}  // namespace

void validate(const GroupingConfig& config) {
  if (!(config.tau > 0.0 && config.tau < 1.0)) {
    throw Error(ErrorCode::kConfigError, "grouping.tau must lie in (0, 1)");
  }
  if (config.min_group_size < 2) {
    throw Error(ErrorCode::kConfigError, "grouping.min_group_size must be at least 2");
  }
  if (!(config.binarize_threshold > 0.0 && config.binarize_threshold < 1.0)) {
    throw Error(ErrorCode::kConfigError, "binarize threshold must lie in (0, 1)");
  }
}

Clustering cluster_expressions(const MiouMatrix& matrix, const GroupingConfig& config) {
  validate(config);
  const std::size_t n = matrix.size();
  DisjointSets sets(n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      if (matrix.at(a, b) > config.tau) sets.unite(a, b);
    }
  }
  std::vector<std::vector<std::size_t>> components(n);
  for (std::size_t k = 0; k < n; ++k) components[sets.find(k)].push_back(k);

  Clustering out;
  for (auto& component : components) {
    if (component.empty()) continue;
    if (component.size() >= config.min_group_size) {
      out.groups.push_back(std::move(component));
    } else {
      out.discarded.insert(out.discarded.end(), component.begin(), component.end());
    }
  }
  std::sort(out.discarded.begin(), out.discarded.end());
  return out;
}

std::vector<ConsensusGroup> consensus_masks(const SyntheticBatch& batch,
                                            const std::vector<std::vector<std::size_t>>& groups,
                                            double threshold) {
  validate_batch(batch);
  std::vector<ConsensusGroup> out;
  out.reserve(groups.size());
  std::vector<const RasterMask*> members;
  for (std::size_t k = 0; k < groups.size(); ++k) {
    ConsensusGroup group;
    group.group_id = batch.target_id + "/g" + std::to_string(k);
    group.members = groups[k];
    std::sort(group.members.begin(), group.members.end());
    for (std::size_t j : group.members) {
      if (j >= batch.expressions.size()) {
        throw Error(ErrorCode::kInvalidArgument,
                    "group member " + std::to_string(j) + " is not a batch column");
      }
      group.member_expression_ids.push_back(batch.expressions[j].id);
    }
    for (std::size_t i = 0; i < batch.images.size(); ++i) {
      members.clear();
      for (std::size_t j : group.members) members.push_back(&batch.pseudo_masks[i][j]);
      group.refined_masks.push_back(average_and_refine(members, threshold));
    }
    out.push_back(std::move(group));
  }
  return out;
}

Step2Result run_step2_detailed(const SyntheticBatch& batch, const GroupingConfig& config) {
  validate(config);
  validate_batch(batch);
  const std::size_t m = batch.images.size();
  const std::size_t n = batch.expressions.size();
  const BinaryGrid binary = binarize_grid(batch.pseudo_masks, config.binarize_threshold);

  // Columns that are empty on every image can never form an edge.
  std::vector<std::size_t> live;
  std::vector<std::size_t> dead;
  for (std::size_t j = 0; j < n; ++j) {
    bool any = false;
    for (std::size_t i = 0; i < m && !any; ++i) any = !binary[i][j].empty();
    (any ? live : dead).push_back(j);
  }

  BinaryGrid live_grid(m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j : live) live_grid[i].push_back(binary[i][j]);
  }
  const Clustering local = cluster_expressions(miou_matrix(live_grid), config);

  std::vector<std::vector<std::size_t>> groups;
  for (const auto& g : local.groups) {
    std::vector<std::size_t> mapped;
    for (std::size_t k : g) mapped.push_back(live[k]);
    groups.push_back(std::move(mapped));
  }

  Step2Result result;
  result.discarded = dead;
  for (std::size_t k : local.discarded) result.discarded.push_back(live[k]);
  std::sort(result.discarded.begin(), result.discarded.end());
  result.groups = consensus_masks(batch, groups, config.binarize_threshold);

  for (const auto& group : result.groups) {
    for (std::size_t j : group.members) {
      const Expression& expr = batch.expressions[j];
      for (std::size_t i = 0; i < m; ++i) {
        TripletRecord r{batch.images[i].ref, expr.text, group.refined_masks[i],
                        RecordSource::kSynthetic, Lineage{}};
        r.lineage.target_id = batch.target_id;
        r.lineage.group_id = group.group_id;
        r.lineage.seed = batch.images[i].seed;
        r.lineage.expression_id = expr.id;
        result.records.push_back(std::move(r));
      }
    }
  }
  return result;
}

std::vector<TripletRecord> run_step2(const SyntheticBatch& batch, const GroupingConfig& config) {
  return run_step2_detailed(batch, config).records;
}

}  // namespace synres
