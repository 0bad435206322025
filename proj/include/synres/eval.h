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

#ifndef SYNRES_EVAL_H_
#define SYNRES_EVAL_H_

#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "synres/attributes.h"
#include "synres/clients.h"
#include "synres/mask.h"

namespace synres {

struct EvalSample {
  std::string sample_id;
  BinaryMask ground_truth;
  BinaryMask prediction;
};

struct EvalReport {
  double giou = 0.0;
  double ciou = 0.0;
  std::vector<double> per_sample_ious;
  std::size_t samples = 0;
  std::uint64_t cumulative_intersection = 0;
  std::uint64_t cumulative_union = 0;
};

// Mean of per-sample IoU, an empty prediction on an empty ground truth
// scoring 1. Throws EmptyInput / DimensionMismatch.
double compute_giou(std::span<const EvalSample> samples);
// Summed intersections over summed unions; 1 when every mask is empty.
double compute_ciou(std::span<const EvalSample> samples);
EvalReport evaluate(std::span<const EvalSample> samples);

// "sample_id,iou" rows followed by giou/ciou summary rows.
std::string eval_report_csv(const EvalReport& report, std::span<const EvalSample> samples);

// Reads {"sample_id":..., "mask":{w,h,rle}} lines (meta lines skipped), in
// file order. Throws DataError on duplicates or malformed lines.
std::vector<std::pair<std::string, BinaryMask>> load_mask_dump(std::string_view jsonl);

// Pairs ground truths with predictions by sample_id, in ground-truth order.
// Throws DataError when a prediction is missing.
std::vector<EvalSample> join_predictions(
    const std::vector<std::pair<std::string, BinaryMask>>& ground_truth,
    const std::vector<std::pair<std::string, BinaryMask>>& predictions);

// One benchmark expression entry (WildRES-style manifest line).
struct BenchmarkEntry {
  std::string image_ref;
  std::string expression;
  std::string type;
  std::string domain;
  std::string split;
  std::string attribute;
};

// Throws DataError when a line lacks one of the fields above.
std::vector<BenchmarkEntry> parse_benchmark_jsonl(std::string_view jsonl);

struct StatsRow {
  std::string type;
  std::string domain;
  std::string split;
  std::string attribute;
  std::uint64_t images = 0;  // distinct image refs
  std::uint64_t expressions = 0;
};

struct BenchmarkStats {
  // Per (type, domain, split, attribute), first-appearance order.
  std::vector<StatsRow> rows;
  // Per (type, split); domain "*", attribute "Total".
  std::vector<StatsRow> split_totals;
  std::uint64_t total_images = 0;
  std::uint64_t total_expressions = 0;
  std::vector<std::string> notes;
};

BenchmarkStats benchmark_stats(std::span<const BenchmarkEntry> entries);
std::string benchmark_stats_csv(const BenchmarkStats& stats);

struct AttributeHistogram {
  std::vector<AttributeMap> per_expression;
  std::vector<std::size_t> totals;
  // category -> (matched words in one expression -> number of expressions)
  std::map<AttributeKind, std::map<std::size_t, std::size_t>> distribution;
  std::map<std::size_t, std::size_t> total_distribution;
};

// Throws EmptyInput for an empty list or a blank expression; client failures
// propagate.
AttributeHistogram attribute_histogram(std::span<const std::string> expressions,
                                       AttributeCounter& counter);
// "category,matched_words,expressions" rows; category "total" holds the
// per-expression totals.
std::string attribute_histogram_csv(const AttributeHistogram& histogram);

}  // namespace synres

#endif  // SYNRES_EVAL_H_
