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

#include "synres/eval.h"

#include <map>
#include <set>
#include <sstream>
#include <tuple>

#include <nlohmann/json.hpp>

#include "synres/error.h"
#include "synres/maskops.h"
#include "synres/rle.h"
#include "synres/types.h"

namespace synres {
namespace {

void require_samples(std::span<const EvalSample> samples) {
  if (samples.empty()) throw Error(ErrorCode::kEmptyInput, "no evaluation samples");
}

std::string format_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.10f", v);
  return buf;
}

std::string csv_field(std::string_view s) {
  if (s.find_first_of(",\"\n") == std::string_view::npos) return std::string(s);
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

template <typename Fn>
void for_each_json_line(std::string_view jsonl, Fn&& fn) {
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start < jsonl.size()) {
    std::size_t end = jsonl.find('\n', start);
    if (end == std::string_view::npos) end = jsonl.size();
    const std::string_view line = jsonl.substr(start, end - start);
    start = end + 1;
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string_view::npos) continue;
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(line);
    } catch (const nlohmann::json::parse_error& e) {
      throw Error(ErrorCode::kDataError, "line " + std::to_string(line_no) + ": " + e.what());
    }
    if (j.is_object() && j.value("type", "") == "meta") continue;
    try {
      fn(j);
    } catch (const nlohmann::json::exception& e) {
      throw Error(ErrorCode::kDataError, "line " + std::to_string(line_no) + ": " + e.what());
    } catch (const Error& e) {
      throw Error(ErrorCode::kDataError, "line " + std::to_string(line_no) + ": " + e.message());
    }
  }
}

}  // namespace

double compute_giou(std::span<const EvalSample> samples) { return evaluate(samples).giou; }

double compute_ciou(std::span<const EvalSample> samples) { return evaluate(samples).ciou; }

EvalReport evaluate(std::span<const EvalSample> samples) {
  require_samples(samples);
  EvalReport report;
  report.samples = samples.size();
  report.per_sample_ious.reserve(samples.size());
  double sum = 0.0;
  for (const EvalSample& s : samples) {
    OverlapCounts c;
    try {
      c = overlap(s.prediction, s.ground_truth);
    } catch (const Error& e) {
      throw Error(ErrorCode::kDimensionMismatch, "sample " + s.sample_id + ": " + e.message());
    }
    const double v = c.uni == 0 ? 1.0 : static_cast<double>(c.intersection) / static_cast<double>(c.uni);
    report.per_sample_ious.push_back(v);
    sum += v;
    report.cumulative_intersection += c.intersection;
    report.cumulative_union += c.uni;
  }
  report.giou = sum / static_cast<double>(samples.size());
  report.ciou = report.cumulative_union == 0
                    ? 1.0
                    : static_cast<double>(report.cumulative_intersection) /
                          static_cast<double>(report.cumulative_union);
  return report;
}

std::string eval_report_csv(const EvalReport& report, std::span<const EvalSample> samples) {
  std::string out = "sample_id,iou\n";
  for (std::size_t k = 0; k < samples.size() && k < report.per_sample_ious.size(); ++k) {
    out += csv_field(samples[k].sample_id) + "," + format_double(report.per_sample_ious[k]) + "\n";
  }
  out += "giou," + format_double(report.giou) + "\n";
  out += "ciou," + format_double(report.ciou) + "\n";
  return out;
}

std::vector<std::pair<std::string, BinaryMask>> load_mask_dump(std::string_view jsonl) {
  std::vector<std::pair<std::string, BinaryMask>> out;
  std::set<std::string> seen;
  for_each_json_line(jsonl, [&](const nlohmann::json& j) {
    std::string id = j.at("sample_id").get<std::string>();
    if (!seen.insert(id).second) throw Error(ErrorCode::kDataError, "duplicate sample_id " + id);
    out.emplace_back(std::move(id), from_rle(rle_from_json(j.at("mask"))));
  });
  return out;
}

std::vector<EvalSample> join_predictions(
    const std::vector<std::pair<std::string, BinaryMask>>& ground_truth,
    const std::vector<std::pair<std::string, BinaryMask>>& predictions) {
  std::map<std::string_view, const BinaryMask*> by_id;
  for (const auto& [id, mask] : predictions) by_id.emplace(id, &mask);
  std::vector<EvalSample> out;
  out.reserve(ground_truth.size());
  for (const auto& [id, gt] : ground_truth) {
    const auto it = by_id.find(id);
    if (it == by_id.end()) throw Error(ErrorCode::kDataError, "no prediction for sample " + id);
    out.push_back(EvalSample{id, gt, *it->second});
  }
  return out;
}

std::vector<BenchmarkEntry> parse_benchmark_jsonl(std::string_view jsonl) {
  std::vector<BenchmarkEntry> out;
  for_each_json_line(jsonl, [&](const nlohmann::json& j) {
    out.push_back(BenchmarkEntry{j.at("image_ref").get<std::string>(),
                                 j.at("expression").get<std::string>(),
                                 j.at("type").get<std::string>(), j.at("domain").get<std::string>(),
                                 j.at("split").get<std::string>(),
                                 j.at("attribute").get<std::string>()});
  });
  return out;
}

BenchmarkStats benchmark_stats(std::span<const BenchmarkEntry> entries) {
  using RowKey = std::tuple<std::string, std::string, std::string, std::string>;
  using SplitKey = std::pair<std::string, std::string>;
  std::map<RowKey, std::size_t> row_index;
  std::vector<std::set<std::string>> row_images;
  std::map<SplitKey, std::size_t> split_index;
  std::vector<std::set<std::string>> split_images;
  std::set<std::string> all_images;

  BenchmarkStats stats;
  for (const BenchmarkEntry& e : entries) {
    const RowKey key{e.type, e.domain, e.split, e.attribute};
    auto [rit, new_row] = row_index.try_emplace(key, stats.rows.size());
    if (new_row) {
      stats.rows.push_back(StatsRow{e.type, e.domain, e.split, e.attribute, 0, 0});
      row_images.emplace_back();
    }
    ++stats.rows[rit->second].expressions;
    row_images[rit->second].insert(e.image_ref);

    const SplitKey skey{e.type, e.split};
    auto [sit, new_split] = split_index.try_emplace(skey, stats.split_totals.size());
    if (new_split) {
      stats.split_totals.push_back(StatsRow{e.type, "*", e.split, "Total", 0, 0});
      split_images.emplace_back();
    }
    ++stats.split_totals[sit->second].expressions;
    split_images[sit->second].insert(e.image_ref);

    all_images.insert(e.image_ref);
    ++stats.total_expressions;
  }
  for (std::size_t k = 0; k < stats.rows.size(); ++k) stats.rows[k].images = row_images[k].size();
  for (std::size_t k = 0; k < stats.split_totals.size(); ++k) {
    stats.split_totals[k].images = split_images[k].size();
  }
  stats.total_images = all_images.size();
  stats.notes.push_back("observed totals: " + std::to_string(stats.total_images) + " images, " +
                        std::to_string(stats.total_expressions) + " expressions");
  stats.notes.push_back(
      "published WildRES totals: 724 images; the expression total appears as both 941 and 974 "
      "in published descriptions, so neither is asserted here");
  return stats;
}

std::string benchmark_stats_csv(const BenchmarkStats& stats) {
  std::string out = "type,domain,split,attribute,images,expressions\n";
  const auto emit = [&out](const StatsRow& r) {
    out += csv_field(r.type) + "," + csv_field(r.domain) + "," + csv_field(r.split) + "," +
           csv_field(r.attribute) + "," + std::to_string(r.images) + "," +
           std::to_string(r.expressions) + "\n";
  };
  for (const auto& r : stats.rows) emit(r);
  for (const auto& r : stats.split_totals) emit(r);
  out += "Total,*,*,*," + std::to_string(stats.total_images) + "," +
         std::to_string(stats.total_expressions) + "\n";
  return out;
}

AttributeHistogram attribute_histogram(std::span<const std::string> expressions,
                                       AttributeCounter& counter) {
  if (expressions.empty()) throw Error(ErrorCode::kEmptyInput, "no expressions to classify");
  for (const auto& e : expressions) {
    if (trim(e).empty()) throw Error(ErrorCode::kEmptyInput, "blank expression in histogram input");
  }
  AttributeHistogram h;
  for (const std::string& e : expressions) {
    AttributeMap attrs = counter.classify(e);
    for (AttributeKind k : kAllAttributeKinds) attrs[k];
    const std::size_t total = total_attributes(attrs);
    for (AttributeKind k : kAllAttributeKinds) ++h.distribution[k][attrs[k].size()];
    ++h.total_distribution[total];
    h.totals.push_back(total);
    h.per_expression.push_back(std::move(attrs));
  }
  return h;
}

std::string attribute_histogram_csv(const AttributeHistogram& histogram) {
  std::string out = "category,matched_words,expressions\n";
  for (const auto& [kind, counts] : histogram.distribution) {
    for (const auto& [words, n] : counts) {
      out += std::string(attribute_code(kind)) + "," + std::to_string(words) + "," +
             std::to_string(n) + "\n";
    }
  }
  for (const auto& [words, n] : histogram.total_distribution) {
    out += "total," + std::to_string(words) + "," + std::to_string(n) + "\n";
  }
  return out;
}

}  // namespace synres
