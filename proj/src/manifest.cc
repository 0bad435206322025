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

#include "synres/manifest.h"

#include <set>
#include <sstream>
#include <tuple>

#include "synres/error.h"
#include "synres/hash.h"

namespace synres {
namespace {

using ojson = nlohmann::ordered_json;

std::string dump_line(const ojson& j) {
  return j.dump(-1, ' ', false, nlohmann::json::error_handler_t::replace);
}

ojson lineage_to_json(const Lineage& l) {
  ojson j = ojson::object();
  j["target_id"] = l.target_id;
  if (!l.group_id.empty()) j["group_id"] = l.group_id;
  if (l.seed) j["seed"] = *l.seed;
  if (!l.expression_id.empty()) j["expression_id"] = l.expression_id;
  if (!l.tiles.empty()) j["tiles"] = l.tiles;
  return j;
}

Lineage lineage_from_json(const nlohmann::json& j) {
  Lineage l;
  if (!j.is_object()) return l;
  l.target_id = j.value("target_id", "");
  l.group_id = j.value("group_id", "");
  if (j.contains("seed")) l.seed = j.at("seed").get<std::uint64_t>();
  l.expression_id = j.value("expression_id", "");
  if (j.contains("tiles")) l.tiles = j.at("tiles").get<std::vector<std::string>>();
  return l;
}

ojson counts_to_json(const ManifestCounts& c) {
  ojson j;
  j["images"] = c.images;
  j["expressions"] = c.expressions;
  j["masks"] = c.masks;
  return j;
}

template <typename Records, typename MaskKey>
ManifestCounts count_distinct_impl(const Records& records, MaskKey mask_key) {
  std::set<std::string_view> images;
  std::set<std::string_view> expressions;
  std::set<RleMask, decltype([](const RleMask& a, const RleMask& b) {
             return std::tie(a.width, a.height, a.counts) <
                    std::tie(b.width, b.height, b.counts);
           })>
      masks;
  for (const auto& r : records) {
    images.insert(r.image_ref);
    expressions.insert(r.expression_text);
    masks.insert(mask_key(r));
  }
  return {images.size(), expressions.size(), masks.size()};
}

}  // namespace

const char* record_source_name(RecordSource s) {
  switch (s) {
    case RecordSource::kReal: return "real";
    case RecordSource::kSynthetic: return "synthetic";
    case RecordSource::kMosaic: return "mosaic";
  }
  return "synthetic";
}

RecordSource parse_record_source(std::string_view name) {
  if (name == "real") return RecordSource::kReal;
  if (name == "synthetic") return RecordSource::kSynthetic;
  if (name == "mosaic") return RecordSource::kMosaic;
  throw Error(ErrorCode::kDataError, "unknown record source: " + std::string(name));
}

const char* violation_kind_name(ViolationKind kind) {
  switch (kind) {
    case ViolationKind::kMalformedRle: return "MalformedRle";
    case ViolationKind::kDimensionMismatch: return "DimensionMismatch";
    case ViolationKind::kCountMismatch: return "CountMismatch";
    case ViolationKind::kMissingMeta: return "MissingMeta";
    case ViolationKind::kMisplacedMeta: return "MisplacedMeta";
    case ViolationKind::kMissingImage: return "MissingImage";
  }
  return "Unknown";
}

ManifestCounts count_distinct(std::span<const TripletRecord> records) {
  return count_distinct_impl(records, [](const TripletRecord& r) { return to_rle(r.mask); });
}

std::string config_digest(const nlohmann::ordered_json& config) {
  return hex64(fnv1a64(dump_line(config)));
}

DatasetManifest make_manifest(std::vector<TripletRecord> records, nlohmann::ordered_json config) {
  DatasetManifest m;
  m.meta.counts = count_distinct(records);
  m.meta.config_digest = config_digest(config);
  m.meta.config = std::move(config);
  m.meta.tool_version = SYNRES_VERSION;
  m.records = std::move(records);
  return m;
}

nlohmann::ordered_json record_to_json(const TripletRecord& r) {
  ojson j;
  j["image_ref"] = r.image_ref;
  j["expression"] = r.expression_text;
  j["mask"] = rle_to_json(to_rle(r.mask));
  j["source"] = record_source_name(r.source);
  j["lineage"] = lineage_to_json(r.lineage);
  return j;
}

std::string to_jsonl(const DatasetManifest& manifest) {
  std::string out;
  for (const auto& r : manifest.records) {
    out += dump_line(record_to_json(r));
    out.push_back('\n');
  }
  ojson meta;
  meta["type"] = "meta";
  meta["config_digest"] = manifest.meta.config_digest;
  meta["config"] = manifest.meta.config;
  meta["counts"] = counts_to_json(manifest.meta.counts);
  meta["tool_version"] = manifest.meta.tool_version;
  out += dump_line(meta);
  out.push_back('\n');
  return out;
}

ManifestFile parse_manifest_jsonl(std::string_view text) {
  ManifestFile file;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start < text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    const std::string_view line = text.substr(start, end - start);
    start = end + 1;
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string_view::npos) continue;

    nlohmann::json j;
    try {
      j = nlohmann::json::parse(line);
    } catch (const nlohmann::json::parse_error& e) {
      throw Error(ErrorCode::kDataError,
                  "line " + std::to_string(line_no) + ": invalid JSON: " + e.what());
    }
    if (!j.is_object()) {
      throw Error(ErrorCode::kDataError, "line " + std::to_string(line_no) + ": not an object");
    }
    if (j.value("type", "") == "meta") {
      if (file.meta) {
        throw Error(ErrorCode::kDataError, "line " + std::to_string(line_no) + ": second meta line");
      }
      ManifestMeta meta;
      meta.config_digest = j.value("config_digest", "");
      if (j.contains("config")) meta.config = j.at("config");
      meta.tool_version = j.value("tool_version", "");
      if (j.contains("counts") && j.at("counts").is_object()) {
        const auto& c = j.at("counts");
        meta.counts.images = c.value("images", std::uint64_t{0});
        meta.counts.expressions = c.value("expressions", std::uint64_t{0});
        meta.counts.masks = c.value("masks", std::uint64_t{0});
      }
      file.meta = std::move(meta);
      continue;
    }
    if (file.meta) file.lines_after_meta.push_back(line_no);

    StoredRecord r;
    r.line = line_no;
    try {
      r.image_ref = j.at("image_ref").get<std::string>();
      r.expression_text = j.at("expression").get<std::string>();
      r.mask = rle_from_json(j.at("mask"));
      r.source = parse_record_source(j.value("source", "synthetic"));
      if (j.contains("lineage")) r.lineage = lineage_from_json(j.at("lineage"));
    } catch (const nlohmann::json::exception& e) {
      throw Error(ErrorCode::kDataError,
                  "line " + std::to_string(line_no) + ": " + e.what());
    } catch (const Error& e) {
      throw Error(ErrorCode::kDataError,
                  "line " + std::to_string(line_no) + ": " + e.message());
    }
    file.records.push_back(std::move(r));
  }
  return file;
}

std::vector<Violation> validate_manifest(const ManifestFile& manifest,
                                         const DimensionLookup& dimensions) {
  std::vector<Violation> report;
  bool any_malformed = false;
  for (const auto& r : manifest.records) {
    try {
      from_rle(r.mask);
    } catch (const Error& e) {
      report.push_back({ViolationKind::kMalformedRle, r.line, e.message()});
      any_malformed = true;
      continue;
    }
    if (dimensions) {
      const auto size = dimensions(r.image_ref);
      if (!size) {
        report.push_back({ViolationKind::kMissingImage, r.line,
                          "image " + r.image_ref + " not found"});
      } else if (size->width != r.mask.width || size->height != r.mask.height) {
        report.push_back({ViolationKind::kDimensionMismatch, r.line,
                          "mask " + std::to_string(r.mask.width) + "x" +
                              std::to_string(r.mask.height) + " vs image " +
                              std::to_string(size->width) + "x" + std::to_string(size->height)});
      }
    }
  }
  if (!manifest.meta) {
    report.push_back({ViolationKind::kMissingMeta, 0, "no meta line"});
    return report;
  }
  for (std::size_t line : manifest.lines_after_meta) {
    report.push_back({ViolationKind::kMisplacedMeta, line, "record after meta line"});
  }
  const ManifestCounts actual =
      count_distinct_impl(manifest.records, [](const StoredRecord& r) { return r.mask; });
  const ManifestCounts& claimed = manifest.meta->counts;
  const auto check = [&](const char* field, std::uint64_t want, std::uint64_t got) {
    if (want != got) {
      report.push_back({ViolationKind::kCountMismatch, 0,
                        std::string("meta.counts.") + field + " is " + std::to_string(want) +
                            " but records contain " + std::to_string(got)});
    }
  };
  check("images", claimed.images, actual.images);
  check("expressions", claimed.expressions, actual.expressions);
  // A malformed mask has no decoded identity, so the mask count cannot be
  // checked; the record is already reported.
  if (!any_malformed) check("masks", claimed.masks, actual.masks);
  return report;
}

DatasetManifest decode_manifest(const ManifestFile& manifest) {
  DatasetManifest out;
  out.records.reserve(manifest.records.size());
  for (const auto& r : manifest.records) {
    out.records.push_back(TripletRecord{r.image_ref, r.expression_text, from_rle(r.mask),
                                        r.source, r.lineage});
  }
  if (manifest.meta) out.meta = *manifest.meta;
  return out;
}

}  // namespace synres
