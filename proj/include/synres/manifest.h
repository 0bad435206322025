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

#ifndef SYNRES_MANIFEST_H_
#define SYNRES_MANIFEST_H_

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "synres/mask.h"
#include "synres/rle.h"

namespace synres {

enum class RecordSource { kReal, kSynthetic, kMosaic };

const char* record_source_name(RecordSource s);
RecordSource parse_record_source(std::string_view name);

struct Lineage {
  std::string target_id;
  std::string group_id;
  std::optional<std::uint64_t> seed;
  std::string expression_id;
  // Contributing tile image refs, mosaic records only.
  std::vector<std::string> tiles;

  friend bool operator==(const Lineage&, const Lineage&) = default;
};

struct TripletRecord {
  std::string image_ref;
  std::string expression_text;
  BinaryMask mask;
  RecordSource source = RecordSource::kSynthetic;
  Lineage lineage;

  friend bool operator==(const TripletRecord&, const TripletRecord&) = default;
};

struct ManifestCounts {
  std::uint64_t images = 0;
  std::uint64_t expressions = 0;
  std::uint64_t masks = 0;

  friend bool operator==(const ManifestCounts&, const ManifestCounts&) = default;
};

struct ManifestMeta {
  std::string config_digest;
  // Effective configuration the digest was computed over.
  nlohmann::ordered_json config;
  ManifestCounts counts;
  std::string tool_version;
};

struct DatasetManifest {
  std::vector<TripletRecord> records;
  ManifestMeta meta;
};

// Distinct image refs, expression texts and masks (dimensions + bits).
ManifestCounts count_distinct(std::span<const TripletRecord> records);

// FNV-1a-64 hex over the compact dump of `config`.
std::string config_digest(const nlohmann::ordered_json& config);

DatasetManifest make_manifest(std::vector<TripletRecord> records,
                              nlohmann::ordered_json config);

nlohmann::ordered_json record_to_json(const TripletRecord& record);
// One record object per line, meta object (tagged "type":"meta") last.
// Byte-stable: field order is fixed and numbers are integers or shortest
// round-trip doubles.
std::string to_jsonl(const DatasetManifest& manifest);

// Manifest as read back from disk, masks still in serialized form so that
// malformed records can be reported instead of thrown.
struct StoredRecord {
  std::size_t line = 0;  // 1-based
  std::string image_ref;
  std::string expression_text;
  RleMask mask;
  RecordSource source = RecordSource::kSynthetic;
  Lineage lineage;
};

struct ManifestFile {
  std::vector<StoredRecord> records;
  std::optional<ManifestMeta> meta;
  // Lines of non-meta objects following the meta line.
  std::vector<std::size_t> lines_after_meta;
};

// Throws DataError on invalid JSON or records missing required fields.
ManifestFile parse_manifest_jsonl(std::string_view text);

enum class ViolationKind {
  kMalformedRle,
  kDimensionMismatch,
  kCountMismatch,
  kMissingMeta,
  kMisplacedMeta,
  kMissingImage,
};

const char* violation_kind_name(ViolationKind kind);

struct Violation {
  ViolationKind kind;
  std::size_t line = 0;  // 0 when not tied to one record
  std::string message;
};

// Returns nullopt for refs that cannot be resolved.
using DimensionLookup = std::function<std::optional<Size>(std::string_view ref)>;

// Empty iff every mask decodes, mask sizes match their images (when a lookup
// is supplied) and meta.counts match the records.
std::vector<Violation> validate_manifest(const ManifestFile& manifest,
                                         const DimensionLookup& dimensions = {});

// Throws the first decoding error.
DatasetManifest decode_manifest(const ManifestFile& manifest);

}  // namespace synres

#endif  // SYNRES_MANIFEST_H_
