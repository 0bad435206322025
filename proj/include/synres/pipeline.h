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

#ifndef SYNRES_PIPELINE_H_
#define SYNRES_PIPELINE_H_

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <nlohmann/json.hpp>

#include "synres/clients.h"
#include "synres/grouping.h"
#include "synres/image.h"
#include "synres/manifest.h"
#include "synres/mosaic.h"
#include "synres/synthesis.h"
#include "synres/types.h"

namespace synres {

struct MockClient {
  friend bool operator==(const MockClient&, const MockClient&) = default;
};

struct EndpointClient {
  ClientEndpointConfig endpoint;
  // Attribute counter only: classification prompt text, loaded from the
  // config's "instructions_file".
  std::string instructions;
};

using ClientChoice = std::variant<MockClient, EndpointClient>;

// Which synthetic records a target's mosaic may draw from.
enum class MosaicPool { kSameTarget, kAllTargets };

struct PipelineConfig {
  std::uint64_t master_seed = 0;
  SynthesisConfig synthesis;
  GroupingConfig grouping;
  MosaicConfig mosaic;
  MosaicPool mosaic_pool = MosaicPool::kSameTarget;
  ClientChoice captioner;
  ClientChoice image_generator;
  ClientChoice segmenter;
  ClientChoice attribute_counter;
  std::filesystem::path workspace;
  std::filesystem::path targets;
  std::size_t workers = 1;
};

// Throws ConfigError on any invariant violation.
void validate(const PipelineConfig& config);

// Parses the JSON config document. Absent keys keep their defaults; unknown
// keys are rejected. Relative paths resolve against `base_dir`. Throws
// ConfigError.
PipelineConfig parse_pipeline_config(const nlohmann::json& j,
                                     const std::filesystem::path& base_dir = {});
PipelineConfig load_pipeline_config(const std::filesystem::path& path);

// Every endpoint replaced by the mock.
void force_mock_clients(PipelineConfig& config);

// Settings that determine the output: seed, stage parameters and client
// choices. Excludes io, workers and credentials. Recorded in the manifest
// meta and hashed into its config digest.
nlohmann::ordered_json effective_config(const PipelineConfig& config);

enum class Stage { kStep1 = 1, kStep2 = 2, kStep3 = 3 };
const char* stage_name(Stage stage);
// "step1,step2" etc. Must be a contiguous run in pipeline order; empty means
// all three. Throws ConfigError.
std::vector<Stage> parse_stages(std::string_view text);

// Workspace layout.
struct WorkspacePaths {
  explicit WorkspacePaths(std::filesystem::path root);
  std::filesystem::path root;
  std::filesystem::path images;
  std::filesystem::path targets;
  std::filesystem::path step1_batches;
  std::filesystem::path step2_records;
  std::filesystem::path step3_records;
  std::filesystem::path manifest;
};

// Reads a targets file ({"target_id", "image" | "image_ref", "mask",
// "expression"?} per line). "image" paths are imported into `store`
// relative to `base_dir`; "image_ref" must already be in the store. Throws
// DataError.
std::vector<ReferringTarget> load_targets(std::string_view jsonl, ImageStore& store,
                                          const std::filesystem::path& base_dir);
std::string targets_to_jsonl(const std::vector<ReferringTarget>& targets);

// Builds clients for `config`. HTTP endpoints bound the suite's request
// concurrency by the smallest max_in_flight.
ClientSuite make_client_suite(const PipelineConfig& config, std::shared_ptr<ImageStore> store);

struct PipelineOptions {
  // Replaces the configured clients when set.
  std::optional<ClientSuite> clients;
};

// Runs `stages` in order, persisting each stage's output under the workspace
// and removing stale downstream intermediates. A stage whose inputs are not
// in the workspace fails with ConfigError. Afterwards assembles the manifest
// from real records (targets with a human expression) and whatever step-2
// and step-3 records exist, validates it and writes manifest.jsonl.
DatasetManifest run_pipeline(const PipelineConfig& config, const std::vector<Stage>& stages,
                             const PipelineOptions& options = {});

}  // namespace synres

#endif  // SYNRES_PIPELINE_H_
