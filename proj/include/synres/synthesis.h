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

#ifndef SYNRES_SYNTHESIS_H_
#define SYNRES_SYNTHESIS_H_

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "synres/clients.h"
#include "synres/maskops.h"
#include "synres/random.h"
#include "synres/types.h"

namespace synres {

struct SynthesisConfig {
  int n_expressions = 5;
  int m_images = 6;
  std::uint64_t seed_base = 0;
  double binarize_threshold = kDefaultBinarizeThreshold;
};

void validate(const SynthesisConfig& config);

// Joins with ", " in order after trimming each text (leading whitespace,
// trailing whitespace and . , ; : ! ?). Throws EmptyInput on an empty list or
// a text that trims to nothing.
std::string aggregate_expressions(std::span<const std::string> texts);

struct PromptTemplate {
  std::string_view prefix;
  std::string_view suffix;
};

inline constexpr std::string_view kPromptSuffix =
    ", hyper-realistic, 4k, realism, highly detailed, natural realistic background";

inline constexpr std::array<PromptTemplate, 2> kPromptTemplates = {{
    {"photo of ", kPromptSuffix},
    {"cinematic scene ", kPromptSuffix},
}};

// One of the two templates, chosen uniformly by one draw from `stream`.
std::string build_prompt(std::string_view aggregated, RandomStream& stream);

// Caption, aggregate, generate m images with seeds seed_base..seed_base+m-1,
// then segment every (image, expression) pair. Client failures surface as
// ClientError tagged with the failing client; no expressions at all is
// PartialBatch. Up to `concurrency` requests are issued at once; the batch is
// assembled by index, so it never depends on completion order.
SyntheticBatch run_step1(const ReferringTarget& target, const SynthesisConfig& config,
                         const ClientSuite& clients, std::size_t concurrency = 1);

// Persisted batch form. Confidences are stored as integer micro-units, i.e.
// fixed 6-decimal precision.
nlohmann::ordered_json batch_to_json(const SyntheticBatch& batch);
SyntheticBatch batch_from_json(const nlohmann::json& j);

// Rounds every confidence to 6 decimals, as persisting does.
RasterMask quantize(const RasterMask& mask);

}  // namespace synres

#endif  // SYNRES_SYNTHESIS_H_
