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

#include "synres/synthesis.h"

#include <cmath>

#include "synres/error.h"
#include "synres/parallel.h"

namespace synres {
namespace {

constexpr double kMicro = 1e6;

bool is_trailing_junk(char c) {
  return std::isspace(static_cast<unsigned char>(c)) || c == '.' || c == ',' || c == ';' ||
         c == ':' || c == '!' || c == '?';
}

// Runs a client call and tags any failure with the client that produced it.
template <typename Fn>
auto call_client(const char* stage, Fn&& fn) -> decltype(fn()) {
  try {
    return fn();
  } catch (const Error& e) {
    if (e.code() == ErrorCode::kClientError || e.code() == ErrorCode::kEmptyResponse) {
      throw e.stage().empty() ? e.with_stage(stage) : e;
    }
    throw Error(ErrorCode::kClientError, e.message(), stage);
  } catch (const std::exception& e) {
    throw Error(ErrorCode::kClientError, e.what(), stage);
  }
}

}  // namespace

void validate(const SynthesisConfig& config) {
  if (config.n_expressions < 1) throw Error(ErrorCode::kConfigError, "n_expressions must be >= 1");
  if (config.m_images < 1) throw Error(ErrorCode::kConfigError, "m_images must be >= 1");
  if (!(config.binarize_threshold > 0.0 && config.binarize_threshold < 1.0)) {
    throw Error(ErrorCode::kConfigError, "binarize_threshold must lie in (0, 1)");
  }
}

std::string aggregate_expressions(std::span<const std::string> texts) {
  if (texts.empty()) throw Error(ErrorCode::kEmptyInput, "no expressions to aggregate");
  std::string out;
  for (const std::string& text : texts) {
    std::string_view t = text;
    while (!t.empty() && std::isspace(static_cast<unsigned char>(t.front()))) t.remove_prefix(1);
    while (!t.empty() && is_trailing_junk(t.back())) t.remove_suffix(1);
    if (t.empty()) throw Error(ErrorCode::kEmptyInput, "expression trims to nothing: '" + text + "'");
    if (!out.empty()) out += ", ";
    out += t;
  }
  return out;
}

std::string build_prompt(std::string_view aggregated, RandomStream& stream) {
  if (trim(aggregated).empty()) throw Error(ErrorCode::kEmptyInput, "empty aggregated description");
  const PromptTemplate& tpl = kPromptTemplates[stream.uniform_index(kPromptTemplates.size())];
  std::string prompt;
  prompt.reserve(tpl.prefix.size() + aggregated.size() + tpl.suffix.size());
  prompt += tpl.prefix;
  prompt += aggregated;
  prompt += tpl.suffix;
  return prompt;
}

SyntheticBatch run_step1(const ReferringTarget& target, const SynthesisConfig& config,
                         const ClientSuite& clients, std::size_t concurrency) {
  validate(config);
  SyntheticBatch batch;
  batch.target_id = target.target_id;

  std::vector<std::string> texts;
  try {
    texts = call_client("captioner", [&] {
      return clients.captioner->describe(target.real_image_ref, target.real_mask,
                                         config.n_expressions);
    });
  } catch (const Error& e) {
    if (e.code() == ErrorCode::kEmptyResponse) {
      throw Error(ErrorCode::kPartialBatch, "captioner returned no expressions for " + target.target_id,
                  "captioner");
    }
    throw;
  }
  std::vector<std::string> kept;
  for (auto& t : dedupe_texts(std::move(texts))) {
    if (!trim(t).empty()) kept.push_back(std::move(t));
  }
  if (kept.empty()) {
    throw Error(ErrorCode::kPartialBatch, "captioner returned no expressions for " + target.target_id,
                "captioner");
  }
  if (kept.size() > static_cast<std::size_t>(config.n_expressions)) {
    kept.resize(static_cast<std::size_t>(config.n_expressions));
  }
  for (std::size_t j = 0; j < kept.size(); ++j) {
    batch.expressions.push_back(make_expression(target.target_id + "/e" + std::to_string(j),
                                                kept[j], target.target_id, Provenance::kSynthetic));
  }

  CounterStream prompt_stream(config.seed_base, target.target_id, "prompt", 0);
  batch.prompt = build_prompt(aggregate_expressions(kept), prompt_stream);

  const auto m = static_cast<std::size_t>(config.m_images);
  const std::size_t n = batch.expressions.size();
  const Size size = target.real_mask.size();
  batch.images.resize(m);
  parallel_for(m, concurrency, [&](std::size_t i) {
    const std::uint64_t seed = config.seed_base + i;
    batch.images[i] = GeneratedImage{call_client("image_generator", [&] {
                                       return clients.image_generator->generate(
                                           batch.prompt, seed, size.width, size.height);
                                     }),
                                     seed};
  });

  std::vector<std::optional<RasterMask>> cells(m * n);
  parallel_for(m * n, concurrency, [&](std::size_t cell) {
    const std::size_t i = cell / n;
    const std::size_t j = cell % n;
    cells[cell] = call_client("segmenter", [&] {
      return clients.segmenter->segment(batch.images[i].ref, batch.expressions[j].text);
    });
    if (cells[cell]->size() != size) {
      throw Error(ErrorCode::kClientError, "segmenter returned a mask of the wrong size", "segmenter");
    }
  });
  batch.pseudo_masks.resize(m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) batch.pseudo_masks[i].push_back(std::move(*cells[i * n + j]));
  }
  validate_batch(batch);
  return batch;
}

RasterMask quantize(const RasterMask& mask) {
  std::vector<float> values(mask.values().begin(), mask.values().end());
  for (float& v : values) {
    v = static_cast<float>(static_cast<double>(std::llround(static_cast<double>(v) * kMicro)) / kMicro);
  }
  return RasterMask(mask.width(), mask.height(), std::move(values));
}

nlohmann::ordered_json batch_to_json(const SyntheticBatch& batch) {
  nlohmann::ordered_json j;
  j["target_id"] = batch.target_id;
  j["prompt"] = batch.prompt;
  j["expressions"] = nlohmann::ordered_json::array();
  for (const auto& e : batch.expressions) {
    nlohmann::ordered_json ej;
    ej["id"] = e.id;
    ej["text"] = e.text;
    ej["target_id"] = e.target_id;
    ej["provenance"] = provenance_name(e.provenance);
    j["expressions"].push_back(std::move(ej));
  }
  j["images"] = nlohmann::ordered_json::array();
  for (const auto& img : batch.images) {
    nlohmann::ordered_json ij;
    ij["ref"] = img.ref;
    ij["seed"] = img.seed;
    j["images"].push_back(std::move(ij));
  }
  j["pseudo_masks"] = nlohmann::ordered_json::array();
  for (const auto& row : batch.pseudo_masks) {
    nlohmann::ordered_json rj = nlohmann::ordered_json::array();
    for (const auto& mask : row) {
      std::vector<std::int64_t> micros;
      micros.reserve(mask.pixel_count());
      for (float v : mask.values()) micros.push_back(std::llround(static_cast<double>(v) * kMicro));
      nlohmann::ordered_json mj;
      mj["w"] = mask.width();
      mj["h"] = mask.height();
      mj["micros"] = std::move(micros);
      rj.push_back(std::move(mj));
    }
    j["pseudo_masks"].push_back(std::move(rj));
  }
  return j;
}

SyntheticBatch batch_from_json(const nlohmann::json& j) {
  try {
    SyntheticBatch batch;
    batch.target_id = j.at("target_id").get<std::string>();
    batch.prompt = j.at("prompt").get<std::string>();
    for (const auto& ej : j.at("expressions")) {
      batch.expressions.push_back(make_expression(
          ej.at("id").get<std::string>(), ej.at("text").get<std::string>(),
          ej.at("target_id").get<std::string>(), parse_provenance(ej.at("provenance").get<std::string>())));
    }
    for (const auto& ij : j.at("images")) {
      batch.images.push_back({ij.at("ref").get<std::string>(), ij.at("seed").get<std::uint64_t>()});
    }
    for (const auto& rj : j.at("pseudo_masks")) {
      std::vector<RasterMask> row;
      for (const auto& mj : rj) {
        const auto micros = mj.at("micros").get<std::vector<std::int64_t>>();
        std::vector<float> values;
        values.reserve(micros.size());
        for (std::int64_t u : micros) values.push_back(static_cast<float>(static_cast<double>(u) / kMicro));
        row.emplace_back(mj.at("w").get<int>(), mj.at("h").get<int>(), std::move(values));
      }
      batch.pseudo_masks.push_back(std::move(row));
    }
    validate_batch(batch);
    return batch;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::kDataError, std::string("malformed batch record: ") + e.what());
  } catch (const Error& e) {
    if (e.code() == ErrorCode::kDataError) throw;
    throw Error(ErrorCode::kDataError, "malformed batch record: " + e.message());
  }
}

}  // namespace synres
