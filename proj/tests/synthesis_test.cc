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

#include <memory>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "test_util.h"
#include "synres/error.h"
#include "synres/image.h"
#include "synres/mock_clients.h"
#include "synres/random.h"
#include "synres/synthesis.h"

namespace synres {
namespace {

const std::string kSuffix =
    ", hyper-realistic, 4k, realism, highly detailed, natural realistic background";

TEST(AggregateTest, DocumentedExamples) {
  const std::vector<std::string> two = {"put the knot behind the ear", "women's hair braided"};
  EXPECT_EQ(aggregate_expressions(two), "put the knot behind the ear, women's hair braided");
  const std::vector<std::string> one = {"a red car"};
  EXPECT_EQ(aggregate_expressions(one), "a red car");
  const std::vector<std::string> messy = {"a dog.", " a park "};
  EXPECT_EQ(aggregate_expressions(messy), "a dog, a park");
  const std::vector<std::string> blank = {"ok", "  "};
  EXPECT_THROW(aggregate_expressions(blank), Error);
  const std::vector<std::string> none;
  EXPECT_THROW(aggregate_expressions(none), Error);
}

TEST(PromptTest, ForcedTemplatesAreVerbatim) {
  ScriptedStream first({0});
  EXPECT_EQ(build_prompt("a red car", first), "photo of a red car" + kSuffix);
  ScriptedStream second({1});
  EXPECT_EQ(build_prompt("a red car", second), "cinematic scene a red car" + kSuffix);
  EXPECT_EQ(second.consumed(), 1u);
}

TEST(PromptTest, SameSeedSamePrompt) {
  CounterStream a(42, "t", "prompt", 0);
  CounterStream b(42, "t", "prompt", 0);
  EXPECT_EQ(build_prompt("x", a), build_prompt("x", b));
}

struct Fixture {
  std::shared_ptr<ImageStore> store;
  ReferringTarget target;
};

Fixture make_fixture(const std::string& name) {
  Fixture f;
  f.store = std::make_shared<ImageStore>(testing::scratch(name));
  f.target.target_id = "t0";
  f.target.real_image_ref = f.store->put(Image::solid(40, 30, 9, 8, 7));
  f.target.real_mask = BinaryMask(40, 30);
  f.target.real_mask.set(5, 5);
  return f;
}

TEST(Step1Test, MockBatchCardinalities) {
  Fixture f = make_fixture("step1_card");
  const ClientSuite suite = make_mock_suite(f.store);
  SynthesisConfig cfg;
  cfg.seed_base = 100;
  const SyntheticBatch batch = run_step1(f.target, cfg, suite);
  EXPECT_LE(batch.expression_count(), 5u);
  EXPECT_GE(batch.expression_count(), 1u);
  ASSERT_EQ(batch.image_count(), 6u);
  ASSERT_EQ(batch.pseudo_masks.size(), 6u);
  for (std::size_t i = 0; i < 6; ++i) {
    EXPECT_EQ(batch.images[i].seed, 100 + i);
    EXPECT_EQ(batch.images[i].ref,
              content_ref(encode_ppm(mock::generate(batch.prompt, 100 + i, 40, 30))));
    ASSERT_EQ(batch.pseudo_masks[i].size(), batch.expression_count());
    for (std::size_t j = 0; j < batch.expression_count(); ++j) {
      EXPECT_EQ(batch.pseudo_masks[i][j].size(), (Size{40, 30}));
    }
  }
  EXPECT_EQ(batch.expressions[0].id, "t0/e0");
  EXPECT_EQ(batch.expressions[0].provenance, Provenance::kSynthetic);
  const bool templ = batch.prompt.rfind("photo of ", 0) == 0 ||
                     batch.prompt.rfind("cinematic scene ", 0) == 0;
  EXPECT_TRUE(templ) << batch.prompt;
}

TEST(Step1Test, SingleExpressionSingleImage) {
  Fixture f = make_fixture("step1_single");
  SynthesisConfig cfg;
  cfg.n_expressions = 1;
  cfg.m_images = 1;
  const SyntheticBatch batch = run_step1(f.target, cfg, make_mock_suite(f.store));
  EXPECT_EQ(batch.expression_count(), 1u);
  ASSERT_EQ(batch.pseudo_masks.size(), 1u);
  EXPECT_EQ(batch.pseudo_masks[0].size(), 1u);
}

class SilentCaptioner : public Captioner {
 public:
  std::vector<std::string> describe(const std::string&, const BinaryMask&, int) override {
    return {};
  }
};

class FailingSegmenter : public Segmenter {
 public:
  RasterMask segment(const std::string&, const std::string&) override {
    throw Error(ErrorCode::kIoError, "socket closed");
  }
};

TEST(Step1Test, ClientFailuresAreAttributed) {
  Fixture f = make_fixture("step1_fail");
  ClientSuite suite = make_mock_suite(f.store);
  suite.captioner = std::make_shared<SilentCaptioner>();
  try {
    run_step1(f.target, SynthesisConfig{}, suite);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kPartialBatch);
  }
  suite = make_mock_suite(f.store);
  suite.segmenter = std::make_shared<FailingSegmenter>();
  try {
    run_step1(f.target, SynthesisConfig{}, suite);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kClientError);
    EXPECT_EQ(e.stage(), "segmenter");
  }
}

TEST(Step1Test, DeterministicAcrossConcurrency) {
  Fixture f = make_fixture("step1_det");
  const ClientSuite suite = make_mock_suite(f.store);
  const auto a = batch_to_json(run_step1(f.target, SynthesisConfig{}, suite, 1)).dump();
  const auto b = batch_to_json(run_step1(f.target, SynthesisConfig{}, suite, 4)).dump();
  EXPECT_EQ(a, b);
}

TEST(Step1Test, ConfigValidation) {
  SynthesisConfig cfg;
  cfg.m_images = 0;
  EXPECT_THROW(validate(cfg), Error);
  cfg = SynthesisConfig{};
  cfg.n_expressions = 0;
  EXPECT_THROW(validate(cfg), Error);
}

TEST(BatchJsonTest, RoundTripAtMicroPrecision) {
  std::mt19937_64 rng(2);
  const SyntheticBatch batch = testing::random_batch(rng, 3, 2, 5, 4);
  const SyntheticBatch back = batch_from_json(nlohmann::json::parse(batch_to_json(batch).dump()));
  EXPECT_EQ(back.target_id, batch.target_id);
  EXPECT_EQ(back.prompt, batch.prompt);
  EXPECT_EQ(back.images, batch.images);
  ASSERT_EQ(back.expressions.size(), 3u);
  for (std::size_t i = 0; i < 2; ++i) {
    for (std::size_t j = 0; j < 3; ++j) {
      const auto& a = batch.pseudo_masks[i][j].values();
      const auto& b = back.pseudo_masks[i][j].values();
      ASSERT_EQ(a.size(), b.size());
      // Half a micro-unit of rounding plus float32 representation error.
      for (std::size_t k = 0; k < a.size(); ++k) EXPECT_NEAR(a[k], b[k], 5e-7 + 6e-8);
    }
  }
  // A second trip is exact.
  EXPECT_EQ(batch_to_json(back).dump(),
            batch_to_json(batch_from_json(nlohmann::json::parse(batch_to_json(back).dump()))).dump());
}

}  // namespace
}  // namespace synres
