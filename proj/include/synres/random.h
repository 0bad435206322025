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

#ifndef SYNRES_RANDOM_H_
#define SYNRES_RANDOM_H_

#include <cstddef>
#include <cstdint>
#include <string_view>
#include <vector>

namespace synres {

std::uint64_t splitmix64(std::uint64_t x);

// Source of uniform 64-bit words. Derived helpers are non-virtual so that
// every stream maps words to draws identically.
class RandomStream {
 public:
  virtual ~RandomStream() = default;
  virtual std::uint64_t next_u64() = 0;

  // In [0, 1), 53-bit resolution. A word of 0 yields exactly 0.0.
  double uniform01();
  // In [0, n). Rejection-sampled; a word w < n yields exactly w.
  std::size_t uniform_index(std::size_t n);
  bool bernoulli(double p) { return uniform01() < p; }
};

// Counter-based stream: word k is splitmix64(key + k * golden). Keyed by
// (master seed, subject id, stage tag, round) so results never depend on
// thread scheduling.
class CounterStream final : public RandomStream {
 public:
  explicit CounterStream(std::uint64_t key) : key_(key) {}
  CounterStream(std::uint64_t master_seed, std::string_view subject,
                std::string_view stage, std::uint64_t round);

  std::uint64_t next_u64() override;
  std::uint64_t key() const { return key_; }

 private:
  std::uint64_t key_;
  std::uint64_t counter_ = 0;
};

// Replays a fixed word sequence, cycling when exhausted. Test double used to
// force specific draws.
class ScriptedStream final : public RandomStream {
 public:
  explicit ScriptedStream(std::vector<std::uint64_t> words)
      : words_(std::move(words)) {}
  std::uint64_t next_u64() override;
  std::size_t consumed() const { return position_; }

 private:
  std::vector<std::uint64_t> words_;
  std::size_t position_ = 0;
};

// Per-target seed base: consecutive generation seeds start here.
std::uint64_t derive_seed_base(std::uint64_t master_seed,
                               std::string_view target_id);

}  // namespace synres

#endif  // SYNRES_RANDOM_H_
