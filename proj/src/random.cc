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

#include "synres/random.h"

#include <limits>

#include "synres/error.h"
#include "synres/hash.h"

namespace synres {
namespace {
constexpr std::uint64_t kGolden = 0x9e3779b97f4a7c15ULL;
}  // namespace

std::uint64_t splitmix64(std::uint64_t x) {
  x += kGolden;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

double RandomStream::uniform01() {
  return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

std::size_t RandomStream::uniform_index(std::size_t n) {
  if (n == 0) throw Error(ErrorCode::kInvalidArgument, "uniform_index(0)");
  const std::uint64_t range = n;
  // 2^64 mod range; words in the final partial bucket are redrawn.
  const std::uint64_t rem =
      (std::numeric_limits<std::uint64_t>::max() % range + 1) % range;
  const std::uint64_t reject_from = rem == 0 ? 0 : 0 - rem;
  for (;;) {
    const std::uint64_t word = next_u64();
    if (rem == 0 || word < reject_from) {
      return static_cast<std::size_t>(word % range);
    }
  }
}

CounterStream::CounterStream(std::uint64_t master_seed, std::string_view subject,
                             std::string_view stage, std::uint64_t round) {
  std::uint64_t h = fnv1a64(subject);
  h = fnv1a64(std::string_view("\x1f", 1), h);
  h = fnv1a64(stage, h);
  key_ = splitmix64(splitmix64(master_seed) ^ h ^ splitmix64(round + kGolden));
}

std::uint64_t CounterStream::next_u64() {
  return splitmix64(key_ + kGolden * counter_++);
}

std::uint64_t ScriptedStream::next_u64() {
  if (words_.empty()) return 0;
  const std::uint64_t word = words_[position_ % words_.size()];
  ++position_;
  return word;
}

std::uint64_t derive_seed_base(std::uint64_t master_seed,
                               std::string_view target_id) {
  return splitmix64(master_seed ^ fnv1a64(target_id));
}

}  // namespace synres
