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

#ifndef SYNRES_FIXTURES_H_
#define SYNRES_FIXTURES_H_

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "synres/mask.h"

namespace synres {

// Writes `count` synthetic referring targets under `dir`: images/t<k>.ppm and
// targets.jsonl with lines {"target_id","image","mask","expression"}, image
// paths relative to `dir`. Target k gets a textured background with one
// rectangle object, its mask, and an expression built from a small
// vocabulary; every third target has no expression. Deterministic in `seed`.
// Returns the path of targets.jsonl.
std::filesystem::path fabricate_targets(const std::filesystem::path& dir, int count,
                                        Size size = {64, 48}, std::uint64_t seed = 0);

}  // namespace synres

#endif  // SYNRES_FIXTURES_H_
