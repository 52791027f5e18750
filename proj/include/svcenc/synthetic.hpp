/* ------------------------------------------------------------------
 * Copyright (C) 2026 svcenc project
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *      http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either
 * express or implied.
 * See the License for the specific language governing permissions
 * and limitations under the License.
 * -------------------------------------------------------------------
 */
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "svcenc/yuv.hpp"

namespace svcenc {

// Deterministic test clips:
//   flat      constant luma 128
//   translate textured pattern moving (2,1) pixels per frame
//   noise     per-frame independent pseudo-random texture from a fixed seed
//   mixed     translate with a noise quadrant (top-right)
enum class SyntheticKind { kFlat, kTranslate, kNoise, kMixed };

SyntheticKind parse_synthetic_kind(const std::string& name);
const char* synthetic_kind_name(SyntheticKind kind);

std::vector<Frame> generate_synthetic(SyntheticKind kind, int width,
                                      int height, int frames,
                                      uint64_t seed = 1);

}  // namespace svcenc
