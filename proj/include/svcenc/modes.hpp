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

#include <array>
#include <cstdint>

namespace svcenc {

// Macroblock coding modes in canonical order. The canonical order doubles
// as the deterministic tie-break when two candidates have equal RD cost.
enum class Mode : uint8_t {
  kSkip = 0,
  kInter16x16,
  kInter16x8,
  kInter8x16,
  kP8x8,
  kIntra16x16,
  kIntra8x8,
  kIntra4x4,
};

inline constexpr int kModeCount = 8;

inline constexpr std::array<Mode, kModeCount> kCanonicalModes = {
    Mode::kSkip,       Mode::kInter16x16, Mode::kInter16x8, Mode::kInter8x16,
    Mode::kP8x8,       Mode::kIntra16x16, Mode::kIntra8x8,  Mode::kIntra4x4,
};

// The five modes a ranked candidate list is padded with when the
// neighborhood did not supply them.
inline constexpr std::array<Mode, 5> kInterModeOrder = {
    Mode::kSkip, Mode::kInter16x16, Mode::kInter16x8, Mode::kInter8x16,
    Mode::kP8x8,
};

inline constexpr std::array<Mode, 3> kIntraModeOrder = {
    Mode::kIntra16x16, Mode::kIntra8x8, Mode::kIntra4x4,
};

// Per-quadrant sub-modes of kP8x8.
enum class SubMode : uint8_t {
  kDirect8x8 = 0,
  kSub8x8,
  kSub8x4,
  kSub4x8,
  kSub4x4,
};

// Bitmask over SubMode values restricting a P8x8 evaluation.
using SubModeMask = unsigned;
inline constexpr SubModeMask kAllSubModes = 0x1F;

constexpr SubModeMask submode_bit(SubMode s) {
  return 1u << static_cast<unsigned>(s);
}
constexpr bool submode_allowed(SubModeMask mask, SubMode s) {
  return (mask & submode_bit(s)) != 0;
}

constexpr int mode_rank(Mode m) { return static_cast<int>(m); }
constexpr bool is_intra(Mode m) { return m >= Mode::kIntra16x16; }
constexpr bool is_inter(Mode m) { return !is_intra(m); }

const char* mode_name(Mode m);

struct MotionVector {
  int dx = 0;
  int dy = 0;
  bool operator==(const MotionVector&) const = default;
};

}  // namespace svcenc
