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
#include <optional>
#include <vector>

#include "svcenc/layers.hpp"
#include "svcenc/modes.hpp"
#include "svcenc/transform.hpp"
#include "svcenc/yuv.hpp"

namespace svcenc {

enum class IntraDir : uint8_t { kDC = 0, kHorizontal, kVertical };

// Fills out (stride out_stride) with the size x size prediction. top/left
// are the reconstructed neighbor edges, nullptr when unavailable. Returns
// false when a directional mode lacks its edge; DC always succeeds (mean of
// whatever is available, 128 when nothing is).
bool intra_predict(int size, const uint8_t* top, const uint8_t* left,
                   IntraDir dir, uint8_t* out, int out_stride);

// Exhaustive integer-pel block match, see kernels::full_search for the
// window and tie-break rules.
std::pair<MotionVector, long> motion_search(const uint8_t* source,
                                            int src_stride, int w, int h,
                                            const Plane& reference, int x,
                                            int y, MotionVector center,
                                            int search_range, bool parallel);

// Component-wise median of the available predictors; a single predictor is
// returned as-is, two average (truncated toward zero), none gives (0,0).
MotionVector skip_mv_predictor(std::optional<MotionVector> left,
                               std::optional<MotionVector> top,
                               std::optional<MotionVector> topright);

// One evaluated candidate mode for a macroblock.
struct CandidateResult {
  Mode mode = Mode::kSkip;
  std::array<SubMode, 4> sub_modes{};   // meaningful for kP8x8
  std::vector<MotionVector> mvs;        // actual vectors, per partition
  std::vector<MotionVector> mvds;       // transmitted differences only
  std::vector<Block4x4> levels;         // coded luma coefficient blocks
  long long ssd = 0;                    // luma SSD source vs recon
  int rate_bits = 0;
  std::array<uint8_t, 256> recon{};     // reconstructed 16x16 luma
};

// Rate model: fixed mode header (+2 bits per P8x8 sub-mode), signed
// exp-Golomb length per transmitted MVD component, coefficient bits per
// coded 4x4 block.
int estimate_bits(const CandidateResult& candidate);

// Everything a candidate evaluation needs to know about one macroblock.
// Pointers reference encoder state that outlives the evaluation; policies
// never mutate through it.
struct MbContext {
  int mb_x = 0;
  int mb_y = 0;
  int display_index = 0;

  const Plane* source = nullptr;  // original luma
  const Plane* recon = nullptr;   // current frame reconstruction (decided area)
  const Plane* ref0 = nullptr;    // reference picture 0 luma, nullptr if none
  const Plane* ref1 = nullptr;    // reference picture 1 luma, nullptr if none

  const DecisionGrid* cur_grid = nullptr;   // current frame, partially filled
  const DecisionGrid* prev_grid = nullptr;  // nearest coded predecessor frame
  const DecisionGrid* ref0_grid = nullptr;  // decisions in reference picture 0
  const DecisionGrid* ref1_grid = nullptr;  // decisions in reference picture 1
  const DecisionGrid* lower_grid = nullptr; // co-located grid of the layer below

  PictureType ptype = PictureType::kI;
  int layer_id = 0;
  int qp = 0;
  double lambda = 0.0;
  int search_range = 8;
  bool parallel_kernels = false;

  int px() const { return mb_x * 16; }
  int py() const { return mb_y * 16; }
};

// Evaluates one candidate mode: prediction, residual transform/quant,
// reconstruction, rate estimate. Returns nullopt when the mode is not
// available here (inter on an I picture). submodes restricts the P8x8
// quadrant search space.
std::optional<CandidateResult> encode_mb_with_mode(
    const MbContext& ctx, Mode mode, SubModeMask submodes = kAllSubModes);

// Partition rectangles of a decision in luma pixels relative to the MB
// origin, paired with their motion vectors in mvs order.
struct PartitionMv {
  int x = 0, y = 0, w = 0, h = 0;
  MotionVector mv;
};
std::vector<PartitionMv> partition_layout(Mode mode,
                                          const std::array<SubMode, 4>& subs,
                                          const std::vector<MotionVector>& mvs);

}  // namespace svcenc
