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

#include <utility>
#include <vector>

#include "svcenc/gop.hpp"
#include "svcenc/rd.hpp"
#include "svcenc/yuv.hpp"

namespace svcenc {

// Per-frame grid of finalized macroblock decisions, filled in raster order.
struct DecisionGrid {
  int mb_cols = 0;
  int mb_rows = 0;
  std::vector<MBDecision> mbs;
  std::vector<uint8_t> decided;

  // nullptr outside the grid or before the decision is made.
  const MBDecision* at(int mb_x, int mb_y) const {
    if (mb_x < 0 || mb_y < 0 || mb_x >= mb_cols || mb_y >= mb_rows) {
      return nullptr;
    }
    const size_t i = static_cast<size_t>(mb_y) * mb_cols + mb_x;
    return decided[i] ? &mbs[i] : nullptr;
  }

  void put(int mb_x, int mb_y, MBDecision d) {
    const size_t i = static_cast<size_t>(mb_y) * mb_cols + mb_x;
    mbs[i] = std::move(d);
    decided[i] = 1;
  }
};

// One quality layer: all layers share the picture resolution, each carries
// its own quantizer, threshold parameter and reconstruction state.
struct LayerContext {
  int layer_id = 0;      // 0 = base, 1..3 = enhancement
  int qp = 0;
  double gamma = 0.0;    // threshold model parameter, unused for the base layer
  std::vector<DecisionGrid> decisions;  // per display index
  std::vector<Frame> recon;             // per display index
  std::vector<uint8_t> frame_done;
};

// Threshold model parameter per enhancement layer: 0.6 / 0.9 / 1.2 for
// layers 1 / 2 / 3. Throws ConfigError for any other layer id.
double gamma_for_layer(int layer_id);

LayerContext make_layer(int layer_id, int qp, int frame_count, int width,
                        int height);

// Decision at identical macroblock coordinates in the layer below. Base
// layer queries (lower == nullptr) return nullptr; querying a frame the
// lower layer has not coded yet raises SequencingError.
const MBDecision* colocated_decision(const LayerContext* lower, int frame,
                                     int mb_x, int mb_y);

// Decisions of the co-located macroblocks in reference picture 0 and 1 of
// `frame` within the same layer; either element may be nullptr.
std::pair<const MBDecision*, const MBDecision*> reference_decisions(
    const GopPlan& plan, const LayerContext& layer, int frame, int mb_x,
    int mb_y);

}  // namespace svcenc
