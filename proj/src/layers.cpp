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
#include "svcenc/layers.hpp"

#include "svcenc/common.hpp"

namespace svcenc {

double gamma_for_layer(int layer_id) {
  switch (layer_id) {
    case 1: return 0.6;
    case 2: return 0.9;
    case 3: return 1.2;
    default:
      throw ConfigError("no threshold parameter for layer " +
                        std::to_string(layer_id));
  }
}

LayerContext make_layer(int layer_id, int qp, int frame_count, int width,
                        int height) {
  if (layer_id < 0 || layer_id > 3) {
    throw ConfigError("layer_id must be in [0, 3]");
  }
  if (qp < 0 || qp > 51) {
    throw ConfigError("qp must be in [0, 51]");
  }
  LayerContext layer;
  layer.layer_id = layer_id;
  layer.qp = qp;
  layer.gamma = layer_id >= 1 ? gamma_for_layer(layer_id) : 0.0;
  layer.decisions.resize(frame_count);
  for (DecisionGrid& grid : layer.decisions) {
    grid.mb_cols = width / 16;
    grid.mb_rows = height / 16;
    grid.mbs.resize(static_cast<size_t>(grid.mb_cols) * grid.mb_rows);
    grid.decided.assign(grid.mbs.size(), 0);
  }
  layer.recon.resize(frame_count);
  layer.frame_done.assign(frame_count, 0);
  return layer;
}

const MBDecision* colocated_decision(const LayerContext* lower, int frame,
                                     int mb_x, int mb_y) {
  if (lower == nullptr) {
    return nullptr;
  }
  if (frame < 0 || frame >= static_cast<int>(lower->frame_done.size()) ||
      !lower->frame_done[frame]) {
    throw SequencingError("co-located lookup before lower layer coded frame " +
                          std::to_string(frame));
  }
  return lower->decisions[frame].at(mb_x, mb_y);
}

std::pair<const MBDecision*, const MBDecision*> reference_decisions(
    const GopPlan& plan, const LayerContext& layer, int frame, int mb_x,
    int mb_y) {
  const PictureInfo& pic = plan.picture(frame);
  const MBDecision* d0 =
      pic.ref0 >= 0 ? layer.decisions[pic.ref0].at(mb_x, mb_y) : nullptr;
  const MBDecision* d1 =
      pic.ref1 >= 0 ? layer.decisions[pic.ref1].at(mb_x, mb_y) : nullptr;
  return {d0, d1};
}

}  // namespace svcenc
