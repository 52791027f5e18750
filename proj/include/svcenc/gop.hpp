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

#include <vector>

#include "svcenc/yuv.hpp"

namespace svcenc {

struct PictureInfo {
  int display = 0;
  int temporal_level = 0;
  PictureType type = PictureType::kI;
  int ref0 = -1;  // display index of reference picture 0, -1 when none
  int ref1 = -1;  // display index of reference picture 1, -1 when none
};

// Hierarchical-B coding plan. Key pictures (temporal level 0) sit every
// gop_size frames and are coded first; the pictures between two keys are
// inserted by recursive bisection, each referencing the nearest already
// coded picture on either side. Trailing frames after the last key are
// coded in display order as P pictures.
struct GopPlan {
  int gop_size = 1;
  std::vector<PictureInfo> pictures;  // indexed by display order
  std::vector<int> coding_order;      // display indices in coding order

  const PictureInfo& picture(int display) const { return pictures[display]; }
  int frame_count() const { return static_cast<int>(pictures.size()); }
};

// gop_size must be one of {1, 2, 4, 8, 16}; throws ConfigError otherwise.
GopPlan build_gop(int frame_count, int gop_size);

}  // namespace svcenc
