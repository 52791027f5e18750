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
#include "svcenc/gop.hpp"

#include "svcenc/common.hpp"

namespace svcenc {

namespace {

// Depth-first midpoint insertion between two already coded pictures.
void bisect(GopPlan& plan, int left, int right, int level) {
  if (right - left < 2) {
    return;
  }
  const int mid = (left + right) / 2;
  PictureInfo& pic = plan.pictures[mid];
  pic.temporal_level = level;
  pic.type = PictureType::kB;
  pic.ref0 = left;
  pic.ref1 = right;
  plan.coding_order.push_back(mid);
  bisect(plan, left, mid, level + 1);
  bisect(plan, mid, right, level + 1);
}

}  // namespace

GopPlan build_gop(int frame_count, int gop_size) {
  if (frame_count < 1) {
    throw ConfigError("frame_count must be >= 1");
  }
  if (gop_size < 1 || gop_size > 16 || (gop_size & (gop_size - 1)) != 0) {
    throw ConfigError("gop_size must be one of 1, 2, 4, 8, 16");
  }

  GopPlan plan;
  plan.gop_size = gop_size;
  plan.pictures.resize(frame_count);
  for (int i = 0; i < frame_count; ++i) {
    plan.pictures[i].display = i;
  }

  // First key picture is the only I picture; later keys are P pictures
  // referencing the previous key.
  plan.pictures[0].type = PictureType::kI;
  plan.coding_order.push_back(0);

  int last_key = 0;
  for (int key = gop_size; key < frame_count; key += gop_size) {
    PictureInfo& pic = plan.pictures[key];
    pic.type = PictureType::kP;
    pic.ref0 = last_key;
    plan.coding_order.push_back(key);
    bisect(plan, last_key, key, 1);
    last_key = key;
  }

  // Open tail: frames past the last key have no closing key picture.
  for (int t = last_key + 1; t < frame_count; ++t) {
    PictureInfo& pic = plan.pictures[t];
    pic.type = PictureType::kP;
    pic.ref0 = t - 1;
    plan.coding_order.push_back(t);
  }

  return plan;
}

}  // namespace svcenc
