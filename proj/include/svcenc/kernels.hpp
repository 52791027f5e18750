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

#include "svcenc/modes.hpp"
#include "svcenc/yuv.hpp"

// Pixel-loop kernels. Every kernel exists twice: a plain serial reference
// and an OpenMP version. Both return bit-identical results; the parallel
// search keeps one candidate per window row and folds the rows in order
// with the same total-order comparator the serial scan uses.
namespace svcenc::kernels {

struct MatchResult {
  MotionVector mv;
  long sad = 0;
};

// Strict ordering on candidates: SAD, then |dx|+|dy|, then dy, then dx.
bool better_match(const MatchResult& a, const MatchResult& b);

long sad_block(const uint8_t* a, int a_stride, const uint8_t* b, int b_stride,
               int w, int h);

long long ssd_block(const uint8_t* a, int a_stride, const uint8_t* b,
                    int b_stride, int w, int h);

// Exhaustive scan of the (2*range+1)^2 window around center for the w x h
// block whose top-left pixel sits at (x, y). Candidates reaching past the
// picture read border-extended reference samples, matching the extension
// motion compensation applies.
MatchResult full_search_serial(const Plane& ref, const uint8_t* src,
                               int src_stride, int w, int h, int x, int y,
                               MotionVector center, int range);
MatchResult full_search_omp(const Plane& ref, const uint8_t* src,
                            int src_stride, int w, int h, int x, int y,
                            MotionVector center, int range);
MatchResult full_search(const Plane& ref, const uint8_t* src, int src_stride,
                        int w, int h, int x, int y, MotionVector center,
                        int range, bool parallel);

long long plane_ssd_serial(const Plane& a, const Plane& b);
long long plane_ssd_omp(const Plane& a, const Plane& b);
long long plane_ssd(const Plane& a, const Plane& b, bool parallel);

}  // namespace svcenc::kernels
