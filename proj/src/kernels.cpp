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
#include "svcenc/kernels.hpp"

#include <cassert>
#include <climits>
#include <cstdlib>
#include <vector>

namespace svcenc::kernels {

namespace {

constexpr long kNoCandidate = LONG_MAX;

inline long match_cost(const MatchResult& m) {
  return std::abs(m.mv.dx) + std::abs(m.mv.dy);
}

// Candidates reaching past the picture read border-extended samples, the
// same extension motion compensation applies.
long sad_block_clamped(const Plane& ref, const uint8_t* src, int src_stride,
                       int w, int h, int rx, int ry) {
  long acc = 0;
  for (int yy = 0; yy < h; ++yy) {
    for (int xx = 0; xx < w; ++xx) {
      acc += std::abs(static_cast<int>(src[yy * src_stride + xx]) -
                      static_cast<int>(ref.clamped(rx + xx, ry + yy)));
    }
  }
  return acc;
}

// Best candidate within one window row; used by both search variants so the
// parallel fold sees exactly the values the serial scan sees.
MatchResult scan_row(const Plane& ref, const uint8_t* src, int src_stride,
                     int w, int h, int x, int y, int cx, int dy, int range) {
  MatchResult best{{0, 0}, kNoCandidate};
  const int ry = y + dy;
  const bool row_inside = ry >= 0 && ry + h <= ref.height;
  for (int dx = cx - range; dx <= cx + range; ++dx) {
    const int rx = x + dx;
    const long sad =
        row_inside && rx >= 0 && rx + w <= ref.width
            ? sad_block(src, src_stride, ref.row(ry) + rx, ref.width, w, h)
            : sad_block_clamped(ref, src, src_stride, w, h, rx, ry);
    MatchResult cand{{dx, dy}, sad};
    if (best.sad == kNoCandidate || better_match(cand, best)) {
      best = cand;
    }
  }
  return best;
}

}  // namespace

bool better_match(const MatchResult& a, const MatchResult& b) {
  if (a.sad != b.sad) return a.sad < b.sad;
  const long ca = match_cost(a), cb = match_cost(b);
  if (ca != cb) return ca < cb;
  if (a.mv.dy != b.mv.dy) return a.mv.dy < b.mv.dy;
  return a.mv.dx < b.mv.dx;
}

long sad_block(const uint8_t* a, int a_stride, const uint8_t* b, int b_stride,
               int w, int h) {
  long acc = 0;
  for (int yy = 0; yy < h; ++yy) {
    const uint8_t* pa = a + yy * a_stride;
    const uint8_t* pb = b + yy * b_stride;
    for (int xx = 0; xx < w; ++xx) {
      acc += std::abs(static_cast<int>(pa[xx]) - static_cast<int>(pb[xx]));
    }
  }
  return acc;
}

long long ssd_block(const uint8_t* a, int a_stride, const uint8_t* b,
                    int b_stride, int w, int h) {
  long long acc = 0;
  for (int yy = 0; yy < h; ++yy) {
    const uint8_t* pa = a + yy * a_stride;
    const uint8_t* pb = b + yy * b_stride;
    for (int xx = 0; xx < w; ++xx) {
      const int d = static_cast<int>(pa[xx]) - static_cast<int>(pb[xx]);
      acc += static_cast<long long>(d) * d;
    }
  }
  return acc;
}

MatchResult full_search_serial(const Plane& ref, const uint8_t* src,
                               int src_stride, int w, int h, int x, int y,
                               MotionVector center, int range) {
  MatchResult best{{0, 0}, kNoCandidate};
  for (int dy = center.dy - range; dy <= center.dy + range; ++dy) {
    const MatchResult row =
        scan_row(ref, src, src_stride, w, h, x, y, center.dx, dy, range);
    if (best.sad == kNoCandidate || better_match(row, best)) {
      best = row;
    }
  }
  assert(best.sad != kNoCandidate);
  return best;
}

MatchResult full_search_omp(const Plane& ref, const uint8_t* src,
                            int src_stride, int w, int h, int x, int y,
                            MotionVector center, int range) {
  const int rows = 2 * range + 1;
  std::vector<MatchResult> row_best(rows, MatchResult{{0, 0}, kNoCandidate});
#pragma omp parallel for schedule(static)
  for (int r = 0; r < rows; ++r) {
    row_best[r] = scan_row(ref, src, src_stride, w, h, x, y, center.dx,
                           center.dy - range + r, range);
  }
  MatchResult best{{0, 0}, kNoCandidate};
  for (const MatchResult& row : row_best) {
    if (best.sad == kNoCandidate || better_match(row, best)) {
      best = row;
    }
  }
  assert(best.sad != kNoCandidate);
  return best;
}

MatchResult full_search(const Plane& ref, const uint8_t* src, int src_stride,
                        int w, int h, int x, int y, MotionVector center,
                        int range, bool parallel) {
  return parallel
             ? full_search_omp(ref, src, src_stride, w, h, x, y, center, range)
             : full_search_serial(ref, src, src_stride, w, h, x, y, center,
                                  range);
}

long long plane_ssd_serial(const Plane& a, const Plane& b) {
  return ssd_block(a.samples.data(), a.width, b.samples.data(), b.width,
                   a.width, a.height);
}

long long plane_ssd_omp(const Plane& a, const Plane& b) {
  long long acc = 0;
#pragma omp parallel for schedule(static) reduction(+ : acc)
  for (int yy = 0; yy < a.height; ++yy) {
    acc += ssd_block(a.row(yy), a.width, b.row(yy), b.width, a.width, 1);
  }
  return acc;
}

long long plane_ssd(const Plane& a, const Plane& b, bool parallel) {
  return parallel ? plane_ssd_omp(a, b) : plane_ssd_serial(a, b);
}

}  // namespace svcenc::kernels
