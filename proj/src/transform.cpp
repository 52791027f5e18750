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
#include "svcenc/transform.hpp"

#include <cmath>

namespace svcenc {

namespace {

// Row squared norms of the forward matrix: (1,1,1,1)->4, (2,1,-1,-2)->10.
constexpr double kNorm[4] = {4.0, 10.0, 4.0, 10.0};

inline int32_t round_half_away(double v) {
  return static_cast<int32_t>(v < 0.0 ? std::ceil(v - 0.5)
                                      : std::floor(v + 0.5));
}

// Y = C * X * C^T with C = [1 1 1 1; 2 1 -1 -2; 1 -1 -1 1; 1 -2 2 -1],
// computed as the usual two-stage butterfly.
void forward_core(const Block4x4& x, int32_t y[16]) {
  int32_t tmp[16];
  for (int i = 0; i < 4; ++i) {
    const int32_t s0 = x[i * 4 + 0] + x[i * 4 + 3];
    const int32_t s1 = x[i * 4 + 1] + x[i * 4 + 2];
    const int32_t d0 = x[i * 4 + 0] - x[i * 4 + 3];
    const int32_t d1 = x[i * 4 + 1] - x[i * 4 + 2];
    tmp[i * 4 + 0] = s0 + s1;
    tmp[i * 4 + 1] = 2 * d0 + d1;
    tmp[i * 4 + 2] = s0 - s1;
    tmp[i * 4 + 3] = d0 - 2 * d1;
  }
  for (int j = 0; j < 4; ++j) {
    const int32_t s0 = tmp[0 * 4 + j] + tmp[3 * 4 + j];
    const int32_t s1 = tmp[1 * 4 + j] + tmp[2 * 4 + j];
    const int32_t d0 = tmp[0 * 4 + j] - tmp[3 * 4 + j];
    const int32_t d1 = tmp[1 * 4 + j] - tmp[2 * 4 + j];
    y[0 * 4 + j] = s0 + s1;
    y[1 * 4 + j] = 2 * d0 + d1;
    y[2 * 4 + j] = s0 - s1;
    y[3 * 4 + j] = d0 - 2 * d1;
  }
}

}  // namespace

double qstep(int qp) { return std::exp2((qp - 4) / 6.0); }

Block4x4 transform_quant(const Block4x4& residual, int qp) {
  int32_t coeff[16];
  forward_core(residual, coeff);
  const double step = qstep(qp);
  Block4x4 levels;
  for (int i = 0; i < 16; ++i) {
    levels[i] = round_half_away(coeff[i] / step);
  }
  return levels;
}

Block4x4 inverse_quant_transform(const Block4x4& levels, int qp) {
  const double step = qstep(qp);
  // V = D^-1 * (levels * step) * D^-1, then X = C^T * V * C. The diagonal
  // D = diag(4,10,4,10) carries the basis norms the integer forward matrix
  // leaves unnormalized.
  double v[16];
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      v[i * 4 + j] = levels[i * 4 + j] * step / (kNorm[i] * kNorm[j]);
    }
  }
  static constexpr int kC[4][4] = {
      {1, 1, 1, 1}, {2, 1, -1, -2}, {1, -1, -1, 1}, {1, -2, 2, -1}};
  double tmp[16];  // C^T * V
  for (int a = 0; a < 4; ++a) {
    for (int j = 0; j < 4; ++j) {
      double acc = 0.0;
      for (int i = 0; i < 4; ++i) {
        acc += kC[i][a] * v[i * 4 + j];
      }
      tmp[a * 4 + j] = acc;
    }
  }
  Block4x4 out;
  for (int a = 0; a < 4; ++a) {
    for (int b = 0; b < 4; ++b) {
      double acc = 0.0;
      for (int j = 0; j < 4; ++j) {
        acc += tmp[a * 4 + j] * kC[j][b];
      }
      out[a * 4 + b] = round_half_away(acc);
    }
  }
  return out;
}

}  // namespace svcenc
