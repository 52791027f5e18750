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

// One 4x4 residual/coefficient block in raster order.
using Block4x4 = std::array<int32_t, 16>;

// Quantizer step size, doubling every 6 QP: 2^((qp-4)/6).
double qstep(int qp);

// Forward 4x4 integer transform (1,2-weighted butterfly) followed by uniform
// scalar quantization with step qstep(qp), rounding half away from zero.
Block4x4 transform_quant(const Block4x4& residual, int qp);

// Exact inverse: rescale the levels, undo the transform with the basis-norm
// normalization folded in, round to integer residual. For any input the
// per-sample round-trip error stays below qstep(qp) for qp >= 2.
Block4x4 inverse_quant_transform(const Block4x4& levels, int qp);

}  // namespace svcenc
