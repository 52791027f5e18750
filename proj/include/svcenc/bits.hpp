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
#include "svcenc/transform.hpp"

namespace svcenc {

// Length in bits of the unsigned exp-Golomb code for code_num.
int ue_bits(uint32_t code_num);

// Length in bits of the signed exp-Golomb code: 0 -> 1, +-1 -> 3, +-2 -> 5...
int se_bits(int value);

// Fixed per-mode header cost. P8x8 additionally pays 2 bits per quadrant
// sub-mode (see estimate_bits).
int mode_header_bits(Mode mode);

inline constexpr int kSubModeHeaderBits = 2;

// Coefficient cost of one quantized 4x4 block: each nonzero level pays its
// signed exp-Golomb length plus one significance flag bit. All-zero blocks
// cost nothing.
int coeff_bits(const Block4x4& levels);

}  // namespace svcenc
