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
#include "svcenc/bits.hpp"

namespace svcenc {

int ue_bits(uint32_t code_num) {
  int leading = 0;
  uint32_t v = code_num + 1;
  while (v > 1) {
    v >>= 1;
    ++leading;
  }
  return 2 * leading + 1;
}

int se_bits(int value) {
  const uint32_t code_num =
      value > 0 ? 2u * static_cast<uint32_t>(value)
                : 2u * static_cast<uint32_t>(-static_cast<long long>(value)) -
                      (value < 0 ? 1u : 0u);
  return ue_bits(value == 0 ? 0u : code_num);
}

int mode_header_bits(Mode mode) {
  switch (mode) {
    case Mode::kSkip: return 1;
    case Mode::kInter16x16: return 3;
    case Mode::kInter16x8: return 4;
    case Mode::kInter8x16: return 4;
    case Mode::kP8x8: return 5;
    case Mode::kIntra16x16: return 4;
    case Mode::kIntra8x8: return 6;
    case Mode::kIntra4x4: return 6;
  }
  return 6;
}

int coeff_bits(const Block4x4& levels) {
  int bits = 0;
  for (int32_t level : levels) {
    if (level != 0) {
      bits += se_bits(level) + 1;
    }
  }
  return bits;
}

const char* mode_name(Mode m) {
  switch (m) {
    case Mode::kSkip: return "SKIP";
    case Mode::kInter16x16: return "INTER_16x16";
    case Mode::kInter16x8: return "INTER_16x8";
    case Mode::kInter8x16: return "INTER_8x16";
    case Mode::kP8x8: return "P8x8";
    case Mode::kIntra16x16: return "INTRA_16x16";
    case Mode::kIntra8x8: return "INTRA_8x8";
    case Mode::kIntra4x4: return "INTRA_4x4";
  }
  return "?";
}

}  // namespace svcenc
