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
#include "svcenc/synthetic.hpp"

#include "svcenc/common.hpp"

namespace svcenc {

namespace {

// splitmix64; fixed algorithm so clips are identical across platforms.
struct SplitMix64 {
  uint64_t state;
  explicit SplitMix64(uint64_t seed) : state(seed) {}
  uint64_t next() {
    uint64_t z = (state += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }
};

// Gradient overlaid with a coarse product texture; integer-only so the
// shifted copies used by the translate clip match bit-exactly.
uint8_t texture(int x, int y) {
  const int v = (x * 5 + y * 3) ^ (((x >> 2) * (y >> 2)) * 5);
  return static_cast<uint8_t>(v & 0xFF);
}

}  // namespace

SyntheticKind parse_synthetic_kind(const std::string& name) {
  if (name == "flat") return SyntheticKind::kFlat;
  if (name == "translate") return SyntheticKind::kTranslate;
  if (name == "noise") return SyntheticKind::kNoise;
  if (name == "mixed") return SyntheticKind::kMixed;
  throw ConfigError("unknown synthetic kind: " + name);
}

const char* synthetic_kind_name(SyntheticKind kind) {
  switch (kind) {
    case SyntheticKind::kFlat: return "flat";
    case SyntheticKind::kTranslate: return "translate";
    case SyntheticKind::kNoise: return "noise";
    case SyntheticKind::kMixed: return "mixed";
  }
  return "?";
}

std::vector<Frame> generate_synthetic(SyntheticKind kind, int width,
                                      int height, int frames, uint64_t seed) {
  if (frames < 1) {
    throw ConfigError("synthetic clip needs at least one frame");
  }
  std::vector<Frame> out;
  out.reserve(frames);
  for (int k = 0; k < frames; ++k) {
    Frame f = make_frame(width, height, 128, 128);
    f.display_index = k;
    switch (kind) {
      case SyntheticKind::kFlat:
        break;
      case SyntheticKind::kTranslate:
        for (int y = 0; y < height; ++y) {
          for (int x = 0; x < width; ++x) {
            f.y.at(x, y) = texture(x + 2 * k, y + k);
          }
        }
        break;
      case SyntheticKind::kNoise: {
        SplitMix64 rng(seed * 0x100000001B3ull + static_cast<uint64_t>(k));
        for (uint8_t& s : f.y.samples) {
          s = static_cast<uint8_t>(rng.next() >> 56);
        }
        break;
      }
      case SyntheticKind::kMixed: {
        for (int y = 0; y < height; ++y) {
          for (int x = 0; x < width; ++x) {
            f.y.at(x, y) = texture(x + 2 * k, y + k);
          }
        }
        SplitMix64 rng(seed * 0x100000001B3ull + static_cast<uint64_t>(k));
        for (int y = 0; y < height / 2; ++y) {
          for (int x = width / 2; x < width; ++x) {
            f.y.at(x, y) = static_cast<uint8_t>(rng.next() >> 56);
          }
        }
        break;
      }
    }
    out.push_back(std::move(f));
  }
  return out;
}

}  // namespace svcenc
