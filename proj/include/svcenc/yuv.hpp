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
#include <string>
#include <vector>

namespace svcenc {

// One 8-bit sample plane in raster order.
struct Plane {
  int width = 0;
  int height = 0;
  std::vector<uint8_t> samples;

  uint8_t at(int x, int y) const { return samples[y * width + x]; }
  uint8_t& at(int x, int y) { return samples[y * width + x]; }

  // Border-extended read; motion compensation may point outside the picture.
  uint8_t clamped(int x, int y) const {
    if (x < 0) x = 0;
    if (x >= width) x = width - 1;
    if (y < 0) y = 0;
    if (y >= height) y = height - 1;
    return samples[y * width + x];
  }

  const uint8_t* row(int y) const { return samples.data() + y * width; }
  uint8_t* row(int y) { return samples.data() + y * width; }

  void fill(uint8_t v) { samples.assign(samples.size(), v); }
};

Plane make_plane(int width, int height, uint8_t fill = 0);

enum class PictureType : uint8_t { kI, kP, kB };

const char* picture_type_name(PictureType t);

// Planar 4:2:0 picture plus coding metadata.
struct Frame {
  Plane y;
  Plane cb;
  Plane cr;
  int display_index = 0;
  int temporal_level = 0;
  PictureType picture_type = PictureType::kI;
};

// Allocates a zeroed frame; luma dimensions must be multiples of 16.
Frame make_frame(int width, int height, uint8_t luma = 0, uint8_t chroma = 128);

// Reads raw headerless I420 data. Returns min(max_frames, frames available)
// whole frames; a trailing partial frame is dropped. max_frames <= 0 reads
// everything. Throws IoError when the file is missing or holds less than one
// whole frame.
std::vector<Frame> read_sequence(const std::string& path, int width, int height,
                                 int max_frames);

// Appends every frame as raw I420, the exact inverse of read_sequence.
void write_sequence(const std::string& path, const std::vector<Frame>& frames);

// 10*log10(255^2 / MSE), capped at 99.0 dB when the planes are identical.
double psnr(const Plane& reference, const Plane& test);

inline constexpr double kPsnrCap = 99.0;

}  // namespace svcenc
