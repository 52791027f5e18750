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

#include <stdexcept>
#include <string>

namespace svcenc {

// Bad run configuration (CLI exit code 1).
class ConfigError : public std::runtime_error {
 public:
  explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

// File system / input data problems (CLI exit code 2).
class IoError : public std::runtime_error {
 public:
  explicit IoError(const std::string& msg) : std::runtime_error(msg) {}
};

// A lookup ran before the stage that produces its data, e.g. asking for a
// co-located decision of a layer that has not coded that frame yet.
class SequencingError : public std::logic_error {
 public:
  explicit SequencingError(const std::string& msg) : std::logic_error(msg) {}
};

}  // namespace svcenc
