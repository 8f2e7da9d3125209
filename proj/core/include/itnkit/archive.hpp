// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <span>
#include <string>
#include <vector>

#include "itnkit/fst.hpp"

namespace itnkit {

struct NamedFst {
  std::string name;
  Fst fst;
};

/// Writes the machines to a binary archive. The byte layout is fixed and
/// little-endian, so identical machines always produce identical files.
/// Throws IoError on write failure.
void save_archive(std::span<const NamedFst> grammars, const std::string& path);

/// Reads an archive written by save_archive. Throws BadMagicError,
/// BadVersionError, TruncatedError or CorruptError depending on what is
/// wrong with the file, and IoError if it cannot be read at all. Loaded
/// machines are sealed.
std::vector<NamedFst> load_archive(const std::string& path);

}  // namespace itnkit
