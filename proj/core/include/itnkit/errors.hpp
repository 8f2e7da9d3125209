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

#include <cstddef>
#include <stdexcept>
#include <string>

namespace itnkit {

/// Base class for all itnkit errors.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A machine was queried for a path but accepts none for the given input.
class NoPathError : public Error {
 public:
  using Error::Error;
};

/// A TSV data file is malformed. Carries the 1-based line number.
class TsvError : public Error {
 public:
  TsvError(const std::string& message, std::size_t line)
      : Error(message), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

/// Tagged classifier output could not be parsed. Carries the byte offset
/// where parsing failed.
class TagParseError : public Error {
 public:
  TagParseError(const std::string& message, std::size_t offset)
      : Error(message), offset_(offset) {}
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

/// Every candidate field reordering of a tagged sentence failed to
/// verbalize.
class NoVerbalizationError : public Error {
 public:
  using Error::Error;
};

/// Evaluation corpus file is malformed. Carries the 1-based line number.
class CorpusError : public Error {
 public:
  CorpusError(const std::string& message, std::size_t line)
      : Error(message), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

/// Grammar archive errors. Each failure mode is a distinct type so callers
/// can react differently to a wrong file versus a damaged one.
class ArchiveError : public Error {
 public:
  using Error::Error;
};

/// The file does not start with the archive magic bytes.
class BadMagicError : public ArchiveError {
 public:
  using ArchiveError::ArchiveError;
};

/// The archive format version is not one this library reads.
class BadVersionError : public ArchiveError {
 public:
  using ArchiveError::ArchiveError;
};

/// The file ended before the advertised content did.
class TruncatedError : public ArchiveError {
 public:
  using ArchiveError::ArchiveError;
};

/// The content is self-inconsistent (out-of-range state, oversized label).
class CorruptError : public ArchiveError {
 public:
  using ArchiveError::ArchiveError;
};

/// The file could not be opened or read at the OS level.
class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace itnkit
