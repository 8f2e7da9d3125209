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
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "itnkit/fst.hpp"
#include "itnkit/grammars_en.hpp"

namespace itnkit {

/// One tagged token from the classifier: class name plus ordered
/// key/value fields. preserve_order pins the field order through
/// verbalization (used by dates, where output word order follows input).
struct Token {
  std::string class_name;
  std::vector<std::pair<std::string, std::string>> fields;
  bool preserve_order = false;

  bool operator==(const Token&) const = default;
};

/// Parses the classifier's tagged serialization into tokens. The
/// `preserve_order: true` marker is consumed into the flag, not kept as a
/// field. Throws TagParseError with a byte offset on malformed input;
/// that always signals a grammar bug, never bad user text.
std::vector<Token> parse_tagged(std::string_view tagged);

/// Re-serializes tokens in the given field order, the exact inverse of
/// parse_tagged.
std::string serialize_tokens(const std::vector<Token>& tokens);

/// Lazily enumerates candidate serializations of the token list under
/// per-token field reorderings. A preserve_order token keeps its original
/// order; any other token contributes every permutation of its fields,
/// identity first, then ascending by permutation index. Candidates come
/// out in lexicographic order of the per-token permutation indices, so
/// the fully-original serialization is always yielded first. The sequence
/// ends after kMaxCandidates yields.
class ReorderingGenerator {
 public:
  static constexpr std::size_t kMaxCandidates = 1000;

  explicit ReorderingGenerator(std::vector<Token> tokens);

  /// Next candidate serialization, or nullopt when exhausted.
  std::optional<std::string> next();

 private:
  std::vector<Token> tokens_;
  // Per token: every admissible field order, as index vectors.
  std::vector<std::vector<std::vector<std::size_t>>> orders_;
  std::vector<std::size_t> odometer_;
  std::size_t yielded_ = 0;
  bool exhausted_ = false;
};

/// The two compiled sentence-level grammars plus the four-stage pipeline
/// around them. Immutable once constructed; safe to share across threads.
class InverseNormalizer {
 public:
  /// Builds both grammars from TSV data.
  static InverseNormalizer from_data_dir(
      const DataDir& data, const WeightPolicy& policy = WeightPolicy::defaults());

  /// Loads precompiled grammars from an archive written by export. The
  /// archive must contain machines named "classify" and "verbalize";
  /// anything else is a CorruptError.
  static InverseNormalizer from_archive(const std::string& path);

  /// Spoken text to tagged serialization.
  std::string classify(std::string_view text) const;

  /// One candidate serialization to written text. Throws NoPathError when
  /// the verbalizer rejects this field order.
  std::string verbalize(std::string_view serialization) const;

  /// classify, parse, then verbalize the first reordering that succeeds.
  /// Throws NoVerbalizationError if every candidate fails.
  std::string inverse_normalize(std::string_view text) const;

  const Fst& classify_fst() const { return classify_; }
  const Fst& verbalize_fst() const { return verbalize_; }

 private:
  InverseNormalizer(Fst classify, Fst verbalize);

  Fst classify_;
  Fst verbalize_;
};

}  // namespace itnkit
