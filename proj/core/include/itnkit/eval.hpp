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
#include <string>
#include <vector>

#include "itnkit/pipeline.hpp"

namespace itnkit {

/// One scored token: the pipeline gets the spoken side, the written side
/// is the reference.
struct EvalRecord {
  std::string semiotic_class;  // uppercase, e.g. "CARDINAL"
  std::string spoken;
  std::string written;

  bool operator==(const EvalRecord&) const = default;
};

using EvalSentence = std::vector<EvalRecord>;

/// Reads a corpus file: one `CLASS<TAB>written<TAB>spoken` line per token,
/// sentences ended by a literal `<eos>\t<eos>` line. `<self>` in the
/// spoken column means the spoken form equals the written form; rows whose
/// spoken side is "sil" are silence markers and are skipped. Tokens whose
/// two sides coincide are relabeled PLAIN. Throws CorpusError with a line
/// number on malformed input, IoError if the file cannot be read.
std::vector<EvalSentence> load_corpus(const std::string& path);

/// Word error rate: word-level Levenshtein distance between hypothesis
/// and reference divided by the reference word count, words split on
/// single spaces. Both empty is 0; an empty reference against a nonempty
/// hypothesis has no defined rate and throws std::invalid_argument. The
/// value may exceed 1 (more errors than reference words).
double wer(const std::string& hypothesis, const std::string& reference);

struct ClassStats {
  std::size_t tokens = 0;
  std::size_t correct = 0;
  std::size_t edit_distance = 0;  // summed word-level distance
  std::size_t reference_words = 0;
  bool covered = true;  // false when no grammar handles the class

  double accuracy_percent() const {
    return tokens == 0 ? 0.0 : 100.0 * static_cast<double>(correct) /
                                   static_cast<double>(tokens);
  }
  double wer_percent() const {
    return reference_words == 0
               ? 0.0
               : 100.0 * static_cast<double>(edit_distance) /
                     static_cast<double>(reference_words);
  }
};

struct EvalReport {
  /// Per-class rows in display order, SENTENCE aggregated separately.
  std::vector<std::pair<std::string, ClassStats>> classes;
  ClassStats sentence;

  /// Aligned plain-text table: class, token count, accuracy %, WER %.
  std::string table() const;

  /// Machine-readable lines: class<TAB>count<TAB>accuracy<TAB>wer.
  std::string machine_lines() const;
};

/// Runs inverse_normalize on every record's spoken side and scores
/// exact-match accuracy and WER per class plus a SENTENCE row over
/// space-joined sentences. A pipeline failure falls back to the raw
/// spoken string as hypothesis, so evaluation itself never throws on a
/// loadable corpus.
EvalReport evaluate(const std::vector<EvalSentence>& corpus,
                    const InverseNormalizer& pipeline);

}  // namespace itnkit
