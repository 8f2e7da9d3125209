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

#include <map>
#include <string>

#include "itnkit/grammar.hpp"

namespace itnkit {

/// Final weight added to each classified token. Lower wins during
/// shortest-path selection, so these constants encode class priority.
/// Values are tunable but must satisfy validate()'s constraints.
struct WeightPolicy {
  std::map<std::string, double> class_weights;
  double word_weight = 0.0;

  static WeightPolicy defaults();

  /// Enforces: every class weight in (1, 2]; "whitelist" present and
  /// strictly the minimum; word_weight > 2. The (1, 2] band guarantees
  /// longest-match behavior: one token of weight w always beats any split
  /// into two, since w1 + w2 > 2 >= w. Throws std::invalid_argument.
  void validate() const;
};

/// Root of the grammar data directory. Layout:
///   numbers/digit.tsv numbers/teen.tsv numbers/ties.tsv numbers/zero.tsv
///   ordinals/suffix-exceptions.tsv measure/units.tsv money/currency.tsv
///   date/months.tsv whitelist.tsv
struct DataDir {
  std::string root;

  std::string file(const std::string& relative) const {
    return root + "/" + relative;
  }
};

// Per-class grammar constructors. Classify grammars transduce a spoken
// span to `<class> { key: "value" ... }`; verbalize grammars consume that
// block and emit the written form. All are optimized before return.

GrammarClass cardinal_classify(const DataDir& data);
GrammarClass cardinal_verbalize();

GrammarClass ordinal_classify(const DataDir& data);
GrammarClass ordinal_verbalize();

GrammarClass decimal_classify(const DataDir& data);
GrammarClass decimal_verbalize();

GrammarClass money_classify(const DataDir& data);
GrammarClass money_verbalize();

GrammarClass measure_classify(const DataDir& data);
GrammarClass measure_verbalize();

GrammarClass date_classify(const DataDir& data);
GrammarClass date_verbalize();

GrammarClass whitelist_classify(const DataDir& data);
GrammarClass word_classify();

/// Unwraps word and whitelist tokens back to their bare value.
GrammarClass plain_verbalize();

/// Sentence-level classifier: closure over the union of all classify
/// grammars, each wrapped `tokens { ... }` and weighted per policy,
/// spoken tokens separated by one-or-more spaces, output blocks by exactly
/// one space. Accepts the empty string.
Fst classify_final(const DataDir& data, const WeightPolicy& policy);

/// Sentence-level verbalizer: closure over the union of all verbalize
/// grammars consuming `tokens { ... }` wrappers, emitting single spaces
/// between written tokens. Accepts the empty string. Takes no data: every
/// verbalizer is purely structural.
Fst verbalize_final();

}  // namespace itnkit
