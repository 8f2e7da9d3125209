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

#include <string>

#include "itnkit/fst.hpp"

namespace itnkit {

enum class GrammarKind { kClassify, kVerbalize };

/// A compiled grammar for one semiotic class. Classify-kind grammars emit
/// a tagged token block; verbalize-kind grammars consume exactly one such
/// block and emit the written form.
struct GrammarClass {
  std::string name;  // lowercase class identifier, e.g. "decimal"
  GrammarKind kind;
  Fst fst;
};

/// Zero or more ASCII spaces, consumed and not re-emitted.
Fst delete_space();

/// One or more ASCII spaces, consumed and not re-emitted. Grammars insert
/// any needed output separator explicitly, so deletion stays pure.
Fst delete_extra_space();

/// Emits a single ASCII space from nothing.
Fst insert_space();

/// One or more bytes excluding '"', identity-mapped. Field values are
/// double-quoted with no escaping, so this reads any legal value.
Fst not_quote_plus();

/// Wraps body in a tagged block: insert("<name> { ") then body then
/// insert(" }"). Throws std::invalid_argument on an empty name.
Fst add_tokens(const Fst& body, const std::string& name);

/// Consumes the tag wrapper produced by add_tokens, leaving body's output:
/// delete("<name> { ") then body then delete(" }"). Throws
/// std::invalid_argument on an empty name.
Fst delete_tokens(const Fst& body, const std::string& name);

}  // namespace itnkit
