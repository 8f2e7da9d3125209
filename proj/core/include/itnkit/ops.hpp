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
#include <functional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "itnkit/fst.hpp"

namespace itnkit {

/// Acceptor for exactly the string s: one byte per arc, identity labels.
/// accept("") is the single-state machine accepting the empty string.
Fst accept(std::string_view s);

/// Transducer mapping input to output, epsilon-padded on the shorter
/// side. The weight sits on the final state.
Fst cross(std::string_view input, std::string_view output,
          TropicalWeight w = TropicalWeight::one());

/// Consumes nothing, emits s. Equivalent to cross("", s, w).
Fst insert_str(std::string_view s, TropicalWeight w = TropicalWeight::one());

/// Consumes s, emits nothing. Equivalent to cross(s, "", w).
Fst delete_str(std::string_view s, TropicalWeight w = TropicalWeight::one());

/// Accepts one byte satisfying pred, identity-mapped.
Fst byte_class(const std::function<bool(unsigned char)>& pred);

/// Union of the two relations. Named fst_union because `union` is
/// reserved.
Fst fst_union(const Fst& a, const Fst& b);

/// Concatenation: a's relation followed by b's.
Fst concat(const Fst& a, const Fst& b);

/// Kleene star: zero or more repetitions of a.
Fst closure(const Fst& a);

/// One or more repetitions of a.
Fst closure_plus(const Fst& a);

/// Between lo and hi repetitions inclusive. Requires lo <= hi.
Fst closure(const Fst& a, std::size_t lo, std::size_t hi);

/// Union of cross(input, output, weight) over the given entries, sharing
/// input prefixes.
Fst string_map(
    const std::vector<std::tuple<std::string, std::string, TropicalWeight>>&
        entries);

/// string_map over a TSV file: column 1 is the input, column 2 the output
/// (defaults to the input when absent). Lines starting with '#' and blank
/// lines are skipped. Throws TsvError on more than two columns and IoError
/// if the file cannot be read.
Fst string_map_file(const std::string& path);

/// Relational composition: pairs (x, z) such that a maps x to some y and
/// b maps y to z, with weights combined by semiring times. Inputs must be
/// sealed.
Fst compose(const Fst& a, const Fst& b);

/// The single cheapest path from start to a final state, returned as a
/// linear machine. Path cost is the semiring product of arc weights and
/// the final weight. Ties on weight break toward fewer arcs, then toward
/// earlier arcs in state order. Throws NoPathError if no final state is
/// reachable and Error if cheapest cost is not well defined (a negative
/// cycle).
Fst shortest_path(const Fst& a);

enum class ProjectSide { kInput, kOutput };

/// Copies a with one tape's labels overwritten by the other's.
Fst project(const Fst& a, ProjectSide side);

/// Removal of epsilon:epsilon arcs, dead-state trimming, arc sorting and
/// duplicate-arc merging. Preserves the cheapest weight of every
/// input/output string pair exactly.
Fst optimize(const Fst& a);

/// Applies the transducer to text and returns the output string of the
/// cheapest path. Throws NoPathError if the grammar does not accept text.
std::string rewrite(std::string_view text, const Fst& grammar);

/// Wraps a machine so every path through it costs w more: concatenation
/// with a weighted empty-string acceptor.
Fst add_weight(const Fst& a, TropicalWeight w);

}  // namespace itnkit
