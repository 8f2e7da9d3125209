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

#include <cstdint>
#include <span>
#include <vector>

#include "itnkit/weight.hpp"

namespace itnkit {

/// Arc label. Labels 1..255 are UTF-8 bytes; 0 is epsilon. Valid UTF-8
/// never contains a NUL byte, so the epsilon value cannot collide with
/// real input.
using Label = std::uint16_t;
inline constexpr Label kEpsilon = 0;
inline constexpr Label kMaxLabel = 255;

using StateId = std::uint32_t;
inline constexpr StateId kNoState = static_cast<StateId>(-1);

struct Arc {
  Label ilabel = kEpsilon;
  Label olabel = kEpsilon;
  TropicalWeight weight = TropicalWeight::one();
  StateId nextstate = kNoState;

  bool operator==(const Arc&) const = default;
};

/// Weighted finite-state transducer over byte labels with tropical
/// weights. States are dense integers. A machine is built by mutation,
/// then sealed with compile(); every algorithm in this library takes and
/// returns sealed machines, so a sealed machine is immutable from then on.
class Fst {
 public:
  Fst() = default;

  StateId add_state();
  void set_start(StateId s);
  /// Marks s final with the given weight. TropicalWeight::zero() unmarks.
  void set_final(StateId s, TropicalWeight w = TropicalWeight::one());
  void add_arc(StateId src, const Arc& arc);

  /// Seals the machine. Mutation afterwards throws std::logic_error.
  /// Requires a start state unless the machine has no states at all.
  void compile();
  bool compiled() const { return compiled_; }

  /// True when every state's arcs are nondecreasing by ilabel (always the
  /// case after optimize). Computed once at compile() so composition can
  /// binary-search instead of indexing.
  bool ilabel_sorted() const { return ilabel_sorted_; }

  StateId start() const { return start_; }
  std::size_t num_states() const { return arcs_.size(); }
  std::size_t num_arcs() const;
  std::span<const Arc> arcs(StateId s) const;
  TropicalWeight final_weight(StateId s) const;
  bool is_final(StateId s) const { return !final_weight(s).is_zero(); }

  /// Final states in ascending order with their weights.
  std::vector<std::pair<StateId, TropicalWeight>> finals() const;

  bool operator==(const Fst&) const = default;

 private:
  void check_mutable() const;
  void check_state(StateId s) const;

  std::vector<std::vector<Arc>> arcs_;
  std::vector<TropicalWeight> final_;
  StateId start_ = kNoState;
  bool compiled_ = false;
  bool ilabel_sorted_ = false;
};

}  // namespace itnkit
