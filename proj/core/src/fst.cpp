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

#include "itnkit/fst.hpp"

#include <stdexcept>

namespace itnkit {

void Fst::check_mutable() const {
  if (compiled_) throw std::logic_error("Fst is sealed; mutation refused");
}

void Fst::check_state(StateId s) const {
  if (s >= arcs_.size()) throw std::out_of_range("state id out of range");
}

StateId Fst::add_state() {
  check_mutable();
  arcs_.emplace_back();
  final_.push_back(TropicalWeight::zero());
  return static_cast<StateId>(arcs_.size() - 1);
}

void Fst::set_start(StateId s) {
  check_mutable();
  check_state(s);
  start_ = s;
}

void Fst::set_final(StateId s, TropicalWeight w) {
  check_mutable();
  check_state(s);
  final_[s] = w;
}

void Fst::add_arc(StateId src, const Arc& arc) {
  check_mutable();
  check_state(src);
  check_state(arc.nextstate);
  if (arc.ilabel > kMaxLabel || arc.olabel > kMaxLabel)
    throw std::out_of_range("arc label out of byte range");
  arcs_[src].push_back(arc);
}

void Fst::compile() {
  check_mutable();
  if (!arcs_.empty() && start_ == kNoState)
    throw std::logic_error("Fst has states but no start state");
  ilabel_sorted_ = true;
  for (const auto& state_arcs : arcs_) {
    for (std::size_t i = 1; i < state_arcs.size(); ++i) {
      if (state_arcs[i - 1].ilabel > state_arcs[i].ilabel) {
        ilabel_sorted_ = false;
        break;
      }
    }
    if (!ilabel_sorted_) break;
  }
  compiled_ = true;
}

std::size_t Fst::num_arcs() const {
  std::size_t n = 0;
  for (const auto& a : arcs_) n += a.size();
  return n;
}

std::span<const Arc> Fst::arcs(StateId s) const {
  check_state(s);
  return arcs_[s];
}

TropicalWeight Fst::final_weight(StateId s) const {
  check_state(s);
  return final_[s];
}

std::vector<std::pair<StateId, TropicalWeight>> Fst::finals() const {
  std::vector<std::pair<StateId, TropicalWeight>> out;
  for (StateId s = 0; s < arcs_.size(); ++s) {
    if (!final_[s].is_zero()) out.emplace_back(s, final_[s]);
  }
  return out;
}

}  // namespace itnkit
