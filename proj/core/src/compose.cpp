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

#include <algorithm>
#include <cstdint>
#include <deque>
#include <stdexcept>
#include <unordered_map>
#include <vector>

#include "itnkit/ops.hpp"

namespace itnkit {

namespace {

std::uint64_t pair_key(StateId a, StateId b) {
  return (static_cast<std::uint64_t>(a) << 32) | b;
}

/// Arc lookup by input label on the right-hand machine. When b's arcs are
/// ilabel-sorted (grammars after optimize always are) this is a binary
/// search with zero setup; otherwise a per-state sorted permutation is
/// built once per compose call.
class RightIndex {
 public:
  explicit RightIndex(const Fst& b) : b_(b) {
    if (b_.ilabel_sorted()) return;
    order_.resize(b_.num_states());
    for (StateId s = 0; s < b_.num_states(); ++s) {
      auto arcs = b_.arcs(s);
      order_[s].resize(arcs.size());
      for (std::uint32_t i = 0; i < arcs.size(); ++i) order_[s][i] = i;
      std::stable_sort(order_[s].begin(), order_[s].end(),
                       [&arcs](std::uint32_t x, std::uint32_t y) {
                         return arcs[x].ilabel < arcs[y].ilabel;
                       });
    }
  }

  /// Calls fn(arc) for each arc of state s with the given ilabel, in a
  /// deterministic order.
  template <typename Fn>
  void for_each(StateId s, Label ilabel, Fn&& fn) const {
    auto arcs = b_.arcs(s);
    if (b_.ilabel_sorted()) {
      auto lo = std::lower_bound(
          arcs.begin(), arcs.end(), ilabel,
          [](const Arc& arc, Label l) { return arc.ilabel < l; });
      for (auto it = lo; it != arcs.end() && it->ilabel == ilabel; ++it) {
        fn(*it);
      }
      return;
    }
    const auto& order = order_[s];
    auto lo = std::lower_bound(order.begin(), order.end(), ilabel,
                               [&arcs](std::uint32_t i, Label l) {
                                 return arcs[i].ilabel < l;
                               });
    for (auto it = lo; it != order.end() && arcs[*it].ilabel == ilabel; ++it) {
      fn(arcs[*it]);
    }
  }

 private:
  const Fst& b_;
  std::vector<std::vector<std::uint32_t>> order_;
};

}  // namespace

// Product construction with three move kinds from each pair (sa, sb):
// matching a's output byte against b's input byte, advancing a alone on an
// output-epsilon arc, and advancing b alone on an input-epsilon arc. The
// free epsilon moves can interleave in several orders, so one underlying
// path may appear multiple times; under min-plus the duplicates are
// harmless because plus is idempotent.
Fst compose(const Fst& a, const Fst& b) {
  if (!a.compiled() || !b.compiled())
    throw std::logic_error("compose: input machine is not sealed");
  Fst f;
  if (a.num_states() == 0 || b.num_states() == 0) {
    f.compile();
    return f;
  }

  RightIndex index(b);
  std::unordered_map<std::uint64_t, StateId> ids;
  std::deque<std::pair<StateId, StateId>> queue;
  auto state_of = [&](StateId sa, StateId sb) {
    auto [it, inserted] = ids.try_emplace(pair_key(sa, sb), 0);
    if (inserted) {
      it->second = f.add_state();
      queue.emplace_back(sa, sb);
    }
    return it->second;
  };

  f.set_start(state_of(a.start(), b.start()));
  while (!queue.empty()) {
    auto [sa, sb] = queue.front();
    queue.pop_front();
    StateId src = ids.at(pair_key(sa, sb));

    for (const Arc& aa : a.arcs(sa)) {
      if (aa.olabel == kEpsilon) {
        f.add_arc(src,
                  {aa.ilabel, kEpsilon, aa.weight, state_of(aa.nextstate, sb)});
      } else {
        index.for_each(sb, aa.olabel, [&](const Arc& ba) {
          f.add_arc(src, {aa.ilabel, ba.olabel, times(aa.weight, ba.weight),
                          state_of(aa.nextstate, ba.nextstate)});
        });
      }
    }
    index.for_each(sb, kEpsilon, [&](const Arc& ba) {
      f.add_arc(src,
                {kEpsilon, ba.olabel, ba.weight, state_of(sa, ba.nextstate)});
    });

    TropicalWeight wa = a.final_weight(sa);
    TropicalWeight wb = b.final_weight(sb);
    if (!wa.is_zero() && !wb.is_zero()) f.set_final(src, times(wa, wb));
  }
  f.compile();
  return f;
}

}  // namespace itnkit
